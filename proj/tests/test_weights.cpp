#include <doctest.h>

#include <random>

#include "checks.hpp"
#include "dwlat/error.hpp"
#include "dwlat/weights.hpp"

using namespace dwlat;

TEST_CASE("evaluation and level") {
  const auto a1 = build_affine("A1-1");
  const Weight w0 = fundamental_weight(a1, 0);
  CHECK(w0 == Weight(1, {Rational(0), Rational(0)}));
  CHECK(evaluate(a1, w0, 0) == 1);
  CHECK(evaluate(a1, w0, 1) == 0);
  const Weight shifted = add_root(a1, w0, RootVector{3, 3});
  CHECK(evaluate(a1, shifted, 0) == 1);
  CHECK(evaluate(a1, shifted, 1) == 0);
  CHECK(level(a1, w0) == 1);
  CHECK(level(a1, weight_from_labels(a1, {1, 1})) == 2);
  CHECK(level(a1, shifted) == level(a1, w0));
  CHECK_THROWS_AS(evaluate(a1, w0, 2), Error);
}

TEST_CASE("weights from labels") {
  const auto a1 = build_affine("A1-1");
  CHECK(weight_from_labels(a1, {1, 0}) == Weight(1, {Rational(0), Rational(0)}));
  CHECK(weight_from_labels(a1, {0, 1}) == Weight(1, {Rational(0), Rational(1, 2)}));
  CHECK(fundamental_weight(a1, 1) == Weight(1, {Rational(0), Rational(1, 2)}));
  CHECK(difference(a1, weight_from_labels(a1, {2, 3}, Rational(1)), weight_from_labels(a1, {2, 3})) == RootVector{1, 1});
  CHECK_THROWS_AS(fundamental_weight(a1, 2), Error);

  for (const auto& id : catalog(6)) {
    const auto d = build_affine(id);
    for (int i = 0; i < d.size(); ++i) {
      const Weight w = fundamental_weight(d, i);
      for (int j = 0; j < d.size(); ++j) CHECK(evaluate(d, w, j) == (i == j ? 1 : 0));
      CHECK(level(d, w) == d.comark(i));
    }
  }
}

TEST_CASE("labels and canonical coordinates invert each other") {
  std::mt19937_64 rng(17);
  for (const auto& t : checks::sweep_types()) {
    const auto d = build_affine(t);
    for (int s = 0; s < 50; ++s) {
      std::vector<std::int64_t> k(static_cast<std::size_t>(d.size()));
      for (auto& x : k) x = std::uniform_int_distribution<std::int64_t>(-3, 4)(rng);
      const Rational shift(std::uniform_int_distribution<int>(-9, 9)(rng), std::uniform_int_distribution<int>(1, 4)(rng));
      const Weight w = weight_from_labels(d, k, shift);
      CHECK(labels(d, w) == k);
      CHECK(delta_shift(d, w) == shift);
      CHECK(weight_from_labels(d, labels(d, w), delta_shift(d, w)) == w);
    }
  }
}

TEST_CASE("dominance") {
  const auto a1 = build_affine("A1-1");
  const Weight w0 = fundamental_weight(a1, 0);
  CHECK(is_dominant(a1, w0));
  CHECK_FALSE(is_dominant(a1, add_root(a1, w0, RootVector{1, 0}, -1)));
  CHECK(is_dominant(a1, add_root(a1, w0, RootVector{1, 1})));
  CHECK_FALSE(is_dominant(a1, Weight(1, {Rational(1, 3), Rational(0)})));  // labels not integral
  CHECK(difference(a1, w0, w0) == RootVector{0, 0});
  CHECK(difference(a1, weight_from_labels(a1, {0, 2}), weight_from_labels(a1, {2, 0})) == RootVector{0, 1});
  CHECK_FALSE(difference(a1, w0, fundamental_weight(a1, 1)).has_value());  // half-integral gap
  CHECK_FALSE(difference(a1, w0, weight_from_labels(a1, {1, 1})).has_value());  // different levels
  CHECK(dominance_leq(a1, w0, w0));
  CHECK(dominance_leq(a1, add_root(a1, w0, RootVector{1, 1}, -1), w0));
  CHECK_FALSE(dominance_leq(a1, w0, add_root(a1, w0, RootVector{1, 1}, -1)));
  CHECK_FALSE(dominance_leq(a1, w0, weight_from_labels(a1, {2, 0})));
}

TEST_CASE("delta translation preserves the order") {
  std::mt19937_64 rng(23);
  for (const auto& t : checks::sweep_types()) {
    const auto d = build_affine(t);
    const RootVector delta = canonical_imaginary_root(d);
    for (const auto& [a, b] : sample_pairs(d, 2, 30, rng())) {
      CHECK(dominance_leq(d, b, a) == dominance_leq(d, add_root(d, b, delta), add_root(d, a, delta)));
      CHECK(dominance_leq(d, a, b) == dominance_leq(d, add_root(d, a, delta, -1), add_root(d, b, delta, -1)));
    }
  }
}

TEST_CASE("meet and join examples") {
  const auto a3 = build_affine("A3-1");
  const Weight lambda = weight_from_labels(a3, {0, 2, 1, 1});
  const Weight mu = add_root(a3, lambda, RootVector{0, 1, 0, 0}, -1);
  const Weight mu2 = add_root(a3, lambda, RootVector{0, 0, 1, 1}, -1);
  CHECK(meet(a3, mu, mu2) == add_root(a3, lambda, RootVector{0, 1, 1, 1}, -1));
  CHECK(join(a3, mu, mu2) == lambda);
  const Weight down = add_root(a3, lambda, canonical_imaginary_root(a3), -1);
  CHECK(meet(a3, lambda, lambda) == lambda);
  CHECK(join(a3, lambda, lambda) == lambda);
  CHECK(meet(a3, lambda, down) == down);
  CHECK(join(a3, lambda, down) == lambda);

  try {
    meet(a3, lambda, weight_from_labels(a3, {1, 0, 0, 0}));
    FAIL("expected a component mismatch");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::ComponentMismatch);
  }
  CHECK_THROWS_AS(join(a3, lambda, weight_from_labels(a3, {1, 2, 1, 1})), Error);
}

TEST_CASE("lattice axioms and oracle bounds") {
  for (const auto& t : checks::sweep_types()) {
    CAPTURE(t);
    const auto c = checks::lattice_suite(build_affine(t), 30, 41);
    CHECK(c.checked >= 30);
    CHECK(c.violations == 0);
    for (const auto& e : c.examples) MESSAGE(e);
  }
}

TEST_CASE("canonical ids and ordering") {
  const auto a1 = build_affine("A1-1");
  CHECK(canonical_id(a1, weight_from_labels(a1, {2, 0}, Rational(-1, 2))) == "2,0|-1/2");
  CHECK(canonical_id(a1, fundamental_weight(a1, 0)) == "1,0|0/1");
  const Weight a = weight_from_labels(a1, {1, 0});
  const Weight b = weight_from_labels(a1, {0, 1});
  const Weight c = weight_from_labels(a1, {1, 0}, Rational(1));
  CHECK(canonical_less(a1, b, a));
  CHECK(canonical_less(a1, a, c));
  CHECK_FALSE(canonical_less(a1, a, a));
}
