#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>

#include "dwlat/error.hpp"
#include "dwlat/roots.hpp"

using namespace dwlat;

namespace {

std::vector<int> matrix(const AffineDiagram& d) {
  std::vector<int> m;
  for (int i = 0; i < d.size(); ++i)
    for (int j = 0; j < d.size(); ++j) m.push_back(d.a(i, j));
  return m;
}

std::vector<int> as_vector(std::span<const int> s) { return {s.begin(), s.end()}; }

}  // namespace

TEST_CASE("type ids") {
  CHECK(AffineTypeId::parse("A2-1") == AffineTypeId{'A', 2, 1});
  CHECK(AffineTypeId::parse("D4-3").str() == "D4-3");
  CHECK(AffineTypeId{'A', 1, 1}.valid());
  CHECK(AffineTypeId{'G', 2, 1}.valid());
  CHECK_FALSE(AffineTypeId{'B', 3, 3}.valid());
  CHECK_FALSE(AffineTypeId{'B', 2, 1}.valid());
  CHECK_FALSE(AffineTypeId{'D', 3, 1}.valid());
  CHECK_FALSE(AffineTypeId{'E', 9, 1}.valid());
  CHECK_FALSE(AffineTypeId{'A', 1, 2}.valid());
  CHECK_FALSE(AffineTypeId{'A', 3, 2}.valid());
  CHECK(AffineTypeId{'A', 5, 2}.valid());
  for (const char* bad : {"a2-1", "A2", "A-1", "A2-4", "X3-1", "A2-1x", ""})
    CHECK_THROWS_AS(build_affine(std::string_view(bad)), Error);
  try {
    build_affine("B3-3");
    FAIL("expected an error");
  } catch (const Error& e) {
    CHECK(e.code() == ErrorCode::UnknownType);
  }
}

TEST_CASE("catalog examples") {
  const auto a2 = build_affine("A2-1");
  CHECK(matrix(a2) == std::vector<int>{2, -1, -1, -1, 2, -1, -1, -1, 2});
  CHECK(as_vector(a2.marks()) == std::vector<int>{1, 1, 1});
  CHECK(as_vector(a2.comarks()) == std::vector<int>{1, 1, 1});
  CHECK(canonical_imaginary_root(a2) == RootVector{1, 1, 1});
  CHECK(canonical_central_element(a2) == std::vector<std::int64_t>{1, 1, 1});

  const auto a1 = build_affine("A1-1");
  CHECK(matrix(a1) == std::vector<int>{2, -2, -2, 2});
  CHECK(canonical_imaginary_root(a1) == RootVector{1, 1});
  CHECK(canonical_central_element(a1) == std::vector<std::int64_t>{1, 1});

  // Triple bond between the two non-affine vertices; labels from Kac's table.
  const auto d43 = build_affine("D4-3");
  CHECK(d43.size() == 3);
  CHECK(d43.a(1, 2) * d43.a(2, 1) == 3);
  CHECK(d43.a(0, 2) == 0);
  CHECK(as_vector(d43.marks()) == std::vector<int>{1, 2, 1});
  CHECK(as_vector(d43.comarks()) == std::vector<int>{1, 2, 3});

  CHECK(canonical_imaginary_root(build_affine("G2-1")) == RootVector{1, 2, 3});
  CHECK(canonical_central_element(build_affine("A4-2")) == std::vector<std::int64_t>{1, 2, 2});
  CHECK(build_affine("A4-2").size() == 3);
  CHECK(build_affine("A2-2").size() == 2);
  CHECK(build_affine("E6-2").size() == 5);
}

TEST_CASE("every catalog entry satisfies the defining identities") {
  for (const auto& id : catalog(12)) {
    CAPTURE(id.str());
    const auto d = build_affine(id);
    for (int j = 0; j < d.size(); ++j) {
      long row = 0, col = 0;
      for (int i = 0; i < d.size(); ++i) {
        row += static_cast<long>(d.a(j, i)) * d.mark(i);
        col += static_cast<long>(d.comark(i)) * d.a(i, j);
        if (i != j) CHECK(((d.a(i, j) == 0) == (d.a(j, i) == 0)));
        // form consistent with the Cartan entries: (a_i, a_j) = a(i, j) |a_i|^2 / 2
        CHECK(d.form(i, j) == Rational(d.a(i, j)) * d.root_length_sq(i) / 2);
        CHECK(d.form(i, j) == d.form(j, i));
      }
      CHECK(row == 0);
      CHECK(col == 0);
      CHECK(d.a(j, j) == 2);
    }
    CHECK(d.comark(0) == 1);
    Rational longest(0);
    for (int i = 1; i < d.size(); ++i) longest = std::max(longest, d.root_length_sq(i));
    CHECK(longest == 2);
  }
}

TEST_CASE("the normalized form is positive semidefinite with radical spanned by delta") {
  std::mt19937_64 rng(11);
  for (const auto& id : catalog(6)) {
    CAPTURE(id.str());
    const auto d = build_affine(id);
    const RootVector delta = canonical_imaginary_root(d);
    CHECK(form(d, delta, delta) == 0);
    for (int i = 0; i < d.size(); ++i) CHECK(form(d, delta, RootVector::simple(d.size(), i)) == 0);
    std::uniform_int_distribution<std::int64_t> coef(-5, 5);
    for (int s = 0; s < 400; ++s) {
      RootVector x(static_cast<std::size_t>(d.size()));
      for (int i = 0; i < d.size(); ++i) x[static_cast<std::size_t>(i)] = coef(rng);
      const Rational q = form(d, x, x);
      CHECK(q >= 0);
      // q = 0 exactly on rational multiples of delta
      bool multiple = true;
      for (int i = 0; i < d.size(); ++i)
        multiple = multiple && x[static_cast<std::size_t>(i)] * delta[0] == x[0] * delta[static_cast<std::size_t>(i)];
      CHECK((q == 0) == multiple);
    }
  }
}

TEST_CASE("proper connected subdiagrams have positive principal minors") {
  for (const auto& id : catalog(8)) {
    CAPTURE(id.str());
    const auto d = build_affine(id);
    for (Subdiagram k : proper_connected_subdiagrams(d)) CHECK(principal_minor(d, k) > 0);
    CHECK(principal_minor(d, d.vertices()) == 0);
  }
}

TEST_CASE("finite type classification") {
  CHECK(classify_finite(build_affine("A3-1"), Subdiagram::of({1, 2, 3})) == FiniteType{'A', 3});
  CHECK(classify_finite(build_affine("G2-1"), Subdiagram::of({1, 2})) == FiniteType{'G', 2});
  CHECK(classify_finite(build_affine("B3-1"), Subdiagram::of({2, 3})) == FiniteType{'B', 2});
  CHECK(classify_finite(build_affine("C3-1"), Subdiagram::of({1, 2, 3})) == FiniteType{'C', 3});
  CHECK(classify_finite(build_affine("B3-1"), Subdiagram::of({1, 2, 3})) == FiniteType{'B', 3});
  CHECK(classify_finite(build_affine("B4-1"), Subdiagram::of({1, 2, 3, 4})) == FiniteType{'B', 4});
  CHECK(classify_finite(build_affine("D5-1"), Subdiagram::of({1, 2, 3, 4, 5})) == FiniteType{'D', 5});
  CHECK(classify_finite(build_affine("E6-1"), Subdiagram::of({1, 2, 3, 4, 5, 6})) == FiniteType{'E', 6});
  CHECK(classify_finite(build_affine("E8-1"), Subdiagram::of({1, 2, 3, 4, 5, 6, 7, 8})) == FiniteType{'E', 8});
  CHECK(classify_finite(build_affine("F4-1"), Subdiagram::of({1, 2, 3, 4})) == FiniteType{'F', 4});
  CHECK(classify_finite(build_affine("D4-1"), Subdiagram::of({1, 2, 3})) == FiniteType{'A', 3});

  const auto a3 = build_affine("A3-1");
  CHECK_THROWS_AS(classify_finite(a3, Subdiagram{}), Error);
  CHECK_THROWS_AS(classify_finite(a3, Subdiagram::of({0, 2})), Error);
  CHECK_THROWS_AS(classify_finite(a3, a3.vertices()), Error);
}

TEST_CASE("every finite part has the expected type") {
  // Deleting vertex 0 of an untwisted diagram leaves the finite diagram X_n.
  for (const auto& id : catalog(10)) {
    if (id.twist != 1) continue;
    CAPTURE(id.str());
    const auto d = build_affine(id);
    FiniteType want{id.family, id.rank};
    if (want == FiniteType{'C', 2}) want = FiniteType{'B', 2};
    CHECK(classify_finite(d, d.vertices().without(0)) == want);
  }
}

TEST_CASE("classification ignores vertex relabeling") {
  std::mt19937_64 rng(5);
  for (const auto& id : catalog(6)) {
    CAPTURE(id.str());
    const auto d = build_affine(id);
    for (int trial = 0; trial < 4; ++trial) {
      // Permute the non-affine vertices; vertex 0 keeps its unit comark.
      std::vector<int> p(static_cast<std::size_t>(d.size()));
      std::iota(p.begin(), p.end(), 0);
      std::shuffle(p.begin() + 1, p.end(), rng);
      std::vector<int> cartan(static_cast<std::size_t>(d.size() * d.size()));
      std::vector<int> marks(static_cast<std::size_t>(d.size())), comarks(marks.size());
      for (int i = 0; i < d.size(); ++i) {
        marks[static_cast<std::size_t>(p[i])] = d.mark(i);
        comarks[static_cast<std::size_t>(p[i])] = d.comark(i);
        for (int j = 0; j < d.size(); ++j) cartan[static_cast<std::size_t>(p[i] * d.size() + p[j])] = d.a(i, j);
      }
      const AffineDiagram q(id, cartan, marks, comarks);
      for (Subdiagram k : proper_connected_subdiagrams(d)) {
        Subdiagram pk;
        for (int v : k.vertices()) pk = pk.with(p[static_cast<std::size_t>(v)]);
        CHECK(classify_finite(q, pk) == classify_finite(d, k));
      }
    }
  }
}

TEST_CASE("constructor rejects inconsistent data") {
  CHECK_THROWS_AS(AffineDiagram(AffineTypeId{'A', 1, 1}, {2, -2, -2, 2}, {1, 2}, {1, 1}), Error);
  CHECK_THROWS_AS(AffineDiagram(AffineTypeId{'A', 1, 1}, {2, -2, 0, 2}, {1, 1}, {1, 1}), Error);
  CHECK_THROWS_AS(AffineDiagram(AffineTypeId{'A', 1, 1}, {2, -2, -2, 2}, {2, 2}, {2, 2}), Error);
}

TEST_CASE("catalog listing") {
  const auto small = catalog(2);
  std::vector<std::string> names;
  for (const auto& id : small) names.push_back(id.str());
  for (const char* want : {"A1-1", "A2-1", "C2-1", "G2-1", "A2-2"}) CHECK(std::count(names.begin(), names.end(), want) == 1);
  for (const auto& id : catalog(12)) CHECK(id.valid());
}
