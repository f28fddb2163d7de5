#include "dwlat/weights.hpp"

#include <algorithm>

#include "dwlat/error.hpp"

namespace dwlat {

namespace {

void check_shape(const AffineDiagram& d, const Weight& w) {
  if (w.size() != static_cast<std::size_t>(d.size()))
    throw Error(ErrorCode::Index, "weight has " + std::to_string(w.size()) + " coefficients, diagram " +
                                      d.type_id().str() + " needs " + std::to_string(d.size()));
}

void require_component(const AffineDiagram& d, const Weight& lambda, const Weight& mu) {
  if (!same_component(d, lambda, mu))
    throw Error(ErrorCode::ComponentMismatch, "weights lie in different components of the dominance order");
}

// Solves the finite part (rows and columns 1..n) of A for the coefficients.
std::vector<Rational> solve_finite(const AffineDiagram& d, const std::vector<Rational>& rhs) {
  const std::size_t r = static_cast<std::size_t>(d.n());
  std::vector<Rational> m(r * (r + 1));
  for (std::size_t j = 0; j < r; ++j) {
    for (std::size_t i = 0; i < r; ++i) m[j * (r + 1) + i] = d.a(static_cast<int>(j + 1), static_cast<int>(i + 1));
    m[j * (r + 1) + r] = rhs[j];
  }
  for (std::size_t c = 0; c < r; ++c) {
    std::size_t piv = c;
    while (piv < r && m[piv * (r + 1) + c] == 0) ++piv;
    if (piv == r) throw Error(ErrorCode::Internal, "finite part of " + d.type_id().str() + " is singular");
    if (piv != c)
      for (std::size_t j = 0; j <= r; ++j) std::swap(m[piv * (r + 1) + j], m[c * (r + 1) + j]);
    for (std::size_t i = 0; i < r; ++i) {
      if (i == c || m[i * (r + 1) + c] == 0) continue;
      const Rational f = m[i * (r + 1) + c] / m[c * (r + 1) + c];
      for (std::size_t j = c; j <= r; ++j) m[i * (r + 1) + j] -= f * m[c * (r + 1) + j];
    }
  }
  std::vector<Rational> x(r);
  for (std::size_t i = 0; i < r; ++i) x[i] = m[i * (r + 1) + r] / m[i * (r + 1) + i];
  return x;
}

}  // namespace

Rational evaluate(const AffineDiagram& d, const Weight& w, int j) {
  d.check_vertex(j);
  check_shape(d, w);
  Rational v(j == 0 ? w.level() : 0);
  for (int i = 0; i < d.size(); ++i)
    if (d.a(j, i) != 0) v += Rational(d.a(j, i)) * w[static_cast<std::size_t>(i)];
  return v;
}

std::vector<std::int64_t> labels(const AffineDiagram& d, const Weight& w) {
  std::vector<std::int64_t> out;
  out.reserve(static_cast<std::size_t>(d.size()));
  for (int j = 0; j < d.size(); ++j) {
    const Rational v = evaluate(d, w, j);
    if (!is_integer(v)) throw Error(ErrorCode::NotDominant, "weight is not integral");
    out.push_back(v.numerator());
  }
  return out;
}

std::int64_t level(const AffineDiagram& d, const Weight& w) {
  check_shape(d, w);
  Rational sum(0);
  for (int j = 0; j < d.size(); ++j) sum += Rational(d.comark(j)) * evaluate(d, w, j);
  if (sum != Rational(w.level())) throw Error(ErrorCode::Internal, "level identity violated");
  return w.level();
}

Rational delta_shift(const AffineDiagram& d, const Weight& w) {
  check_shape(d, w);
  return w[0] / d.mark(0);
}

Weight weight_from_labels(const AffineDiagram& d, std::span<const std::int64_t> k, const Rational& shift) {
  if (k.size() != static_cast<std::size_t>(d.size()))
    throw Error(ErrorCode::Index, "expected " + std::to_string(d.size()) + " labels for " + d.type_id().str() +
                                      ", got " + std::to_string(k.size()));
  std::int64_t m = 0;
  for (int j = 0; j < d.size(); ++j) m += d.comark(j) * k[static_cast<std::size_t>(j)];
  std::vector<Rational> rhs;
  for (int j = 1; j < d.size(); ++j) rhs.emplace_back(k[static_cast<std::size_t>(j)]);
  const auto finite = solve_finite(d, rhs);
  std::vector<Rational> c(static_cast<std::size_t>(d.size()));
  c[0] = 0;
  std::copy(finite.begin(), finite.end(), c.begin() + 1);
  for (int i = 0; i < d.size(); ++i) c[static_cast<std::size_t>(i)] += shift * d.mark(i);
  return Weight(m, std::move(c));
}

Weight weight_from_labels(const AffineDiagram& d, std::initializer_list<std::int64_t> k, const Rational& shift) {
  return weight_from_labels(d, std::span<const std::int64_t>(k.begin(), k.size()), shift);
}

Weight fundamental_weight(const AffineDiagram& d, int i) {
  d.check_vertex(i);
  std::vector<std::int64_t> k(static_cast<std::size_t>(d.size()), 0);
  k[static_cast<std::size_t>(i)] = 1;
  return weight_from_labels(d, k);
}

bool is_integral(const AffineDiagram& d, const Weight& w) {
  for (int j = 0; j < d.size(); ++j)
    if (!is_integer(evaluate(d, w, j))) return false;
  return true;
}

bool is_dominant(const AffineDiagram& d, const Weight& w) {
  for (int j = 0; j < d.size(); ++j) {
    const Rational v = evaluate(d, w, j);
    if (!is_integer(v) || v < 0) return false;
  }
  return true;
}

std::optional<RootVector> difference(const AffineDiagram& d, const Weight& lambda, const Weight& mu) {
  check_shape(d, lambda);
  check_shape(d, mu);
  if (lambda.level() != mu.level()) return std::nullopt;
  RootVector out(lambda.size());
  for (std::size_t i = 0; i < lambda.size(); ++i) {
    const Rational diff = lambda[i] - mu[i];
    if (!is_integer(diff)) return std::nullopt;
    out[i] = diff.numerator();
  }
  return out;
}

bool same_component(const AffineDiagram& d, const Weight& lambda, const Weight& mu) {
  return difference(d, lambda, mu).has_value();
}

bool dominance_leq(const AffineDiagram& d, const Weight& mu, const Weight& lambda) {
  const auto diff = difference(d, lambda, mu);
  return diff && diff->nonnegative();
}

Weight meet(const AffineDiagram& d, const Weight& lambda, const Weight& mu) {
  require_component(d, lambda, mu);
  std::vector<Rational> c(lambda.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = std::min(lambda[i], mu[i]);
  return Weight(lambda.level(), std::move(c));
}

Weight join(const AffineDiagram& d, const Weight& lambda, const Weight& mu) {
  require_component(d, lambda, mu);
  std::vector<Rational> w(lambda.size());
  for (std::size_t i = 0; i < w.size(); ++i) w[i] = std::max(lambda[i], mu[i]);
  // Least fixpoint: raise one coordinate at a time to the smallest value, in
  // lambda's coset, satisfying its own label inequality. Every dominant upper
  // bound dominates each step, so the loop ends at the least one.
  for (bool moved = true; moved;) {
    moved = false;
    for (int j = 0; j < d.size(); ++j) {
      Rational rest(j == 0 ? lambda.level() : 0);
      for (int i = 0; i < d.size(); ++i)
        if (i != j) rest += Rational(d.a(j, i)) * w[static_cast<std::size_t>(i)];
      const auto uj = static_cast<std::size_t>(j);
      if (rest + 2 * w[uj] >= 0) continue;
      // smallest w_j = lambda_j + t, t integer, with 2 w_j >= -rest
      const Rational need = -rest / 2 - lambda[uj];
      w[uj] = lambda[uj] + Rational(ceil(need));
      moved = true;
    }
  }
  return Weight(lambda.level(), std::move(w));
}

Weight add_root(const AffineDiagram& d, const Weight& w, const RootVector& beta, int sign) {
  check_shape(d, w);
  if (beta.size() != w.size()) throw Error(ErrorCode::Index, "root vector length mismatch");
  std::vector<Rational> c = w.coeffs();
  for (std::size_t i = 0; i < c.size(); ++i) c[i] += Rational(sign * beta[i]);
  return Weight(w.level(), std::move(c));
}

bool canonical_less(const AffineDiagram& d, const Weight& a, const Weight& b) {
  if (a.level() != b.level()) return a.level() < b.level();
  std::vector<Rational> la, lb;
  for (int j = 0; j < d.size(); ++j) {
    la.push_back(evaluate(d, a, j));
    lb.push_back(evaluate(d, b, j));
  }
  if (la != lb) return std::lexicographical_compare(la.begin(), la.end(), lb.begin(), lb.end());
  return delta_shift(d, a) < delta_shift(d, b);
}

std::string canonical_id(const AffineDiagram& d, const Weight& w) {
  std::string s;
  for (int j = 0; j < d.size(); ++j) {
    if (j) s += ",";
    const Rational v = evaluate(d, w, j);
    s += is_integer(v) ? std::to_string(v.numerator()) : to_string(v);
  }
  return s + "|" + to_string(delta_shift(d, w));
}

}  // namespace dwlat
