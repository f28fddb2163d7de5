#pragma once

#include <optional>
#include <vector>

#include "dwlat/cartan.hpp"
#include "dwlat/rational.hpp"
#include "dwlat/root_vector.hpp"

namespace dwlat {

/// lambda = m * omega_0 + sum_i c_i alpha_i. Two weights that differ by a
/// nonzero multiple of delta are distinct.
class Weight {
 public:
  Weight() = default;
  Weight(std::int64_t level, std::vector<Rational> coeffs) : level_(level), c_(std::move(coeffs)) {}

  std::int64_t level() const { return level_; }
  const std::vector<Rational>& coeffs() const { return c_; }
  const Rational& operator[](std::size_t i) const { return c_[i]; }
  std::size_t size() const { return c_.size(); }

  friend bool operator==(const Weight&, const Weight&) = default;

 private:
  std::int64_t level_ = 0;
  std::vector<Rational> c_;
};

/// lambda(alpha_j^vee) = m [j = 0] + sum_i a(j, i) c_i.
Rational evaluate(const AffineDiagram& d, const Weight& w, int j);
/// All labels lambda(alpha_j^vee); throws if some label is not an integer.
std::vector<std::int64_t> labels(const AffineDiagram& d, const Weight& w);
std::int64_t level(const AffineDiagram& d, const Weight& w);
/// Coefficient of delta in canonical coordinates: c_0 / a_0.
Rational delta_shift(const AffineDiagram& d, const Weight& w);

/// The weight with the given labels and c_0 = shift * a_0.
Weight weight_from_labels(const AffineDiagram& d, std::span<const std::int64_t> labels,
                          const Rational& shift = Rational(0));
Weight weight_from_labels(const AffineDiagram& d, std::initializer_list<std::int64_t> labels,
                          const Rational& shift = Rational(0));
Weight fundamental_weight(const AffineDiagram& d, int i);

bool is_integral(const AffineDiagram& d, const Weight& w);
bool is_dominant(const AffineDiagram& d, const Weight& w);

/// lambda - mu as a root vector, when both share a level and differ by an
/// integral combination of simple roots.
std::optional<RootVector> difference(const AffineDiagram& d, const Weight& lambda, const Weight& mu);
bool same_component(const AffineDiagram& d, const Weight& lambda, const Weight& mu);
/// mu <= lambda.
bool dominance_leq(const AffineDiagram& d, const Weight& mu, const Weight& lambda);

Weight meet(const AffineDiagram& d, const Weight& lambda, const Weight& mu);
Weight join(const AffineDiagram& d, const Weight& lambda, const Weight& mu);

Weight add_root(const AffineDiagram& d, const Weight& w, const RootVector& beta, int sign = 1);

/// Total order used for deterministic output: level, labels, delta shift.
bool canonical_less(const AffineDiagram& d, const Weight& a, const Weight& b);
/// "l0,l1,...|p/q"
std::string canonical_id(const AffineDiagram& d, const Weight& w);

}  // namespace dwlat
