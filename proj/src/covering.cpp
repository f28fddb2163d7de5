#include "dwlat/covering.hpp"

#include <algorithm>

#include "dwlat/error.hpp"

namespace dwlat {

namespace {

RootVector sum_of_simple(const AffineDiagram& d, Subdiagram k) {
  RootVector r(static_cast<std::size_t>(d.size()));
  for (int v : k.vertices()) r[static_cast<std::size_t>(v)] = 1;
  return r;
}

std::vector<std::int64_t> unit_labels(const AffineDiagram& d, std::initializer_list<int> at) {
  std::vector<std::int64_t> k(static_cast<std::size_t>(d.size()), 0);
  for (int v : at) k[static_cast<std::size_t>(v)] += 1;
  return k;
}

/// The unique short simple root of a diagram that is not triply laced, or -1.
int unique_short_vertex(const AffineDiagram& d) {
  if (d.triply_laced()) return -1;
  const Subdiagram s = d.short_vertices();
  return s.count() == 1 ? s.vertices().front() : -1;
}

/// Which clause of the delta-cocover classification lambda's labels match:
/// f (special vertex), g (unique short root), h (D_{n+1}^(2)), i (A_1^(1)).
std::optional<char> delta_case(const AffineDiagram& d, const std::vector<std::int64_t>& k) {
  const auto& id = d.type_id();
  for (int v : special_vertices(d).vertices())
    if (k == unit_labels(d, {v})) return 'f';
  if (const int v = unique_short_vertex(d); v >= 0 && k == unit_labels(d, {v})) return 'g';
  if (id.family == 'D' && id.twist == 2 && k == unit_labels(d, {0, d.n()})) return 'h';
  if (id == AffineTypeId{'A', 1, 1} && k == unit_labels(d, {0, 1})) return 'i';
  return std::nullopt;
}

}  // namespace

Subdiagram special_vertices(const AffineDiagram& d) {
  const RootVector delta = canonical_imaginary_root(d);
  const Subdiagram all = d.vertices();
  const Subdiagram shortest = d.short_vertices();
  Subdiagram out;
  for (int i = 0; i < d.size(); ++i) {
    const Subdiagram rest = all.without(i);
    if (!d.connected(rest)) continue;
    if (highest_short_root(d, rest) + RootVector::simple(d.size(), i) != delta) continue;
    if (!shortest.contains(i))
      throw Error(ErrorCode::Internal, "special vertex " + std::to_string(i) + " of " + d.type_id().str() + " is not short");
    out = out.with(i);
  }
  return out;
}

void require_positive_dominant(const AffineDiagram& d, const Weight& lambda) {
  if (lambda.size() != static_cast<std::size_t>(d.size()))
    throw Error(ErrorCode::Index, "weight does not belong to " + d.type_id().str());
  if (!is_dominant(d, lambda)) throw Error(ErrorCode::NotDominant, "weight " + canonical_id(d, lambda) + " is not dominant integral");
  if (lambda.level() <= 0)
    throw Error(ErrorCode::NonPositiveLevel, "covering relations are only classified for positive level");
}

bool is_delta_cocover(const AffineDiagram& d, const Weight& lambda) {
  require_positive_dominant(d, lambda);
  return delta_case(d, labels(d, lambda)).has_value();
}

std::optional<char> cover_case(const AffineDiagram& d, const Weight& lambda, const Weight& mu, const RootVector& gamma) {
  const Subdiagram all = d.vertices();
  const Subdiagram supp = support(gamma);
  if (supp.empty() || !d.connected(supp)) return std::nullopt;

  if (supp.count() == 1 && gamma.height() == 1) return 'a';

  if (gamma == canonical_imaginary_root(d)) {
    if (const auto c = delta_case(d, labels(d, lambda))) return c;
    return std::nullopt;
  }

  Subdiagram zero;  // J
  for (int v : supp.vertices())
    if (evaluate(d, mu, v) == 0) zero = zero.with(v);
  const bool proper = supp != all;

  if (zero == supp && proper && gamma == highest_short_root(d, supp)) return 'b';

  const auto rest = supp.vertices();
  Subdiagram outside;  // I - J
  for (int v : rest)
    if (!zero.contains(v)) outside = outside.with(v);
  if (outside.count() != 1) return std::nullopt;
  const int i = outside.vertices().front();
  const Rational mu_i = evaluate(d, mu, i);
  const bool i_short = d.short_vertices(supp).contains(i);
  if (!i_short) return std::nullopt;

  if (proper) {
    const FiniteType t = classify_finite(d, supp);
    if (t.family == 'B' && mu_i == 1 && gamma == highest_short_root(d, supp)) return 'c';
    if (t == FiniteType{'G', 2} && (mu_i == 1 || mu_i == 2) && gamma == sum_of_simple(d, supp)) return 'd';
  } else if (d.type_id() == AffineTypeId{'G', 2, 1} && (mu_i == 1 || mu_i == 2) && gamma == sum_of_simple(d, supp)) {
    return 'e';
  } else if (d.type_id() == AffineTypeId{'A', 2, 2} && (mu_i == 2 || mu_i == 3) && gamma == sum_of_simple(d, supp)) {
    return 'j';
  }
  return std::nullopt;
}

std::vector<CoverEdge> cocovers(const AffineDiagram& d, const Weight& lambda) {
  require_positive_dominant(d, lambda);
  std::vector<CoverEdge> out;
  for (const auto& c : cover_root_set(d)) {
    Weight mu = add_root(d, lambda, c.root, -1);
    if (!is_dominant(d, mu)) continue;
    if (const auto tag = cover_case(d, lambda, mu, c.root))
      out.push_back({lambda, std::move(mu), c.kind, *tag, c.root});
  }
  return out;
}

std::vector<CoverEdge> covers(const AffineDiagram& d, const Weight& lambda) {
  require_positive_dominant(d, lambda);
  std::vector<CoverEdge> out;
  for (const auto& c : cover_root_set(d)) {
    Weight nu = add_root(d, lambda, c.root, +1);
    if (!is_dominant(d, nu)) continue;
    if (const auto tag = cover_case(d, nu, lambda, c.root))
      out.push_back({std::move(nu), lambda, c.kind, *tag, c.root});
  }
  return out;
}

}  // namespace dwlat
