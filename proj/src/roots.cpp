#include "dwlat/roots.hpp"

#include <algorithm>
#include <set>

#include "dwlat/error.hpp"

namespace dwlat {

const char* to_string(CoverKind kind) {
  switch (kind) {
    case CoverKind::SimpleRoot: return "SimpleRoot";
    case CoverKind::LocallyShortDominant: return "LocallyShortDominant";
    case CoverKind::Exceptional: return "Exceptional";
    case CoverKind::Delta: return "Delta";
  }
  return "?";
}

CoverKind parse_cover_kind(std::string_view text) {
  for (auto k : {CoverKind::SimpleRoot, CoverKind::LocallyShortDominant, CoverKind::Exceptional, CoverKind::Delta})
    if (text == to_string(k)) return k;
  throw Error(ErrorCode::Parse, "unknown cover kind '" + std::string(text) + "'");
}

Subdiagram support(const RootVector& beta) {
  Subdiagram s;
  for (std::size_t i = 0; i < beta.size(); ++i)
    if (beta[i] != 0) s = s.with(static_cast<int>(i));
  return s;
}

RootVector restrict_to(const RootVector& beta, Subdiagram k) {
  RootVector out = beta;
  for (std::size_t i = 0; i < out.size(); ++i)
    if (!k.contains(static_cast<int>(i))) out[i] = 0;
  return out;
}

std::int64_t coroot_pairing(const AffineDiagram& d, const RootVector& beta, int j) {
  d.check_vertex(j);
  if (beta.size() != static_cast<std::size_t>(d.size())) throw Error(ErrorCode::Index, "root vector length mismatch");
  std::int64_t sum = 0;
  for (int i = 0; i < d.size(); ++i) sum += d.a(j, i) * beta[static_cast<std::size_t>(i)];
  return sum;
}

Rational form(const AffineDiagram& d, const RootVector& beta, const RootVector& gamma) {
  Rational sum(0);
  for (int i = 0; i < d.size(); ++i) {
    if (beta[static_cast<std::size_t>(i)] == 0) continue;
    std::int64_t inner = 0;
    for (int j = 0; j < d.size(); ++j) inner += d.a(i, j) * gamma[static_cast<std::size_t>(j)];
    // (alpha_i, alpha_j) = a(i, j) |alpha_i|^2 / 2
    sum += Rational(beta[static_cast<std::size_t>(i)] * inner) * d.root_length_sq(i) / 2;
  }
  return sum;
}

RootVector simple_reflection(const AffineDiagram& d, int i, RootVector beta) {
  beta[static_cast<std::size_t>(i)] -= coroot_pairing(d, beta, i);
  return beta;
}

namespace {

void require_proper_connected(const AffineDiagram& d, Subdiagram k) {
  if (k.empty()) throw Error(ErrorCode::InvalidSubdiagram, "empty subdiagram");
  if ((k.bits() & ~d.vertices().bits()) != 0) throw Error(ErrorCode::Index, "subdiagram has out-of-range vertex");
  if (k == d.vertices()) throw Error(ErrorCode::InvalidSubdiagram, "subdiagram is the full affine diagram");
  if (!d.connected(k)) throw Error(ErrorCode::InvalidSubdiagram, "subdiagram is disconnected");
}

bool is_simple(const RootVector& beta) {
  int ones = 0;
  for (std::size_t i = 0; i < beta.size(); ++i) {
    if (beta[i] == 1) ++ones;
    else if (beta[i] != 0) return false;
  }
  return ones == 1;
}

}  // namespace

RootVector highest_short_root(const AffineDiagram& d, Subdiagram k) {
  require_proper_connected(d, k);
  const int seed = d.short_vertices(k).vertices().front();
  RootVector beta = RootVector::simple(d.size(), seed);
  const auto verts = k.vertices();
  // Each reflection strictly raises the height inside the finite system Phi_K.
  for (bool moved = true; moved;) {
    moved = false;
    for (int j : verts) {
      if (coroot_pairing(d, beta, j) < 0) {
        beta = simple_reflection(d, j, std::move(beta));
        moved = true;
      }
    }
  }
  return beta;
}

bool is_real_root(const AffineDiagram& d, const RootVector& beta) {
  if (beta.size() != static_cast<std::size_t>(d.size())) throw Error(ErrorCode::Index, "root vector length mismatch");
  if (beta.is_zero()) return false;
  RootVector b = beta;
  if (b.nonpositive()) b = -b;
  if (!b.nonnegative()) return false;
  const std::int64_t budget = 10 * b.height();
  for (std::int64_t step = 0; step <= budget; ++step) {
    if (is_simple(b)) return true;
    int j = -1;
    for (int i = 0; i < d.size() && j < 0; ++i)
      if (coroot_pairing(d, b, i) > 0) j = i;
    if (j < 0) return false;
    b = simple_reflection(d, j, std::move(b));
    if (!b.nonnegative() || b.is_zero()) return false;
  }
  throw Error(ErrorCode::Internal, "real-root descent exceeded its step budget for " + beta.str());
}

std::vector<Subdiagram> proper_connected_subdiagrams(const AffineDiagram& d) {
  std::set<Subdiagram> seen;
  std::vector<Subdiagram> frontier;
  for (int v = 0; v < d.size(); ++v) {
    const auto s = Subdiagram::of({v});
    seen.insert(s);
    frontier.push_back(s);
  }
  const Subdiagram all = d.vertices();
  while (!frontier.empty()) {
    std::vector<Subdiagram> next;
    for (Subdiagram s : frontier) {
      for (int v : s.vertices())
        for (int w = 0; w < d.size(); ++w) {
          if (s.contains(w) || !d.adjacent(v, w)) continue;
          const Subdiagram t = s.with(w);
          if (t == all || !seen.insert(t).second) continue;
          next.push_back(t);
        }
    }
    frontier = std::move(next);
  }
  return {seen.begin(), seen.end()};
}

std::vector<CoverRoot> cover_root_set(const AffineDiagram& d) {
  std::vector<CoverRoot> out;
  const auto add = [&](RootVector r, CoverKind kind) {
    const bool dup = std::any_of(out.begin(), out.end(), [&](const CoverRoot& c) { return c.root == r; });
    if (!dup) out.push_back({std::move(r), kind});
  };
  for (Subdiagram k : proper_connected_subdiagrams(d)) {
    add(highest_short_root(d, k), k.count() == 1 ? CoverKind::SimpleRoot : CoverKind::LocallyShortDominant);
  }
  add(canonical_imaginary_root(d), CoverKind::Delta);

  const auto& id = d.type_id();
  const bool g2 = id == AffineTypeId{'G', 2, 1};
  const bool d43 = id == AffineTypeId{'D', 4, 3};
  if (g2 || d43) {
    // alpha_s + alpha_l over the triple bond.
    for (int i = 0; i < d.size(); ++i)
      for (int j = i + 1; j < d.size(); ++j)
        if (d.a(i, j) * d.a(j, i) == 3) add(RootVector::simple(d.size(), i) + RootVector::simple(d.size(), j), CoverKind::Exceptional);
  }
  if (g2) add(RootVector{1, 1, 1}, CoverKind::Exceptional);
  // A_2^(2): the short and long simple roots (pairing -4) also sum to a cover
  // difference, from below a weight whose long label is 0 and short label 2 or 3.
  if (id == AffineTypeId{'A', 2, 2}) add(RootVector{1, 1}, CoverKind::Exceptional);
  return out;
}

}  // namespace dwlat
