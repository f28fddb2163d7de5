#include "dwlat/oracle.hpp"

#include <algorithm>

#include "dwlat/error.hpp"

namespace dwlat {

namespace {

bool all_nonnegative(const std::vector<std::int64_t>& v) {
  return std::all_of(v.begin(), v.end(), [](std::int64_t x) { return x >= 0; });
}

void require_brute_input(const AffineDiagram& d, const Weight& lambda) {
  if (lambda.size() != static_cast<std::size_t>(d.size())) throw Error(ErrorCode::Index, "weight does not belong to " + d.type_id().str());
  if (!is_dominant(d, lambda)) throw Error(ErrorCode::NotDominant, "weight is not dominant integral");
  if (lambda.level() <= 0) throw Error(ErrorCode::NonPositiveLevel, "weight has non-positive level");
}

// Dominant points of the box base + sign * [0, hi], as offsets.
std::vector<RootVector> dominant_offsets(const AffineDiagram& d, const Weight& base,
                                         const std::vector<std::int64_t>& hi, int sign) {
  std::vector<RootVector> out;
  const auto lab = labels(d, base);
  for_each_in_box(d, lab, hi, sign, [&](const RootVector& off, const std::vector<std::int64_t>& l) {
    if (all_nonnegative(l)) out.push_back(off);
  });
  return out;
}

}  // namespace

SearchWindow SearchWindow::standard(const AffineDiagram& d) {
  SearchWindow w;
  for (int m : d.marks()) w.bound.push_back(2 * m);
  return w;
}

BruteCocovers brute_cocovers(const AffineDiagram& d, const Weight& lambda) {
  return brute_cocovers(d, lambda, SearchWindow::standard(d));
}

BruteCocovers brute_cocovers(const AffineDiagram& d, const Weight& lambda, const SearchWindow& w) {
  require_brute_input(d, lambda);
  if (w.bound.size() != static_cast<std::size_t>(d.size()) || !all_nonnegative(w.bound))
    throw Error(ErrorCode::Index, "search window does not match the diagram");

  std::vector<RootVector> below = dominant_offsets(d, lambda, w.bound, -1);
  std::erase_if(below, [](const RootVector& b) { return b.is_zero(); });
  std::stable_sort(below.begin(), below.end(),
                   [](const RootVector& a, const RootVector& b) { return a.height() < b.height(); });

  BruteCocovers out;
  out.candidates = below.size();
  // lambda - beta is maximal iff no smaller nonzero dominant difference exists;
  // checking against the minimal ones found so far suffices.
  std::vector<RootVector> minimal;
  for (const auto& beta : below) {
    const bool dominated = std::any_of(minimal.begin(), minimal.end(),
                                       [&](const RootVector& m) { return m.leq(beta); });
    if (!dominated) minimal.push_back(beta);
  }
  std::sort(minimal.begin(), minimal.end());
  for (const auto& beta : minimal) {
    out.cocovers.push_back(add_root(d, lambda, beta, -1));
    out.differences.push_back(beta);
    for (std::size_t i = 0; i < beta.size(); ++i)
      if (beta[i] == w.bound[i]) {
        out.boundary.push_back(beta);
        break;
      }
  }
  return out;
}

Bounds brute_bounds(const AffineDiagram& d, const Weight& lambda, const Weight& mu,
                    const std::optional<SearchWindow>& w) {
  const auto diff = difference(d, lambda, mu);
  if (!diff) throw Error(ErrorCode::ComponentMismatch, "weights lie in different components of the dominance order");
  if (!is_dominant(d, lambda) || !is_dominant(d, mu)) throw Error(ErrorCode::NotDominant, "bounds are taken among dominant weights");
  const std::size_t n = lambda.size();

  std::vector<Rational> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = std::min(lambda[i], mu[i]);
    hi[i] = std::max(lambda[i], mu[i]);
  }
  const Weight low_corner(lambda.level(), lo);
  const Weight high_corner(lambda.level(), hi);

  std::vector<std::int64_t> down(n), up(n);
  if (w) {
    if (w->bound.size() != n || !all_nonnegative(w->bound)) throw Error(ErrorCode::Index, "search window does not match the diagram");
    down = up = w->bound;
  } else {
    // lambda - N delta <= mu and mu + N delta >= lambda for N large enough.
    std::int64_t shift = 0;
    for (std::size_t i = 0; i < n; ++i) {
      const std::int64_t k = (*diff)[i];
      const std::int64_t m = d.mark(static_cast<int>(i));
      shift = std::max(shift, (std::abs(k) + m - 1) / m);
    }
    for (std::size_t i = 0; i < n; ++i) {
      const std::int64_t delta_i = shift * d.mark(static_cast<int>(i));
      // box for the glb: [lambda - N delta, lo]; for the lub: [hi, mu + N delta]
      down[i] = ((lo[i] - (lambda[i] - Rational(delta_i))).numerator());
      up[i] = ((mu[i] + Rational(delta_i) - hi[i]).numerator());
    }
  }

  const auto lower = dominant_offsets(d, low_corner, down, -1);
  const auto upper = dominant_offsets(d, high_corner, up, +1);
  if (lower.empty() || upper.empty()) throw Error(ErrorCode::WindowExhausted, "no common bound inside the search window");

  // A greatest (least) element exists iff the coordinatewise extremum is present.
  RootVector least_drop = lower.front();
  for (const auto& b : lower)
    for (std::size_t i = 0; i < n; ++i) least_drop[i] = std::min(least_drop[i], b[i]);
  RootVector least_rise = upper.front();
  for (const auto& b : upper)
    for (std::size_t i = 0; i < n; ++i) least_rise[i] = std::min(least_rise[i], b[i]);
  if (std::find(lower.begin(), lower.end(), least_drop) == lower.end() ||
      std::find(upper.begin(), upper.end(), least_rise) == upper.end()) {
    throw Error(ErrorCode::WindowExhausted, "window holds no greatest lower / least upper bound");
  }
  return {add_root(d, low_corner, least_drop, -1), add_root(d, high_corner, least_rise, +1)};
}

}  // namespace dwlat
