#pragma once

#include <optional>
#include <vector>

#include "dwlat/root_vector.hpp"
#include "dwlat/weights.hpp"

// Brute-force re-derivations by bounded enumeration. Nothing here may depend
// on the covering classification; only the order definition is used.

namespace dwlat {

/// Componentwise cap B_0..B_n on searched differences.
struct SearchWindow {
  std::vector<std::int64_t> bound;

  /// Twice the marks.
  static SearchWindow standard(const AffineDiagram& d);
};

struct BruteCocovers {
  std::vector<Weight> cocovers;
  std::vector<RootVector> differences;  // lambda - mu, parallel to cocovers
  std::vector<RootVector> boundary;     // differences touching the window edge
  std::size_t candidates = 0;           // dominant weights seen in the window
};

/// Maximal dominant weights strictly below lambda within the window.
BruteCocovers brute_cocovers(const AffineDiagram& d, const Weight& lambda, const SearchWindow& w);
BruteCocovers brute_cocovers(const AffineDiagram& d, const Weight& lambda);

struct Bounds {
  Weight glb;
  Weight lub;
};

/// Greatest lower and least upper bound among dominant weights, found by
/// exhaustive search of boxes below the coordinatewise minimum and above the
/// coordinatewise maximum. Without a window the boxes reach down (up) to a
/// delta-translate of one input, which is itself a common bound.
Bounds brute_bounds(const AffineDiagram& d, const Weight& lambda, const Weight& mu,
                    const std::optional<SearchWindow>& w = std::nullopt);

/// Calls f(offset, labels) for every offset in [0, hi] componentwise, where
/// labels are those of base + sign * offset.
template <typename F>
void for_each_in_box(const AffineDiagram& d, std::span<const std::int64_t> base_labels,
                     const std::vector<std::int64_t>& hi, int sign, F&& f);

}  // namespace dwlat

#include "dwlat/detail/box.ipp"
