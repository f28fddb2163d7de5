#pragma once

#include <optional>
#include <vector>

#include "dwlat/roots.hpp"
#include "dwlat/weights.hpp"

namespace dwlat {

/// upper covers lower; `root` is upper - lower and `case_tag` names the
/// clause (a..j) of the covering classification that admits the pair.
struct CoverEdge {
  Weight upper;
  Weight lower;
  CoverKind kind = CoverKind::SimpleRoot;
  char case_tag = 'a';
  RootVector root;

  friend bool operator==(const CoverEdge&, const CoverEdge&) = default;
};

/// Vertices i whose complement L is connected with delta = alpha_L + alpha_i.
Subdiagram special_vertices(const AffineDiagram& d);

/// Whether lambda covers lambda - delta. Depends on the labels only.
bool is_delta_cocover(const AffineDiagram& d, const Weight& lambda);

/// The clause admitting lambda -> mu = lambda - gamma as a cover, if any.
/// Expects both weights dominant.
std::optional<char> cover_case(const AffineDiagram& d, const Weight& lambda, const Weight& mu,
                               const RootVector& gamma);

std::vector<CoverEdge> cocovers(const AffineDiagram& d, const Weight& lambda);
std::vector<CoverEdge> covers(const AffineDiagram& d, const Weight& lambda);

/// Throws unless lambda is dominant integral of positive level.
void require_positive_dominant(const AffineDiagram& d, const Weight& lambda);

}  // namespace dwlat
