#pragma once

#include <vector>

#include "dwlat/cartan.hpp"
#include "dwlat/root_vector.hpp"

namespace dwlat {

enum class CoverKind { SimpleRoot, LocallyShortDominant, Exceptional, Delta };

const char* to_string(CoverKind kind);
CoverKind parse_cover_kind(std::string_view text);

Subdiagram support(const RootVector& beta);
RootVector restrict_to(const RootVector& beta, Subdiagram k);

/// beta(alpha_j^vee) = sum_i a(j, i) k_i.
std::int64_t coroot_pairing(const AffineDiagram& d, const RootVector& beta, int j);

/// (beta, gamma) under the normalized form.
Rational form(const AffineDiagram& d, const RootVector& beta, const RootVector& gamma);

/// s_i(beta) = beta - beta(alpha_i^vee) alpha_i.
RootVector simple_reflection(const AffineDiagram& d, int i, RootVector beta);

/// The highest short root alpha_K of the finite root system on a proper
/// connected subdiagram K. Found by reflecting a shortest simple root of K
/// into the dominant chamber of Phi_K.
RootVector highest_short_root(const AffineDiagram& d, Subdiagram k);

/// Reflection descent toward a simple root; false for imaginary roots and for
/// vectors that are not roots at all.
bool is_real_root(const AffineDiagram& d, const RootVector& beta);

/// All proper connected subdiagrams, in increasing bitmask order.
std::vector<Subdiagram> proper_connected_subdiagrams(const AffineDiagram& d);

struct CoverRoot {
  RootVector root;
  CoverKind kind;
};

/// Candidate cover differences: every alpha_K over proper connected K, delta,
/// and the exceptional sums of the triply- and quadruply-laced cases.
std::vector<CoverRoot> cover_root_set(const AffineDiagram& d);

}  // namespace dwlat
