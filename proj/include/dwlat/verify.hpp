#pragma once

#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "dwlat/json_io.hpp"
#include "dwlat/oracle.hpp"

namespace dwlat {

struct Mismatch {
  std::string check;  // cocovers, cover_root_set, delta, meet, join, boundary
  Weight weight;
  std::vector<std::string> expected;
  std::vector<std::string> got;
};

struct VerificationReport {
  std::string type;
  std::vector<std::int64_t> levels;
  std::size_t tested = 0;
  std::size_t pairs_tested = 0;
  std::vector<Mismatch> mismatches;
  std::vector<std::string> boundary_flags;
  std::map<std::string, double> elapsed_ms;
  /// Every cover difference the oracle produced, for membership audits.
  std::vector<RootVector> oracle_differences;

  bool passed() const { return mismatches.empty() && boundary_flags.empty(); }
};

/// All label vectors of the given level with label sum <= max_sum.
std::vector<std::vector<std::int64_t>> label_census(const AffineDiagram& d, std::int64_t level, std::int64_t max_sum);

/// Seeded random dominant labels of the given level.
std::vector<std::vector<std::int64_t>> sample_labels(const AffineDiagram& d, std::int64_t level, std::size_t count,
                                                     std::uint64_t seed);

/// Seeded random pairs of dominant weights in one component of the given level.
std::vector<std::pair<Weight, Weight>> sample_pairs(const AffineDiagram& d, std::int64_t level, std::size_t count,
                                                    std::uint64_t seed);

/// Compares the covering classification against brute force on the census
/// plus `samples` seeded weights per level, and meet/join against
/// brute_bounds on `pairs` seeded pairs per level.
VerificationReport verify_covering(const AffineDiagram& d, const std::vector<std::int64_t>& levels, std::size_t samples,
                                   std::uint64_t seed, std::size_t pairs = 20);

Json to_json(const AffineDiagram& d, const VerificationReport& r);

}  // namespace dwlat
