#pragma once

#include <optional>
#include <string>
#include <vector>

#include "dwlat/covering.hpp"

namespace dwlat {

/// A finite fragment of the Hasse diagram. Nodes are kept in canonical order
/// (level, labels, delta shift); edges are sorted by (upper, lower) position.
struct PosetGraph {
  std::vector<Weight> nodes;
  std::vector<CoverEdge> edges;
  Weight top;
  std::optional<Weight> bottom;

  std::size_t index_of(const Weight& w) const;  // nodes.size() when absent
  void canonicalize(const AffineDiagram& d);

  friend bool operator==(const PosetGraph&, const PosetGraph&) = default;
};

enum class CellShape { Diamond, Pentagon, DoublePentagon };

const char* to_string(CellShape s);
std::size_t node_count(CellShape s);
std::size_t edge_count(CellShape s);

inline constexpr std::size_t kDefaultIntervalLimit = 100000;

/// All dominant nu with mu <= nu <= lambda, with every cover pair among them.
PosetGraph interval(const AffineDiagram& d, const Weight& lambda, const Weight& mu,
                    std::size_t node_limit = kDefaultIntervalLimit);

struct BasicCell {
  CellShape shape;
  std::string clause;  // "1a", "1b", "1c", "2" or "3"
  PosetGraph graph;    // the predicted cell
};

/// The cell the classification predicts, without checking it.
BasicCell predict_cell(const AffineDiagram& d, const Weight& lambda, const Weight& mu, const Weight& mu2);

/// Predicts the interval [mu meet mu2, lambda] for two distinct non-delta
/// cocovers of lambda in type A_n^(1) and checks it against interval().
BasicCell basic_cell(const AffineDiagram& d, const Weight& lambda, const Weight& mu, const Weight& mu2);

/// Same-shape check: identical node sets and identical (upper, lower) pairs.
bool same_poset(const PosetGraph& a, const PosetGraph& b);

enum class GraphFormat { Dot, Json };
std::string export_graph(const AffineDiagram& d, const PosetGraph& g, GraphFormat format);

}  // namespace dwlat
