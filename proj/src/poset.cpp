#include "dwlat/poset.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>

#include "dwlat/error.hpp"
#include "dwlat/json_io.hpp"

namespace dwlat {

namespace {

using Key = std::vector<Rational>;

bool is_untwisted_a(const AffineDiagram& d) {
  return d.type_id().family == 'A' && d.type_id().twist == 1;
}

CoverEdge make_edge(const AffineDiagram& d, const Weight& upper, const Weight& lower) {
  CoverEdge e;
  e.upper = upper;
  e.lower = lower;
  e.root = *difference(d, upper, lower);
  e.case_tag = '?';
  e.kind = CoverKind::LocallyShortDominant;
  for (const auto& c : cover_root_set(d))
    if (c.root == e.root) e.kind = c.kind;
  if (is_dominant(d, upper) && is_dominant(d, lower))
    if (const auto tag = cover_case(d, upper, lower, e.root)) e.case_tag = *tag;
  return e;
}

// An end node of k (at most one neighbour inside k) adjacent to v.
int adjacent_end(const AffineDiagram& d, Subdiagram k, int v) {
  for (int w : k.vertices()) {
    if (!d.adjacent(v, w)) continue;
    int inside = 0;
    for (int x : k.vertices()) inside += d.adjacent(w, x) ? 1 : 0;
    if (inside <= 1) return w;
  }
  return -1;
}

}  // namespace

const char* to_string(CellShape s) {
  switch (s) {
    case CellShape::Diamond: return "Diamond";
    case CellShape::Pentagon: return "Pentagon";
    case CellShape::DoublePentagon: return "DoublePentagon";
  }
  return "?";
}

std::size_t node_count(CellShape s) {
  switch (s) {
    case CellShape::Diamond: return 4;
    case CellShape::Pentagon: return 5;
    case CellShape::DoublePentagon: return 7;
  }
  return 0;
}

std::size_t edge_count(CellShape s) {
  switch (s) {
    case CellShape::Diamond: return 4;
    case CellShape::Pentagon: return 5;
    case CellShape::DoublePentagon: return 9;
  }
  return 0;
}

std::size_t PosetGraph::index_of(const Weight& w) const {
  return static_cast<std::size_t>(std::find(nodes.begin(), nodes.end(), w) - nodes.begin());
}

void PosetGraph::canonicalize(const AffineDiagram& d) {
  std::sort(nodes.begin(), nodes.end(), [&](const Weight& a, const Weight& b) { return canonical_less(d, a, b); });
  std::map<Key, std::size_t> pos;
  for (std::size_t i = 0; i < nodes.size(); ++i) pos[nodes[i].coeffs()] = i;
  const auto rank = [&](const Weight& w) {
    const auto it = pos.find(w.coeffs());
    return it == pos.end() ? nodes.size() : it->second;
  };
  std::sort(edges.begin(), edges.end(), [&](const CoverEdge& a, const CoverEdge& b) {
    return std::pair(rank(a.upper), rank(a.lower)) < std::pair(rank(b.upper), rank(b.lower));
  });
}

PosetGraph interval(const AffineDiagram& d, const Weight& lambda, const Weight& mu, std::size_t node_limit) {
  require_positive_dominant(d, lambda);
  require_positive_dominant(d, mu);
  if (!dominance_leq(d, mu, lambda))
    throw Error(ErrorCode::Incomparable, "interval ends are not comparable: " + canonical_id(d, mu) + " is not below " +
                                             canonical_id(d, lambda));
  PosetGraph g;
  g.top = lambda;
  g.bottom = mu;
  std::map<Key, std::size_t> seen;
  std::deque<Weight> queue{lambda};
  seen.emplace(lambda.coeffs(), 0);
  g.nodes.push_back(lambda);
  while (!queue.empty()) {
    const Weight cur = std::move(queue.front());
    queue.pop_front();
    for (auto& e : cocovers(d, cur)) {
      if (!dominance_leq(d, mu, e.lower)) continue;
      if (seen.emplace(e.lower.coeffs(), g.nodes.size()).second) {
        if (g.nodes.size() >= node_limit)
          throw Error(ErrorCode::IntervalOverflow, "interval exceeds " + std::to_string(node_limit) + " nodes");
        g.nodes.push_back(e.lower);
        queue.push_back(e.lower);
      }
      g.edges.push_back(std::move(e));
    }
  }
  g.canonicalize(d);
  return g;
}

BasicCell predict_cell(const AffineDiagram& d, const Weight& lambda, const Weight& mu, const Weight& mu2) {
  if (!is_untwisted_a(d))
    throw Error(ErrorCode::UnsupportedType, "basic cells are classified for type A_n^(1) only, not " + d.type_id().str());
  if (mu == mu2) throw Error(ErrorCode::NotACocover, "the two cocovers must be distinct");
  const auto down = cocovers(d, lambda);
  const auto find = [&](const Weight& w) -> const CoverEdge& {
    const auto it = std::find_if(down.begin(), down.end(), [&](const CoverEdge& e) { return e.lower == w; });
    if (it == down.end()) throw Error(ErrorCode::NotACocover, canonical_id(d, w) + " is not a cocover of " + canonical_id(d, lambda));
    if (it->kind == CoverKind::Delta) throw Error(ErrorCode::NotACocover, "delta cocovers do not span a basic cell");
    return *it;
  };
  const CoverEdge& e1 = find(mu);
  const CoverEdge& e2 = find(mu2);
  const Subdiagram k1 = support(e1.root);
  const Subdiagram k2 = support(e2.root);
  const Weight bottom = meet(d, mu, mu2);

  BasicCell cell;
  PosetGraph& g = cell.graph;
  g.top = lambda;
  g.bottom = bottom;
  const auto edge = [&](const Weight& u, const Weight& l) { g.edges.push_back(make_edge(d, u, l)); };
  const auto simple = [&](int v) { return RootVector::simple(d.size(), v); };

  if (k1.count() == 1 && k2.count() == 1) {
    cell.clause = "1a";
  } else if (!d.connected(k1 | k2)) {
    cell.clause = "1b";
  } else if (!(k1 & k2).empty()) {
    cell.clause = "1c";
  } else if (k1.count() == 1 || k2.count() == 1) {
    cell.clause = "2";
  } else {
    cell.clause = "3";
  }

  if (cell.clause[0] == '1') {
    cell.shape = CellShape::Diamond;
    g.nodes = {lambda, mu, mu2, bottom};
    edge(lambda, mu);
    edge(lambda, mu2);
    edge(mu, bottom);
    edge(mu2, bottom);
  } else if (cell.clause == "2") {
    cell.shape = CellShape::Pentagon;
    const bool first_single = k1.count() == 1;
    const Weight& single = first_single ? mu : mu2;
    const Weight& other = first_single ? mu2 : mu;
    const int i = (first_single ? k1 : k2).vertices().front();
    const int i1 = adjacent_end(d, first_single ? k2 : k1, i);
    if (i1 < 0) throw Error(ErrorCode::Internal, "single vertex is not adjacent to an end of the other support");
    const Weight mid = add_root(d, lambda, simple(i) + simple(i1), -1);
    g.nodes = {lambda, single, mid, other, bottom};
    edge(lambda, single);
    edge(single, mid);
    edge(mid, bottom);
    edge(lambda, other);
    edge(other, bottom);
  } else {
    cell.shape = CellShape::DoublePentagon;
    int i = -1, j = -1;
    for (int v : k1.vertices()) {
      const int w = adjacent_end(d, k2, v);
      if (w >= 0 && adjacent_end(d, k1, w) == v) {
        i = v;
        j = w;
        break;
      }
    }
    if (i < 0) throw Error(ErrorCode::Internal, "no adjacent end nodes between the two supports");
    const Weight middle = add_root(d, lambda, simple(i) + simple(j), -1);
    const Weight left = add_root(d, mu, simple(j), -1);    // lambda - alpha_K - alpha_j
    const Weight right = add_root(d, mu2, simple(i), -1);  // lambda - alpha_K' - alpha_i
    g.nodes = {lambda, mu, middle, mu2, left, right, bottom};
    edge(lambda, mu);
    edge(lambda, middle);
    edge(lambda, mu2);
    edge(mu, left);
    edge(middle, left);
    edge(middle, right);
    edge(mu2, right);
    edge(left, bottom);
    edge(right, bottom);
  }
  g.canonicalize(d);
  return cell;
}

BasicCell basic_cell(const AffineDiagram& d, const Weight& lambda, const Weight& mu, const Weight& mu2) {
  BasicCell cell = predict_cell(d, lambda, mu, mu2);
  PosetGraph actual = interval(d, lambda, *cell.graph.bottom);
  if (!same_poset(cell.graph, actual)) {
    throw Error(ErrorCode::PredictionMismatch,
                std::string("predicted ") + to_string(cell.shape) + " (clause " + cell.clause + ") but the interval has " +
                    std::to_string(actual.nodes.size()) + " nodes and " + std::to_string(actual.edges.size()) + " edges");
  }
  cell.graph = std::move(actual);
  return cell;
}

bool same_poset(const PosetGraph& a, const PosetGraph& b) {
  if (a.nodes.size() != b.nodes.size() || a.edges.size() != b.edges.size()) return false;
  std::set<Key> na, nb;
  for (const auto& n : a.nodes) na.insert(n.coeffs());
  for (const auto& n : b.nodes) nb.insert(n.coeffs());
  if (na != nb) return false;
  std::set<std::pair<Key, Key>> ea, eb;
  for (const auto& e : a.edges) ea.emplace(e.upper.coeffs(), e.lower.coeffs());
  for (const auto& e : b.edges) eb.emplace(e.upper.coeffs(), e.lower.coeffs());
  return ea == eb && a.top == b.top && a.bottom == b.bottom;
}

std::string export_graph(const AffineDiagram& d, const PosetGraph& g, GraphFormat format) {
  if (format == GraphFormat::Json) return to_json(d, g).dump(2) + "\n";
  std::ostringstream out;
  out << "digraph {\n  rankdir=TB;\n";
  for (const auto& n : g.nodes) out << "  \"" << canonical_id(d, n) << "\" [level=" << n.level() << "];\n";
  for (const auto& e : g.edges) {
    out << "  \"" << canonical_id(d, e.upper) << "\" -> \"" << canonical_id(d, e.lower) << "\" [kind=\""
        << to_string(e.kind) << "\", case=\"" << e.case_tag << "\"];\n";
  }
  out << "}\n";
  return out.str();
}

}  // namespace dwlat
