#include "dwlat/json_io.hpp"

#include "dwlat/error.hpp"

namespace dwlat {

namespace {

template <typename F>
auto guarded(F&& f) {
  try {
    return f();
  } catch (const Json::exception& e) {
    throw Error(ErrorCode::Parse, std::string("malformed JSON payload: ") + e.what());
  }
}

}  // namespace

Json to_json(const RootVector& r) { return Json(r.vec()); }

Json to_json(const AffineDiagram& d, const Weight& w) {
  Json j;
  j["type"] = d.type_id().str();
  j["labels"] = labels(d, w);
  j["delta_shift"] = to_string(delta_shift(d, w));
  return j;
}

Json to_json(const AffineDiagram& d, const CoverEdge& e) {
  Json j;
  j["upper"] = to_json(d, e.upper);
  j["lower"] = to_json(d, e.lower);
  j["kind"] = to_string(e.kind);
  j["case"] = std::string(1, e.case_tag);
  j["root"] = to_json(e.root);
  return j;
}

Json to_json(const AffineDiagram& d, const PosetGraph& g) {
  Json j;
  j["nodes"] = Json::array();
  for (const auto& n : g.nodes) j["nodes"].push_back(to_json(d, n));
  j["edges"] = Json::array();
  for (const auto& e : g.edges) j["edges"].push_back(to_json(d, e));
  j["top"] = to_json(d, g.top);
  j["bottom"] = g.bottom ? to_json(d, *g.bottom) : Json(nullptr);
  return j;
}

Json diagram_info(const AffineDiagram& d) {
  Json j;
  j["type"] = d.type_id().str();
  j["n"] = d.n();
  Json rows = Json::array();
  for (int i = 0; i < d.size(); ++i) {
    Json row = Json::array();
    for (int k = 0; k < d.size(); ++k) row.push_back(d.a(i, k));
    rows.push_back(row);
  }
  j["cartan"] = rows;
  j["marks"] = std::vector<int>(d.marks().begin(), d.marks().end());
  j["comarks"] = std::vector<int>(d.comarks().begin(), d.comarks().end());
  Json len = Json::array();
  for (int i = 0; i < d.size(); ++i) len.push_back(to_string(d.root_length_sq(i)));
  j["root_length_sq"] = len;
  j["delta"] = to_json(canonical_imaginary_root(d));
  j["c"] = canonical_central_element(d);
  j["special_vertices"] = special_vertices(d).vertices();
  return j;
}

Weight weight_from_json(const AffineDiagram& d, const Json& j) {
  return guarded([&] {
    const auto type = j.at("type").get<std::string>();
    if (AffineTypeId::parse(type) != d.type_id())
      throw Error(ErrorCode::Parse, "weight of type " + type + " given for " + d.type_id().str());
    const auto k = j.at("labels").get<std::vector<std::int64_t>>();
    const Rational shift = j.contains("delta_shift") ? parse_rational(j.at("delta_shift").get<std::string>()) : Rational(0);
    return weight_from_labels(d, k, shift);
  });
}

CoverEdge edge_from_json(const AffineDiagram& d, const Json& j) {
  return guarded([&] {
    CoverEdge e;
    e.upper = weight_from_json(d, j.at("upper"));
    e.lower = weight_from_json(d, j.at("lower"));
    e.kind = parse_cover_kind(j.at("kind").get<std::string>());
    const auto tag = j.at("case").get<std::string>();
    if (tag.size() != 1 || tag[0] < 'a' || tag[0] > 'j') throw Error(ErrorCode::Parse, "bad case tag '" + tag + "'");
    e.case_tag = tag[0];
    e.root = RootVector(j.at("root").get<std::vector<std::int64_t>>());
    if (difference(d, e.upper, e.lower) != e.root) throw Error(ErrorCode::Parse, "edge root does not match its endpoints");
    return e;
  });
}

PosetGraph graph_from_json(const AffineDiagram& d, const Json& j) {
  return guarded([&] {
    PosetGraph g;
    for (const auto& n : j.at("nodes")) g.nodes.push_back(weight_from_json(d, n));
    for (const auto& e : j.at("edges")) g.edges.push_back(edge_from_json(d, e));
    g.top = weight_from_json(d, j.at("top"));
    if (!j.at("bottom").is_null()) g.bottom = weight_from_json(d, j.at("bottom"));
    return g;
  });
}

}  // namespace dwlat
