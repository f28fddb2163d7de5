#pragma once

#include <json.hpp>

#include "dwlat/covering.hpp"
#include "dwlat/poset.hpp"

namespace dwlat {

using Json = nlohmann::ordered_json;

Json to_json(const AffineDiagram& d, const Weight& w);
Json to_json(const AffineDiagram& d, const CoverEdge& e);
Json to_json(const AffineDiagram& d, const PosetGraph& g);
Json to_json(const RootVector& r);
Json diagram_info(const AffineDiagram& d);

/// Each parser rejects payloads that name a different diagram type.
Weight weight_from_json(const AffineDiagram& d, const Json& j);
CoverEdge edge_from_json(const AffineDiagram& d, const Json& j);
PosetGraph graph_from_json(const AffineDiagram& d, const Json& j);

}  // namespace dwlat
