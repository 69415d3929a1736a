#pragma once

#include <string>

#include <json.hpp>

#include "onematch/drawing.hpp"
#include "onematch/graph.hpp"

namespace onematch {

using json = nlohmann::ordered_json;

// Graph: {"n": int, "edges": [[u,v],...]}
json graph_to_json(const Graph& g);
Graph graph_from_json(const json& j);

// Matching: {"edges": [[u,v],...]}; n comes from the accompanying graph.
json matching_to_json(const Matching& m);
Matching matching_from_json(const json& j, int n);

// Drawing: vertices sorted, edges by id, crossings by (e1,e2), rotation keys
// ascending — the canonical form round-trips bit-exactly.
json drawing_to_json(const Drawing& d);
Drawing drawing_from_json(const json& j);

}  // namespace onematch
