#include "onematch/json_io.hpp"

#include <stdexcept>

namespace onematch {

namespace {

EdgeList pairs_from(const json& arr, const char* what) {
  if (!arr.is_array()) throw std::invalid_argument(std::string(what) + " must be an array");
  EdgeList edges;
  for (const auto& e : arr) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_integer() ||
        !e[1].is_number_integer())
      throw std::invalid_argument(std::string(what) + " entries must be integer pairs");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  return edges;
}

}  // namespace

json graph_to_json(const Graph& g) {
  json j;
  j["n"] = g.n();
  auto& arr = j["edges"] = json::array();
  for (auto [u, v] : g.edges()) arr.push_back({u, v});
  return j;
}

Graph graph_from_json(const json& j) {
  if (!j.is_object() || !j.contains("n") || !j.contains("edges"))
    throw std::invalid_argument("graph JSON needs \"n\" and \"edges\"");
  if (!j["n"].is_number_integer())
    throw std::invalid_argument("\"n\" must be an integer");
  return Graph::build(j["n"].get<int>(), pairs_from(j["edges"], "\"edges\""));
}

json matching_to_json(const Matching& m) {
  json j;
  auto& arr = j["edges"] = json::array();
  for (auto [u, v] : m.edges()) arr.push_back({u, v});
  return j;
}

Matching matching_from_json(const json& j, int n) {
  if (!j.is_object() || !j.contains("edges"))
    throw std::invalid_argument("matching JSON needs \"edges\"");
  return Matching::from_edges(n, pairs_from(j["edges"], "\"edges\""));
}

json drawing_to_json(const Drawing& d) {
  json j;
  auto& vs = j["vertices"] = json::array();
  for (const auto& [v, r] : d.rotations()) (void)r, vs.push_back(v);
  auto& es = j["edges"] = json::array();
  for (const auto& [id, e] : d.edges())
    es.push_back({{"id", id}, {"u", e.u}, {"v", e.v}});
  auto& cs = j["crossings"] = json::array();
  for (const auto& [c, info] : d.crossings()) {
    (void)c;
    cs.push_back({{"e1", info.e1}, {"e2", info.e2}, {"orient", info.orient}});
  }
  auto& rots = j["rotations"] = json::object();
  for (const auto& [v, entries] : d.rotations()) {
    auto& arr = rots[std::to_string(v)] = json::array();
    for (const auto& ee : entries) arr.push_back({ee.edge, ee.end});
  }
  return j;
}

Drawing drawing_from_json(const json& j) {
  if (!j.is_object() || !j.contains("vertices") || !j.contains("edges") ||
      !j.contains("crossings") || !j.contains("rotations"))
    throw std::invalid_argument(
        "drawing JSON needs \"vertices\", \"edges\", \"crossings\" and \"rotations\"");

  std::vector<int> vertices;
  for (const auto& v : j["vertices"]) {
    if (!v.is_number_integer())
      throw std::invalid_argument("\"vertices\" entries must be integers");
    vertices.push_back(v.get<int>());
  }

  std::map<int, DrawingEdge> edges;
  for (const auto& e : j["edges"]) {
    if (!e.is_object() || !e.contains("id") || !e.contains("u") || !e.contains("v"))
      throw std::invalid_argument("\"edges\" entries need id/u/v");
    int id = e["id"].get<int>();
    if (edges.count(id)) throw std::invalid_argument("duplicate edge id");
    edges[id] = {e["u"].get<int>(), e["v"].get<int>()};
  }

  std::vector<CrossingInfo> crossings;
  for (const auto& c : j["crossings"]) {
    if (!c.is_object() || !c.contains("e1") || !c.contains("e2") || !c.contains("orient"))
      throw std::invalid_argument("\"crossings\" entries need e1/e2/orient");
    crossings.push_back({c["e1"].get<int>(), c["e2"].get<int>(), c["orient"].get<int>()});
  }

  std::map<int, std::vector<EdgeEnd>> rotations;
  for (const auto& [key, arr] : j["rotations"].items()) {
    int v = std::stoi(key);
    auto& entries = rotations[v];
    for (const auto& ee : arr) {
      if (!ee.is_array() || ee.size() != 2)
        throw std::invalid_argument("rotation entries must be [edge, end] pairs");
      entries.push_back({ee[0].get<int>(), ee[1].get<int>()});
    }
  }

  return Drawing::from_parts(vertices, edges, crossings, rotations);
}

}  // namespace onematch
