#include "onematch/generators.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <stdexcept>

namespace onematch {

namespace {

// deterministic across platforms, unlike std::bernoulli_distribution
bool coin(std::mt19937_64& rng, double p) {
  return (rng() >> 11) * 0x1.0p-53 < p;
}

int edge_end_at(const Drawing& d, int edge, int v) {
  return d.edges().at(edge).u == v ? 0 : 1;
}

// rotation position of the (edge, end-at-v) entry
int rotation_index(const Drawing& d, int v, int edge) {
  const auto& rot = d.rotations().at(v);
  int end = edge_end_at(d, edge, v);
  for (size_t i = 0; i < rot.size(); ++i)
    if (rot[i].edge == edge && rot[i].end == end) return static_cast<int>(i);
  throw std::logic_error("edge not found in rotation");
}

}  // namespace

Drawing drawing_from_oriented_faces(const std::vector<std::vector<int>>& faces) {
  std::set<int> vertex_set;
  std::set<VertexPair> pairs;
  // per-vertex corner successor: arriving from x, leave toward succ[x]
  std::map<int, std::map<int, int>> succ;
  for (const auto& f : faces) {
    size_t k = f.size();
    if (k < 3) throw std::invalid_argument("face with fewer than 3 corners");
    for (size_t i = 0; i < k; ++i) {
      int x = f[i], v = f[(i + 1) % k], y = f[(i + 2) % k];
      vertex_set.insert(v);
      pairs.insert(canon(x, v));
      if (!succ[v].emplace(x, y).second)
        throw std::invalid_argument("directed edge used twice across faces");
    }
  }

  std::map<int, DrawingEdge> edges;
  std::map<VertexPair, int> edge_id;
  int next = 0;
  for (auto [u, v] : pairs) {
    edge_id[{u, v}] = next;
    edges[next++] = {u, v};
  }

  std::map<int, std::vector<EdgeEnd>> rotations;
  for (int v : vertex_set) {
    const auto& around = succ.at(v);
    auto& rot = rotations[v];
    int start = around.begin()->first;
    int w = start;
    do {
      int e = edge_id.at(canon(v, w));
      rot.push_back({e, edges.at(e).u == v ? 0 : 1});
      auto it = around.find(w);
      if (it == around.end())
        throw std::invalid_argument("face corners do not close a rotation");
      w = it->second;
    } while (w != start);
    if (rot.size() != around.size())
      throw std::invalid_argument("rotation at a vertex splits into cycles");
  }

  return Drawing::from_parts(std::vector<int>(vertex_set.begin(), vertex_set.end()),
                             edges, {}, rotations);
}

Drawing random_planar_triangulation(int n, std::uint64_t seed) {
  if (n < 4) throw std::invalid_argument("triangulation needs n >= 4");
  std::mt19937_64 rng(seed);
  std::vector<std::array<int, 3>> faces{{0, 1, 2}, {0, 2, 1}};
  for (int u = 3; u < n; ++u) {
    size_t i = rng() % faces.size();
    auto [a, b, c] = faces[i];
    faces[i] = {a, b, u};
    faces.push_back({b, c, u});
    faces.push_back({c, a, u});
  }
  std::vector<std::vector<int>> fs;
  for (auto [a, b, c] : faces) fs.push_back({a, b, c});
  return drawing_from_oriented_faces(fs);
}

Drawing add_random_crossings(const Drawing& d, double p, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Drawing out = d;
  std::vector<int> candidates;
  for (const auto& [id, e] : d.edges()) (void)e, candidates.push_back(id);

  for (int e : candidates) {
    if (!coin(rng, p) || out.is_crossed(e)) continue;
    auto faces = out.faces();
    // the two incident faces must be plain triangles with distinct apexes
    std::vector<const Face*> incident;
    for (const auto& f : faces) {
      for (const auto& fc : f.boundary)
        if (!fc.at_crossing && fc.edge == e) {
          incident.push_back(&f);
          break;
        }
    }
    if (incident.size() != 2) continue;
    int b = out.edges().at(e).u, dd = out.edges().at(e).v;
    std::array<int, 2> apex{-1, -1};
    bool eligible = true;
    for (int side = 0; side < 2 && eligible; ++side) {
      const Face& f = *incident[side];
      if (f.length() != 3) {
        eligible = false;
        break;
      }
      for (const auto& fc : f.boundary) {
        if (fc.at_crossing || out.is_crossed(fc.edge)) eligible = false;
        else if (fc.host != b && fc.host != dd) apex[side] = fc.host;
      }
      if (apex[side] < 0) eligible = false;
    }
    if (!eligible) continue;
    auto [a, c] = apex;
    if (a == c || !out.edge_ids_between(a, c).empty()) continue;

    Corner ca{a, rotation_index(out, a, [&] {
                for (const auto& fc : incident[0]->boundary)
                  if (fc.host == a) return fc.edge;
                throw std::logic_error("apex corner missing");
              }())};
    Corner cc{c, rotation_index(out, c, [&] {
                for (const auto& fc : incident[1]->boundary)
                  if (fc.host == c) return fc.edge;
                throw std::logic_error("apex corner missing");
              }())};
    int id = out.insert_edge_crossing(a, c, ca, cc, e, 0);
    if (!out.validate().ok()) {
      out.delete_edge(id);
      id = out.insert_edge_crossing(a, c, ca, cc, e, 1);
      if (!out.validate().ok())
        throw std::logic_error("crossing insertion failed for both orientations");
    }
  }
  return out;
}

Drawing sparsify(const Drawing& d, double q, std::uint64_t seed) {
  std::mt19937_64 rng(seed);
  Drawing out = d;
  std::vector<int> candidates;
  for (const auto& [id, e] : d.edges()) (void)e, candidates.push_back(id);
  for (int e : candidates) {
    if (!coin(rng, q) || out.is_crossed(e)) continue;
    const auto& ed = out.edges().at(e);
    if (out.degree(ed.u) <= 3 || out.degree(ed.v) <= 3) continue;
    Drawing trial = out;
    trial.delete_edge(e);
    if (trial.component_count() != 1) continue;
    out = std::move(trial);
  }
  return out;
}

Drawing generate(const GenConfig& config) {
  std::mt19937_64 rng(config.seed);
  std::uint64_t s1 = rng(), s2 = rng(), s3 = rng();
  Drawing d = random_planar_triangulation(config.n, s1);
  if (config.crossing_fraction > 0)
    d = add_random_crossings(d, config.crossing_fraction, s2);
  if (config.deletion_fraction > 0)
    d = sparsify(d, config.deletion_fraction, s3);
  return d;
}

Drawing medial_graph(const Drawing& d) {
  if (d.crossing_count() != 0)
    throw std::invalid_argument("medial graph needs a planar drawing");
  std::vector<std::vector<int>> medial_faces;
  for (const auto& f : d.faces()) {
    std::vector<int> mf;
    for (const auto& fc : f.boundary) mf.push_back(fc.edge);
    medial_faces.push_back(std::move(mf));
  }
  for (const auto& [v, rot] : d.rotations()) {
    (void)v;
    std::vector<int> mf;
    for (auto it = rot.rbegin(); it != rot.rend(); ++it) mf.push_back(it->edge);
    medial_faces.push_back(std::move(mf));
  }
  return drawing_from_oriented_faces(medial_faces);
}

Drawing fixed_instance(const std::string& name) {
  if (name == "K4")
    return drawing_from_oriented_faces({{0, 1, 2}, {0, 2, 3}, {0, 3, 1}, {1, 3, 2}});
  if (name == "cube")
    return drawing_from_oriented_faces({{0, 1, 2, 3},
                                        {4, 7, 6, 5},
                                        {0, 4, 5, 1},
                                        {1, 5, 6, 2},
                                        {2, 6, 7, 3},
                                        {3, 7, 4, 0}});
  if (name == "icosahedron")
    return drawing_from_oriented_faces(
        {{0, 1, 2},  {0, 2, 3},  {0, 3, 4},  {0, 4, 5},  {0, 5, 1},
         {1, 5, 6},  {1, 6, 7},  {1, 7, 2},  {2, 7, 8},  {2, 8, 3},
         {3, 8, 9},  {3, 9, 4},  {4, 9, 10}, {4, 10, 5}, {5, 10, 6},
         {6, 10, 11}, {6, 11, 7}, {7, 11, 8}, {8, 11, 9}, {9, 11, 10}});
  if (name == "C4_crossed")
    return Drawing::from_parts(
        {1, 2, 3, 4},
        {{0, {1, 2}}, {1, {2, 3}}, {2, {3, 4}}, {3, {4, 1}}, {4, {1, 3}}, {5, {2, 4}}},
        {{4, 5, 0}},
        {{1, {{0, 0}, {4, 0}, {3, 1}}},
         {2, {{1, 0}, {5, 0}, {0, 1}}},
         {3, {{2, 0}, {4, 1}, {1, 1}}},
         {4, {{3, 0}, {5, 1}, {2, 1}}}});
  if (name.rfind("medial:", 0) == 0) {
    auto rest = name.substr(7);
    auto colon = rest.find(':');
    if (colon != std::string::npos) {
      int n = std::stoi(rest.substr(0, colon));
      std::uint64_t seed = std::stoull(rest.substr(colon + 1));
      return medial_graph(random_planar_triangulation(n, seed));
    }
  }
  throw std::invalid_argument("unknown instance name: " + name);
}

}  // namespace onematch
