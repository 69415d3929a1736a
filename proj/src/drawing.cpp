#include "onematch/drawing.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>
#include <tuple>

namespace onematch {

namespace {

// Planarization node: (0, vertex id) or (1, crossing id).
using Node = std::pair<int, int>;
// Directed segment side: (edge, half, dir); dir 0 runs from the segment's
// first node to its second.
using Dart = std::tuple<int, int, int>;

Node vnode(int v) { return {0, v}; }
Node cnode(int c) { return {1, c}; }

}  // namespace

/// Planarization of a drawing: crossings become degree-4 dummy nodes and
/// crossed edges split into two half segments.
struct Planarization {
  const Drawing& d;
  std::map<Node, std::vector<Dart>> rot;  // leaving darts, cyclic order
  std::map<Dart, int> dart_face;
  std::vector<std::vector<Dart>> face_darts;

  explicit Planarization(const Drawing& drawing) : d(drawing) {
    build_rotations();
    trace_faces();
  }

  // Segment (e, half) endpoints as planarization nodes.
  std::pair<Node, Node> seg_nodes(int e, int half) const {
    const auto& ed = d.edges().at(e);
    auto c = d.crossing_of(e);
    if (!c) return {vnode(ed.u), vnode(ed.v)};
    if (half == 0) return {vnode(ed.u), cnode(*c)};
    return {cnode(*c), vnode(ed.v)};
  }

  Node dart_source(const Dart& dart) const {
    auto [e, half, dir] = dart;
    auto [a, b] = seg_nodes(e, half);
    return dir == 0 ? a : b;
  }

  Node dart_target(const Dart& dart) const {
    auto [e, half, dir] = dart;
    auto [a, b] = seg_nodes(e, half);
    return dir == 0 ? b : a;
  }

  void build_rotations() {
    for (const auto& [v, entries] : d.rotations()) {
      auto& out = rot[vnode(v)];
      for (const auto& ee : entries) {
        auto c = d.crossing_of(ee.edge);
        if (!c) {
          out.push_back({ee.edge, 0, ee.end == 0 ? 0 : 1});
        } else if (ee.end == 0) {
          out.push_back({ee.edge, 0, 0});  // u-half, leaving u
        } else {
          out.push_back({ee.edge, 1, 1});  // v-half, leaving v
        }
      }
    }
    for (const auto& [c, info] : d.crossings()) {
      Dart to_u1{info.e1, 0, 1};
      Dart to_v1{info.e1, 1, 0};
      Dart to_u2{info.e2, 0, 1};
      Dart to_v2{info.e2, 1, 0};
      if (info.orient == 0)
        rot[cnode(c)] = {to_u1, to_u2, to_v1, to_v2};
      else
        rot[cnode(c)] = {to_u1, to_v2, to_v1, to_u2};
    }
  }

  Dart next_in_face(const Dart& dart) const {
    Node w = dart_target(dart);
    const auto& r = rot.at(w);
    auto [e, half, dir] = dart;
    for (size_t i = 0; i < r.size(); ++i) {
      auto [re, rh, rd] = r[i];
      if (re == e && rh == half) return r[(i + 1) % r.size()];
    }
    throw std::logic_error("rotation missing a segment end");
  }

  void trace_faces() {
    for (const auto& [node, darts] : rot) {
      (void)node;
      for (const auto& start : darts) {
        if (dart_face.count(start)) continue;
        int id = static_cast<int>(face_darts.size());
        face_darts.emplace_back();
        Dart cur = start;
        do {
          dart_face[cur] = id;
          face_darts[id].push_back(cur);
          cur = next_in_face(cur);
        } while (!(cur == start));
      }
    }
  }

  // Face of the wedge between rotation entries pos-1 and pos at node w:
  // the face of the dart leaving along entry pos.
  int wedge_face(const Node& w, int pos) const {
    const auto& r = rot.at(w);
    if (r.empty()) throw std::invalid_argument("corner at isolated node");
    return dart_face.at(r[pos % r.size()]);
  }

  int components() const {
    std::set<Node> seen;
    int count = 0;
    for (const auto& [node, darts] : rot) {
      if (seen.count(node)) continue;
      ++count;
      std::vector<Node> stack{node};
      seen.insert(node);
      while (!stack.empty()) {
        Node w = stack.back();
        stack.pop_back();
        for (const auto& dart : rot.at(w)) {
          Node t = dart_target(dart);
          if (seen.insert(t).second) stack.push_back(t);
        }
      }
      (void)darts;
    }
    return count;
  }
};

std::optional<int> Drawing::crossing_of(int e) const {
  auto it = edge_crossing_.find(e);
  if (it == edge_crossing_.end()) return std::nullopt;
  return it->second;
}

int Drawing::crossing_weighted_degree(int v) const {
  const auto& entries = rotations_.at(v);
  int cwd = static_cast<int>(entries.size());
  for (const auto& ee : entries)
    if (!is_crossed(ee.edge)) ++cwd;
  return cwd;
}

std::vector<int> Drawing::edge_ids_between(int u, int v) const {
  std::vector<int> ids;
  for (const auto& [id, e] : edges_)
    if (canon(e.u, e.v) == canon(u, v)) ids.push_back(id);
  return ids;
}

int Drawing::next_edge_id() const {
  return edges_.empty() ? 0 : edges_.rbegin()->first + 1;
}

int Drawing::next_crossing_id() const {
  return crossings_.empty() ? 0 : crossings_.rbegin()->first + 1;
}

Drawing Drawing::from_parts(const std::vector<int>& vertices,
                            const std::map<int, DrawingEdge>& edges,
                            const std::vector<CrossingInfo>& crossings,
                            const std::map<int, std::vector<EdgeEnd>>& rotations) {
  Drawing d;
  for (int v : vertices) d.rotations_[v] = {};
  for (const auto& [id, e] : edges) {
    if (!d.rotations_.count(e.u) || !d.rotations_.count(e.v))
      throw std::invalid_argument("edge endpoint is not a vertex");
    d.edges_[id] = e;
  }
  int cid = 0;
  for (const auto& c : crossings) {
    if (!d.edges_.count(c.e1) || !d.edges_.count(c.e2))
      throw std::invalid_argument("crossing references unknown edge");
    d.crossings_[cid] = c;
    if (!d.edge_crossing_.count(c.e1)) d.edge_crossing_[c.e1] = cid;
    if (!d.edge_crossing_.count(c.e2)) d.edge_crossing_[c.e2] = cid;
    ++cid;
  }
  for (const auto& [v, entries] : rotations) {
    if (!d.rotations_.count(v))
      throw std::invalid_argument("rotation at unknown vertex");
    for (const auto& ee : entries)
      if (!d.edges_.count(ee.edge) || (ee.end != 0 && ee.end != 1))
        throw std::invalid_argument("rotation references unknown edge end");
    d.rotations_[v] = entries;
  }
  return d;
}

DrawingReport Drawing::validate(bool require_simple) const {
  DrawingReport report;
  auto complain = [&](const std::string& s) { report.violations.push_back(s); };

  for (const auto& [id, e] : edges_) {
    if (e.u == e.v) complain("loop edge " + std::to_string(id));
    if (!rotations_.count(e.u) || !rotations_.count(e.v))
      complain("edge " + std::to_string(id) + " has a missing endpoint");
  }

  // 1-planarity and good-drawing conditions
  std::map<int, int> uses;
  for (const auto& [c, info] : crossings_) {
    if (info.orient != 0 && info.orient != 1)
      complain("crossing " + std::to_string(c) + " has a bad orientation bit");
    if (info.e1 == info.e2) {
      complain("crossing " + std::to_string(c) + " pairs an edge with itself");
      continue;
    }
    if (!edges_.count(info.e1) || !edges_.count(info.e2)) {
      complain("crossing " + std::to_string(c) + " references unknown edge");
      continue;
    }
    ++uses[info.e1];
    ++uses[info.e2];
    const auto& a = edges_.at(info.e1);
    const auto& b = edges_.at(info.e2);
    if (a.u == b.u || a.u == b.v || a.v == b.u || a.v == b.v)
      complain("1-planarity violated: crossing edges " + std::to_string(info.e1) +
               " and " + std::to_string(info.e2) + " share an endpoint");
  }
  for (const auto& [e, count] : uses)
    if (count > 1)
      complain("1-planarity violated: edge " + std::to_string(e) +
               " participates in " + std::to_string(count) + " crossings");

  // rotation consistency: every edge end appears exactly once at its endpoint
  std::map<std::pair<int, int>, int> end_seen;  // (edge, end) -> count
  for (const auto& [v, entries] : rotations_) {
    for (const auto& ee : entries) {
      auto it = edges_.find(ee.edge);
      if (it == edges_.end() || (ee.end != 0 && ee.end != 1)) {
        complain("rotation at " + std::to_string(v) + " references a bad edge end");
        continue;
      }
      if (it->second.endpoint(ee.end) != v)
        complain("rotation at " + std::to_string(v) + " holds end " +
                 std::to_string(ee.end) + " of edge " + std::to_string(ee.edge) +
                 " which belongs elsewhere");
      ++end_seen[{ee.edge, ee.end}];
    }
  }
  for (const auto& [id, e] : edges_) {
    (void)e;
    for (int end = 0; end < 2; ++end) {
      int count = end_seen.count({id, end}) ? end_seen[{id, end}] : 0;
      if (count != 1)
        complain("edge " + std::to_string(id) + " end " + std::to_string(end) +
                 " appears " + std::to_string(count) + " times in rotations");
    }
  }

  if (require_simple) {
    std::set<VertexPair> pairs;
    for (const auto& [id, e] : edges_) {
      (void)id;
      if (!pairs.insert(canon(e.u, e.v)).second)
        complain("multi-edge between " + std::to_string(e.u) + " and " +
                 std::to_string(e.v));
    }
  }

  if (!report.ok()) return report;  // planarization needs structural sanity

  // Euler identity per connected component of the planarization.
  Planarization plan(*this);
  std::map<Node, int> comp;
  int comp_count = 0;
  for (const auto& [node, darts] : plan.rot) {
    (void)darts;
    if (comp.count(node)) continue;
    std::vector<Node> stack{node};
    comp[node] = comp_count;
    while (!stack.empty()) {
      Node w = stack.back();
      stack.pop_back();
      for (const auto& dart : plan.rot.at(w)) {
        Node t = plan.dart_target(dart);
        if (!comp.count(t)) {
          comp[t] = comp_count;
          stack.push_back(t);
        }
      }
    }
    ++comp_count;
  }
  std::vector<int> vs(comp_count, 0), es(comp_count, 0), fs(comp_count, 0);
  for (const auto& [node, c] : comp) (void)node, ++vs[c];
  for (const auto& [id, e] : edges_) {
    (void)e;
    int c = comp[vnode(edges_.at(id).u)];
    es[c] += is_crossed(id) ? 2 : 1;  // segments
  }
  for (const auto& orbit : plan.face_darts)
    ++fs[comp[plan.dart_source(orbit.front())]];
  for (int c = 0; c < comp_count; ++c) {
    if (es[c] == 0) continue;  // isolated vertex
    if (vs[c] - es[c] + fs[c] != 2)
      complain("rotation system is not a planar embedding: component has V=" +
               std::to_string(vs[c]) + " E=" + std::to_string(es[c]) + " F=" +
               std::to_string(fs[c]));
  }
  return report;
}

std::vector<Face> Drawing::faces() const {
  Planarization plan(*this);
  std::vector<Face> result;
  for (const auto& orbit : plan.face_darts) {
    Face f;
    for (const auto& dart : orbit) {
      auto [e, half, dir] = dart;
      Node src = plan.dart_source(dart);
      f.boundary.push_back({src.first == 1, src.second, e, half});
    }
    result.push_back(std::move(f));
  }
  return result;
}

int Drawing::corner_face(const Corner& c) const {
  Planarization plan(*this);
  return plan.wedge_face(vnode(c.vertex), c.pos);
}

std::array<VertexPair, 4> Drawing::potential_kite_edges(int c) const {
  auto it = crossings_.find(c);
  if (it == crossings_.end())
    throw std::invalid_argument("unknown crossing id " + std::to_string(c));
  const auto& e1 = edges_.at(it->second.e1);
  const auto& e2 = edges_.at(it->second.e2);
  std::array<int, 4> w = it->second.orient == 0
                             ? std::array<int, 4>{e1.u, e2.u, e1.v, e2.v}
                             : std::array<int, 4>{e1.u, e2.v, e1.v, e2.u};
  return {VertexPair{w[0], w[1]}, VertexPair{w[1], w[2]}, VertexPair{w[2], w[3]},
          VertexPair{w[3], w[0]}};
}

namespace {

// Half segment of crossing c incident to its endpoint p.
std::pair<int, int> half_toward(const Drawing& d, int c, int p) {
  const auto& info = d.crossings().at(c);
  const auto& a = d.edges().at(info.e1);
  const auto& b = d.edges().at(info.e2);
  if (a.u == p) return {info.e1, 0};
  if (a.v == p) return {info.e1, 1};
  if (b.u == p) return {info.e2, 0};
  if (b.v == p) return {info.e2, 1};
  throw std::invalid_argument("vertex is not an endpoint of the crossing");
}

bool is_kite_pair(const Drawing& d, int c, int p, int q) {
  for (auto [a, b] : d.potential_kite_edges(c))
    if ((a == p && b == q) || (a == q && b == p)) return true;
  return false;
}

}  // namespace

std::pair<Corner, Corner> Drawing::kite_corners(int c, int p, int q) const {
  if (!is_kite_pair(*this, c, p, q))
    throw std::invalid_argument("(" + std::to_string(p) + "," + std::to_string(q) +
                                ") is not a kite pair of crossing " + std::to_string(c));
  Planarization plan(*this);
  auto [ep, hp] = half_toward(*this, c, p);
  auto [eq, hq] = half_toward(*this, c, q);

  // The wedge at the crossing node between the darts toward p and q.
  const auto& r = plan.rot.at(cnode(c));
  int ip = -1, iq = -1;
  for (int i = 0; i < 4; ++i) {
    auto [e, h, dir] = r[i];
    (void)dir;
    if (e == ep && h == hp) ip = i;
    if (e == eq && h == hq) iq = i;
  }
  int wedge_pos = (ip + 1) % 4 == iq ? iq : ip;  // entry following the other
  int face = plan.dart_face.at(r[wedge_pos]);

  auto corner_at = [&](int vertex, int e, int h) -> Corner {
    const auto& orbit = plan.face_darts.at(face);
    const auto& vr = rotations_.at(vertex);
    auto index_of = [&](int edge, int end) {
      for (size_t i = 0; i < vr.size(); ++i)
        if (vr[i].edge == edge && vr[i].end == end) return static_cast<int>(i);
      throw std::logic_error("edge end missing from rotation");
    };
    int end = (h == 0) ? 0 : 1;  // vertex end of the half segment
    for (size_t i = 0; i < orbit.size(); ++i) {
      auto [de, dh, dir] = orbit[i];
      if (de != e || dh != h) continue;
      if (plan.dart_target(orbit[i]) == vnode(vertex)) {
        // face arrives at the vertex along the half edge; the corner is the
        // wedge just after it, i.e. before the next leaving dart
        auto [ne, nh, ndir] = orbit[(i + 1) % orbit.size()];
        (void)ndir;
        const auto& vrot = plan.rot.at(vnode(vertex));
        for (size_t j = 0; j < vrot.size(); ++j) {
          auto [je, jh, jd] = vrot[j];
          (void)jd;
          if (je == ne && jh == nh) return Corner{vertex, static_cast<int>(j)};
        }
      } else if (plan.dart_source(orbit[i]) == vnode(vertex)) {
        // face leaves the vertex along the half edge; the corner precedes it
        return Corner{vertex, index_of(e, end)};
      }
    }
    throw std::logic_error("kite face does not touch the expected vertex");
  };

  return {corner_at(p, ep, hp), corner_at(q, eq, hq)};
}

bool Drawing::bounds_kite_region_at(int e, int c) const {
  if (is_crossed(e)) return false;
  for (const auto& f : faces()) {
    if (f.length() != 3) continue;
    bool has_e = false;
    int crossing_host = -1;
    int halves = 0;
    for (const auto& fc : f.boundary) {
      if (!fc.at_crossing && fc.edge == e) has_e = true;
      if (fc.at_crossing) crossing_host = fc.host;
      if (crossing_of(fc.edge) && fc.edge != e) ++halves;
    }
    if (has_e && crossing_host == c && halves == 2) return true;
  }
  return false;
}

int Drawing::incident_kite_regions(int e) const {
  if (is_crossed(e)) return 0;
  int count = 0;
  for (const auto& f : faces()) {
    if (f.length() != 3) continue;
    bool has_e = false;
    std::set<int> hosts;
    int halves = 0;
    for (const auto& fc : f.boundary) {
      if (!fc.at_crossing && fc.edge == e) has_e = true;
      if (fc.at_crossing) hosts.insert(fc.host);
      if (crossing_of(fc.edge) && fc.edge != e) ++halves;
    }
    if (has_e && hosts.size() == 1 && halves == 2) ++count;
  }
  return count;
}

std::vector<EmptyLens> Drawing::find_empty_lenses() const {
  std::vector<EmptyLens> lenses;
  std::set<VertexPair> seen;
  for (const auto& f : faces()) {
    if (f.length() != 2) continue;
    int a = f.boundary[0].edge, b = f.boundary[1].edge;
    if (a == b || is_crossed(a) || is_crossed(b)) continue;
    auto ea = edges_.at(a), eb = edges_.at(b);
    if (canon(ea.u, ea.v) != canon(eb.u, eb.v)) continue;
    auto key = canon(std::min(a, b), std::max(a, b));
    if (seen.insert(key).second)
      lenses.push_back({std::min(a, b), std::max(a, b)});
  }
  return lenses;
}

bool Drawing::has_empty_theta() const {
  // group uncrossed copies by endpoint pair
  std::map<VertexPair, std::vector<int>> classes;
  for (const auto& [id, e] : edges_)
    if (!is_crossed(id)) classes[canon(e.u, e.v)].push_back(id);

  std::set<std::pair<int, int>> lens_pairs;
  for (const auto& lens : find_empty_lenses())
    lens_pairs.insert({lens.edge_a, lens.edge_b});

  for (const auto& [pair, ids] : classes) {
    (void)pair;
    if (ids.size() < 3) continue;
    for (size_t i = 0; i < ids.size(); ++i)
      for (size_t j = i + 1; j < ids.size(); ++j)
        for (size_t l = j + 1; l < ids.size(); ++l) {
          int lenses = lens_pairs.count({ids[i], ids[j]}) +
                       lens_pairs.count({ids[i], ids[l]}) +
                       lens_pairs.count({ids[j], ids[l]});
          if (lenses >= 2) return true;
        }
  }
  return false;
}

std::pair<Graph, std::vector<int>> Drawing::to_graph() const {
  std::vector<int> ids;
  for (const auto& [v, r] : rotations_) (void)r, ids.push_back(v);
  std::map<int, int> index;
  for (size_t i = 0; i < ids.size(); ++i) index[ids[i]] = static_cast<int>(i);
  EdgeList edges;
  std::set<VertexPair> seen;
  for (const auto& [id, e] : edges_) {
    (void)id;
    auto pair = canon(index.at(e.u), index.at(e.v));
    if (!seen.insert(pair).second)
      throw std::invalid_argument("drawing has multi-edges; no simple graph view");
    edges.push_back(pair);
  }
  return {Graph::build(static_cast<int>(ids.size()), edges), ids};
}

int Drawing::component_count() const { return Planarization(*this).components(); }

// --- in-place surgery ---

void Drawing::add_vertex(int v) {
  if (rotations_.count(v)) throw std::invalid_argument("vertex already present");
  rotations_[v] = {};
}

void Drawing::remove_rotation_entry(int v, int edge, int end) {
  auto& r = rotations_.at(v);
  for (size_t i = 0; i < r.size(); ++i)
    if (r[i].edge == edge && r[i].end == end) {
      r.erase(r.begin() + static_cast<long>(i));
      return;
    }
  throw std::logic_error("rotation entry to remove not found");
}

void Drawing::dissolve_crossing_on(int e) {
  auto it = edge_crossing_.find(e);
  if (it == edge_crossing_.end()) return;
  int c = it->second;
  const auto& info = crossings_.at(c);
  edge_crossing_.erase(info.e1);
  edge_crossing_.erase(info.e2);
  crossings_.erase(c);
}

int Drawing::insert_uncrossed_edge(int u, int v, Corner cu, Corner cv,
                                   bool allow_multi, int forced_id) {
  if (u == v) throw std::invalid_argument("loop edges are not allowed");
  if (cu.vertex != u || cv.vertex != v)
    throw std::invalid_argument("corners do not address the edge endpoints");
  if (!allow_multi && !edge_ids_between(u, v).empty())
    throw std::invalid_argument("edge exists already and multi-edges not requested");
  // An isolated endpoint sits in whatever face the other corner names, so
  // the common-face requirement only bites when both ends have edges.
  if (!rotations_.at(u).empty() && !rotations_.at(v).empty()) {
    Planarization plan(*this);
    if (plan.wedge_face(vnode(u), cu.pos) != plan.wedge_face(vnode(v), cv.pos))
      throw std::invalid_argument("corners are not on a common face");
  }
  int id = forced_id >= 0 ? forced_id : next_edge_id();
  if (edges_.count(id)) throw std::invalid_argument("edge id in use");
  edges_[id] = {u, v};
  auto& ru = rotations_.at(u);
  ru.insert(ru.begin() + (cu.pos % (static_cast<int>(ru.size()) + 1)), {id, 0});
  auto& rv = rotations_.at(v);
  rv.insert(rv.begin() + (cv.pos % (static_cast<int>(rv.size()) + 1)), {id, 1});
  return id;
}

int Drawing::insert_kite_edge(int c, int p, int q, bool allow_multi, int forced_id) {
  auto [cp, cq] = kite_corners(c, p, q);
  return insert_uncrossed_edge(p, q, cp, cq, allow_multi, forced_id);
}

int Drawing::insert_edge_crossing(int a, int b, Corner ca, Corner cb,
                                  int over_edge, int orient) {
  if (a == b) throw std::invalid_argument("loop edges are not allowed");
  if (!edges_.count(over_edge) || is_crossed(over_edge))
    throw std::invalid_argument("crossed-over edge missing or already crossed");
  int id = next_edge_id();
  edges_[id] = {a, b};
  auto& ra = rotations_.at(a);
  ra.insert(ra.begin() + (ca.pos % (static_cast<int>(ra.size()) + 1)), {id, 0});
  auto& rb = rotations_.at(b);
  rb.insert(rb.begin() + (cb.pos % (static_cast<int>(rb.size()) + 1)), {id, 1});
  int cid = next_crossing_id();
  crossings_[cid] = {id, over_edge, orient};
  edge_crossing_[id] = cid;
  edge_crossing_[over_edge] = cid;
  return id;
}

void Drawing::reroute_as_kite(int e, int c) {
  auto it = edges_.find(e);
  if (it == edges_.end()) throw std::invalid_argument("unknown edge id");
  const auto& info = crossings_.at(c);
  if (info.e1 == e || info.e2 == e)
    throw std::invalid_argument("an edge is not a kite of its own crossing");
  int p = it->second.u, q = it->second.v;
  if (!is_kite_pair(*this, c, p, q))
    throw std::invalid_argument("edge endpoints are not a kite pair of the crossing");
  remove_rotation_entry(p, e, 0);
  remove_rotation_entry(q, e, 1);
  dissolve_crossing_on(e);
  auto [cp, cq] = kite_corners(c, p, q);
  auto& rp = rotations_.at(p);
  rp.insert(rp.begin() + (cp.pos % (static_cast<int>(rp.size()) + 1)), {e, 0});
  auto& rq = rotations_.at(q);
  rq.insert(rq.begin() + (cq.pos % (static_cast<int>(rq.size()) + 1)), {e, 1});
}

void Drawing::delete_edge(int e) {
  auto it = edges_.find(e);
  if (it == edges_.end()) throw std::invalid_argument("unknown edge id");
  dissolve_crossing_on(e);
  remove_rotation_entry(it->second.u, e, 0);
  remove_rotation_entry(it->second.v, e, 1);
  edges_.erase(it);
}

void Drawing::delete_vertex(int v) {
  auto it = rotations_.find(v);
  if (it == rotations_.end()) throw std::invalid_argument("unknown vertex id");
  std::vector<int> incident;
  for (const auto& ee : it->second) incident.push_back(ee.edge);
  for (int e : incident) delete_edge(e);
  rotations_.erase(v);
}

int Drawing::splice_path(int s, int t, int u) {
  auto pick_edge = [&](int a, int b) {
    auto ids = edge_ids_between(a, b);
    if (ids.empty()) throw std::invalid_argument("path edge missing");
    return ids.front();
  };
  if (t == s || t == u || s == u) throw std::invalid_argument("degenerate path");
  int e1 = pick_edge(s, t);
  int e2 = pick_edge(t, u);
  if (is_crossed(e1) && is_crossed(e2))
    throw std::invalid_argument("path has two crossings; cannot splice");

  auto index_at = [&](int v, int edge, int end) {
    const auto& r = rotations_.at(v);
    for (size_t i = 0; i < r.size(); ++i)
      if (r[i].edge == edge && r[i].end == end) return static_cast<int>(i);
    throw std::logic_error("edge end missing from rotation");
  };
  const auto ed1 = edges_.at(e1);
  const auto ed2 = edges_.at(e2);
  int end_s = ed1.u == s ? 0 : 1;
  int end_u = ed2.u == u ? 0 : 1;
  int pos_s = index_at(s, e1, end_s);
  int pos_u = index_at(u, e2, end_u);

  int id = next_edge_id();
  DrawingEdge ne{};
  std::optional<int> inherit;
  if (is_crossed(e1)) {
    inherit = crossing_of(e1);
    ne = {ed1.u == t ? u : ed1.u, ed1.v == t ? u : ed1.v};
  } else if (is_crossed(e2)) {
    inherit = crossing_of(e2);
    ne = {ed2.u == t ? s : ed2.u, ed2.v == t ? s : ed2.v};
  } else {
    ne = {s, u};
  }

  remove_rotation_entry(s, e1, end_s);
  remove_rotation_entry(t, e1, 1 - end_s);
  remove_rotation_entry(t, e2, 1 - end_u);
  remove_rotation_entry(u, e2, end_u);
  if (inherit) {
    auto& info = crossings_.at(*inherit);
    if (info.e1 == e1 || info.e1 == e2) info.e1 = id;
    if (info.e2 == e1 || info.e2 == e2) info.e2 = id;
    edge_crossing_.erase(e1);
    edge_crossing_.erase(e2);
    edge_crossing_[id] = *inherit;
  }
  edges_.erase(e1);
  edges_.erase(e2);
  edges_[id] = ne;
  int new_end_s = ne.u == s ? 0 : 1;
  auto& rs = rotations_.at(s);
  rs.insert(rs.begin() + pos_s, {id, new_end_s});
  auto& ru = rotations_.at(u);
  ru.insert(ru.begin() + pos_u, {id, 1 - new_end_s});
  return id;
}

// --- value-returning wrappers ---

Drawing Drawing::with_uncrossed_edge(int u, int v, Corner cu, Corner cv,
                                     bool allow_multi) const {
  Drawing d = *this;
  d.insert_uncrossed_edge(u, v, cu, cv, allow_multi);
  return d;
}

Drawing Drawing::with_kite_edge(int c, int p, int q, bool allow_multi) const {
  Drawing d = *this;
  d.insert_kite_edge(c, p, q, allow_multi);
  return d;
}

Drawing Drawing::rerouted_as_kite(int e, int c) const {
  Drawing d = *this;
  d.reroute_as_kite(e, c);
  return d;
}

Drawing Drawing::without_vertex(int v) const {
  Drawing d = *this;
  d.delete_vertex(v);
  return d;
}

Drawing Drawing::without_edge(int e) const {
  Drawing d = *this;
  d.delete_edge(e);
  return d;
}

Drawing Drawing::subdrawing(const std::vector<int>& keep) const {
  std::set<int> kept(keep.begin(), keep.end());
  for (int v : kept)
    if (!rotations_.count(v)) throw std::invalid_argument("unknown vertex in keep set");
  if (kept.empty()) throw std::invalid_argument("empty subdrawing requested");
  Drawing d;
  std::set<int> kept_edges;
  for (const auto& [id, e] : edges_)
    if (kept.count(e.u) && kept.count(e.v)) {
      d.edges_[id] = e;
      kept_edges.insert(id);
    }
  int cid = 0;
  for (const auto& [c, info] : crossings_) {
    (void)c;
    if (kept_edges.count(info.e1) && kept_edges.count(info.e2)) {
      d.crossings_[cid] = info;
      d.edge_crossing_[info.e1] = cid;
      d.edge_crossing_[info.e2] = cid;
      ++cid;
    }
  }
  for (int v : kept) {
    auto& out = d.rotations_[v];
    for (const auto& ee : rotations_.at(v))
      if (kept_edges.count(ee.edge)) out.push_back(ee);
  }
  return d;
}

Drawing extract_subdrawing(const Drawing& d, const std::vector<int>& keep) {
  return d.subdrawing(keep);
}

}  // namespace onematch
