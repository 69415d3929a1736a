#pragma once

#include <array>
#include <map>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "onematch/graph.hpp"

namespace onematch {

/// Reference to one end of an edge inside a rotation: end 0 is the stored
/// `u` endpoint, end 1 the stored `v` endpoint.
struct EdgeEnd {
  int edge;
  int end;
  bool operator==(const EdgeEnd&) const = default;
  auto operator<=>(const EdgeEnd&) const = default;
};

struct DrawingEdge {
  int u, v;
  int endpoint(int end) const { return end == 0 ? u : v; }
  bool operator==(const DrawingEdge&) const = default;
};

/// Pairing of two edges at a crossing point. `orient` fixes the
/// interleaving of the four half-edges around the crossing: 0 means the
/// cyclic order of far endpoints is (e1.u, e2.u, e1.v, e2.v), 1 means
/// (e1.u, e2.v, e1.v, e2.u).
struct CrossingInfo {
  int e1, e2;
  int orient;
};

/// Insertion site for an uncrossed edge: the face wedge between rotation
/// entries pos-1 and pos (cyclically) at `vertex`.
struct Corner {
  int vertex;
  int pos;
};

/// One corner of a face of the planarization. `host` is a vertex id when
/// !at_crossing, otherwise a crossing id; (edge, half) names the segment
/// the boundary walk leaves this host along (half 1 is the far half of a
/// crossed edge, 0 otherwise).
struct FaceCorner {
  bool at_crossing;
  int host;
  int edge;
  int half;
};

struct Face {
  std::vector<FaceCorner> boundary;
  int length() const { return static_cast<int>(boundary.size()); }
};

struct DrawingReport {
  std::vector<std::string> violations;
  bool ok() const { return violations.empty(); }
};

struct EmptyLens {
  int edge_a, edge_b;  // two uncrossed parallel copies bounding a 2-face
};

/// Combinatorial 1-planar drawing: rotation system plus crossing pairing.
/// Multi-edges are permitted (distinct ids), loops are not. Disconnected
/// drawings are allowed; faces are traversed per connected component.
class Drawing {
public:
  Drawing() = default;

  /// Builds from explicit parts. Structural errors (dangling references,
  /// malformed rotations) throw; embedding-level problems are left to
  /// validate().
  static Drawing from_parts(const std::vector<int>& vertices,
                            const std::map<int, DrawingEdge>& edges,
                            const std::vector<CrossingInfo>& crossings,
                            const std::map<int, std::vector<EdgeEnd>>& rotations);

  // --- inspection ---
  const std::map<int, std::vector<EdgeEnd>>& rotations() const { return rotations_; }
  const std::map<int, DrawingEdge>& edges() const { return edges_; }
  const std::map<int, CrossingInfo>& crossings() const { return crossings_; }
  bool has_vertex(int v) const { return rotations_.count(v) > 0; }
  bool has_edge(int e) const { return edges_.count(e) > 0; }
  int vertex_count() const { return static_cast<int>(rotations_.size()); }
  int edge_count() const { return static_cast<int>(edges_.size()); }
  int crossing_count() const { return static_cast<int>(crossings_.size()); }
  /// Crossing id on edge e, or nothing when e is uncrossed.
  std::optional<int> crossing_of(int e) const;
  bool is_crossed(int e) const { return crossing_of(e).has_value(); }
  int degree(int v) const { return static_cast<int>(rotations_.at(v).size()); }
  /// deg(v) plus the number of incident uncrossed edges.
  int crossing_weighted_degree(int v) const;
  /// All edge ids connecting u and v (any copy).
  std::vector<int> edge_ids_between(int u, int v) const;
  int next_edge_id() const;
  int next_crossing_id() const;
  /// Number of connected components of the planarization.
  int component_count() const;

  /// Full invariant check: 1-planarity, good-drawing condition, rotation
  /// consistency, and the per-component Euler identity of the
  /// planarization. With require_simple, multi-edges are violations too.
  DrawingReport validate(bool require_simple = false) const;

  /// Faces of the planarization via rotation-system traversal.
  std::vector<Face> faces() const;

  /// Face id (index into faces(), same deterministic order) of the wedge a
  /// corner addresses.
  int corner_face(const Corner& c) const;

  /// The 4 kite pairs (w_i, w_{i+1}) in cyclic order around crossing c.
  std::array<VertexPair, 4> potential_kite_edges(int c) const;

  /// Corners at p and q addressing the wedge face at crossing c between
  /// the half-edges toward p and q; (p,q) must be a kite pair of c.
  std::pair<Corner, Corner> kite_corners(int c, int p, int q) const;

  /// True iff uncrossed edge e bounds a kite-region of crossing c (a
  /// 3-face made of e and two half-edges meeting at c).
  bool bounds_kite_region_at(int e, int c) const;
  /// Number of kite-regions among the (at most two) faces incident to e.
  int incident_kite_regions(int e) const;

  std::vector<EmptyLens> find_empty_lenses() const;
  bool has_empty_theta() const;

  /// Underlying simple graph with sorted-id compaction. Throws when the
  /// drawing has multi-edges.
  std::pair<Graph, std::vector<int>> to_graph() const;

  // --- surgery (value-returning; see also in-place core below) ---
  Drawing with_uncrossed_edge(int u, int v, Corner cu, Corner cv,
                              bool allow_multi = false) const;
  Drawing with_kite_edge(int c, int p, int q, bool allow_multi = false) const;
  Drawing rerouted_as_kite(int e, int c) const;
  Drawing without_vertex(int v) const;
  Drawing without_edge(int e) const;
  Drawing subdrawing(const std::vector<int>& keep) const;

  // --- in-place surgery core (used by the transform pipeline) ---
  void add_vertex(int v);
  /// Inserts a new uncrossed edge id at the two corners. Throws when the
  /// corners do not lie on a common face or the copy would duplicate an
  /// existing edge while !allow_multi.
  int insert_uncrossed_edge(int u, int v, Corner cu, Corner cv,
                            bool allow_multi = false, int forced_id = -1);
  int insert_kite_edge(int c, int p, int q, bool allow_multi = false,
                       int forced_id = -1);
  /// Inserts edge (a,b) at the two corners together with a crossing over
  /// an existing uncrossed edge. The caller supplies the interleaving bit.
  int insert_edge_crossing(int a, int b, Corner ca, Corner cb, int over_edge,
                           int orient);
  void reroute_as_kite(int e, int c);
  void delete_edge(int e);
  void delete_vertex(int v);
  /// Replaces the two-edge path s-t-u by a single edge drawn along it,
  /// inheriting the path's crossing if any. Both path edges must exist
  /// and t must not equal s or u. Returns the new edge id. Other edges
  /// at t are untouched.
  int splice_path(int s, int t, int u);

private:
  std::map<int, std::vector<EdgeEnd>> rotations_;
  std::map<int, DrawingEdge> edges_;
  std::map<int, CrossingInfo> crossings_;
  std::map<int, int> edge_crossing_;  // edge id -> crossing id

  void remove_rotation_entry(int v, int edge, int end);
  void dissolve_crossing_on(int e);
  friend struct Planarization;
};

/// Report wrapper matching the spec surface.
inline DrawingReport validate_drawing(const Drawing& d, bool require_simple = false) {
  return d.validate(require_simple);
}

/// Induced subdrawing on `keep`; crossings survive iff both edges do.
/// Throws on an empty result. May be disconnected.
Drawing extract_subdrawing(const Drawing& d, const std::vector<int>& keep);

}  // namespace onematch
