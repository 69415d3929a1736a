#pragma once

#include <map>
#include <set>
#include <string>
#include <vector>

#include "onematch/drawing.hpp"
#include "onematch/graph.hpp"

namespace onematch {

/// Flowers: alternating closed walks of length <= 7 rooted at a free vertex.
/// Cycle-flowers have an empty stem; the only stemmed shape is the 7-flower
/// f-s-t-x0-x1-t with matched (s,t) and (x0,x1).
struct FlowerReport {
  std::vector<int> V_C;  // vertices on some cycle-flower
  std::vector<int> F_C;  // free roots
  EdgeList M_C;          // matching edges within V_C
  std::vector<int> T_B;  // stem/blossom hinge vertices (computed on G minus V_C)
  EdgeList M_B;          // blossom matching edges
  std::vector<int> V_B;  // T_B plus V(M_B)
  std::map<int, VertexPair> cycle_witness;    // root -> first matching edge
  std::map<int, VertexPair> blossom_witness;  // hinge -> blossom edge
  std::vector<std::string> failures;  // materialized contradiction paths
  bool ok() const { return failures.empty(); }
};

/// Populates V_C/F_C/M_C and the injective root witness. Throws when the
/// matching still has an augmenting path of length <= 9.
FlowerReport find_cycle_flowers(const Graph& g, const Matching& m);

/// Completes the report with T_B/M_B/V_B on the graph with V_C removed.
/// A witness collision is reported as a failure with the augmenting path
/// it implies.
FlowerReport find_stem_blossoms(const Graph& g, const Matching& m,
                                FlowerReport partial);

/// Alternating-distance levels on G minus V_C minus V_B. Matched status is
/// taken from the original matching: a vertex whose partner was removed is
/// still matched and cannot be left via a matching edge.
struct Decomposition {
  std::vector<int> F_H;     // level 0: free vertices
  std::vector<int> S;       // level 1
  std::vector<int> T_H;     // level 2
  std::vector<int> U;       // level 3
  std::vector<int> beyond;  // level >= 4 or unreachable
  EdgeList M_S;  // matching edges incident to S
  EdgeList M_U;  // matching edges incident to U
};

Decomposition alternating_levels(const Graph& g, const Matching& m,
                                 const FlowerReport& flowers);

/// Graph-side assertions about the level structure: level bipartiteness
/// bullet by bullet, absence of neighbours outside H for F_H and T_H
/// vertices, and the set-size identities. Returns violation descriptions
/// with witness edges; empty means all hold. Needs no drawing (none of
/// these facts depend on planarity).
std::vector<std::string> check_level_structure(const Graph& g, const Matching& m,
                                               const FlowerReport& flowers,
                                               const Decomposition& dec);

/// The auxiliary graph H: host subdrawing induced on levels 0..3, with the
/// level sets carried along in drawing-id space. Structural assertions
/// (level bipartiteness, absence of back edges, set-size identities,
/// degree preservation) are evaluated into `failures`.
struct LabeledH {
  Drawing H;
  std::set<int> F_H, S, T_H, U;  // drawing ids
  std::vector<std::string> failures;
  bool ok() const { return failures.empty(); }
};

/// `ids` maps graph index -> drawing vertex id (as from Drawing::to_graph).
LabeledH build_H(const Drawing& d, const std::vector<int>& ids, const Graph& g,
                 const Matching& m, const FlowerReport& flowers,
                 const Decomposition& dec);

}  // namespace onematch
