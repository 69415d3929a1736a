#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "onematch/drawing.hpp"

namespace onematch {

struct GenConfig {
  int n = 16;
  std::uint64_t seed = 0;
  double crossing_fraction = 0.0;  // p
  double deletion_fraction = 0.0;  // q
};

/// Stitches a drawing out of consistently oriented faces (each directed
/// edge used exactly once across all faces). Vertices are the ids that
/// appear; edges get ids in canonical endpoint order.
Drawing drawing_from_oriented_faces(const std::vector<std::vector<int>>& faces);

/// Maximal planar drawing grown by inserting each new vertex into a
/// uniformly chosen face of a seed triangle. Deterministic per seed.
Drawing random_planar_triangulation(int n, std::uint64_t seed);

/// Adds a crossing over a p-fraction of eligible edges: an edge shared by
/// two plain triangles abd, bcd with a != c and (a,c) absent gains the
/// crossing edge (a,c). Skips ineligible edges.
Drawing add_random_crossings(const Drawing& d, double p, std::uint64_t seed);

/// Attempts to delete a q-fraction of uncrossed edges, skipping deletions
/// that would drop a degree below 3 or disconnect the drawing.
Drawing sparsify(const Drawing& d, double q, std::uint64_t seed);

/// Triangulation + crossings + sparsification with sub-seeds derived from
/// config.seed.
Drawing generate(const GenConfig& config);

/// Medial graph of a drawing's planarization-free (planar) embedding:
/// one vertex per edge, 4-regular, planar.
Drawing medial_graph(const Drawing& d);

/// Named instances: "K4", "cube", "icosahedron", "C4_crossed", or
/// "medial:<n>:<seed>" for the medial of a random triangulation.
/// Throws std::invalid_argument on unknown names.
Drawing fixed_instance(const std::string& name);

}  // namespace onematch
