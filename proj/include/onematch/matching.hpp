#pragma once

#include <optional>
#include <vector>

#include "onematch/graph.hpp"

namespace onematch {

/// Simple path whose edges strictly alternate between unmatched and matched.
struct AlternatingPath {
  std::vector<int> vertices;   // v0..vk, distinct
  std::vector<bool> matched;   // per edge; augmenting paths start and end false
  int length() const { return static_cast<int>(matched.size()); }
};

/// Shortest augmenting path of length <= k, or nothing. Deterministic:
/// iterative deepening over odd lengths, lowest free start vertex first,
/// lexicographic neighbor order. Even k is lowered to k-1.
/// Throws if M is invalid for g.
std::optional<AlternatingPath> find_bounded_augmenting_path(const Graph& g,
                                                            const Matching& m,
                                                            int k);

/// Symmetric difference of M with an augmenting path; |result| = |M| + 1.
/// Throws if p is not augmenting for M.
Matching augment(const Matching& m, const AlternatingPath& p);

/// Repeatedly augments along shortest paths until no augmenting path of
/// length <= k remains.
Matching eliminate_bounded_augmenting_paths(const Graph& g, const Matching& m0,
                                            int k);

/// Maximum-cardinality matching by subset DP. Throws when n exceeds the cap.
Matching brute_force_maximum_matching(const Graph& g, int cap = 16);

}  // namespace onematch
