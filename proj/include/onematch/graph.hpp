#pragma once

#include <string>
#include <utility>
#include <vector>

namespace onematch {

using VertexPair = std::pair<int, int>;
using EdgeList = std::vector<VertexPair>;

/// Canonical form for an unordered vertex pair: smaller index first.
inline VertexPair canon(int u, int v) {
  return u < v ? VertexPair{u, v} : VertexPair{v, u};
}

/// Simple undirected graph over dense vertex indices 0..n-1.
class Graph {
public:
  Graph() = default;

  /// Validates and builds. Throws std::invalid_argument on loops,
  /// duplicate edges, or endpoints out of range.
  static Graph build(int vertex_count, const EdgeList& edges);

  int n() const { return static_cast<int>(adjacency_.size()); }
  int m() const { return static_cast<int>(edges_.size()); }

  const EdgeList& edges() const { return edges_; }
  const std::vector<int>& neighbors(int v) const { return adjacency_[v]; }
  int degree(int v) const { return static_cast<int>(adjacency_[v].size()); }
  bool has_edge(int u, int v) const;
  bool connected() const;

private:
  EdgeList edges_;  // canonical pairs, sorted
  std::vector<std::vector<int>> adjacency_;  // sorted neighbor lists
};

/// Minimum vertex degree. Throws on the empty graph.
int min_degree(const Graph& g);

/// Set of vertex-disjoint edges with O(1) partner lookup.
/// May hold a structurally bad edge set so that validate_matching can
/// report on it; engine operations require a valid one.
class Matching {
public:
  Matching() = default;

  /// Canonicalizes and dedupes. Throws only on out-of-range endpoints
  /// or loops; disjointness is checked by validate_matching.
  static Matching from_edges(int n, const EdgeList& edges);

  int n() const { return static_cast<int>(partner_.size()); }
  int size() const { return static_cast<int>(edges_.size()); }
  const EdgeList& edges() const { return edges_; }
  bool disjoint() const { return disjoint_; }

  bool is_matched(int v) const { return partner_[v] >= 0; }
  /// Partner of v, or -1 when free. Meaningful only for disjoint matchings.
  int partner(int v) const { return partner_[v]; }
  bool contains(int u, int v) const;

private:
  EdgeList edges_;  // canonical, sorted
  std::vector<int> partner_;
  bool disjoint_ = true;
};

struct MatchingIssues {
  std::vector<std::string> reasons;
  bool ok() const { return reasons.empty(); }
};

/// True iff M is a set of vertex-disjoint edges of g; reasons list every
/// violation found.
MatchingIssues validate_matching(const Graph& g, const Matching& m);

/// V minus V(M). Throws if M is invalid for g.
std::vector<int> free_vertices(const Graph& g, const Matching& m);

}  // namespace onematch
