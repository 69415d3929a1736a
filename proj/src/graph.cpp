#include "onematch/graph.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace onematch {

Graph Graph::build(int vertex_count, const EdgeList& edges) {
  if (vertex_count < 0) throw std::invalid_argument("negative vertex count");
  Graph g;
  g.adjacency_.resize(vertex_count);
  std::set<VertexPair> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= vertex_count || v >= vertex_count)
      throw std::invalid_argument("edge endpoint out of range: (" +
                                  std::to_string(u) + "," + std::to_string(v) + ")");
    if (u == v)
      throw std::invalid_argument("loop edge at vertex " + std::to_string(u));
    auto e = canon(u, v);
    if (!seen.insert(e).second)
      throw std::invalid_argument("duplicate edge (" + std::to_string(e.first) +
                                  "," + std::to_string(e.second) + ")");
  }
  g.edges_.assign(seen.begin(), seen.end());
  for (auto [u, v] : g.edges_) {
    g.adjacency_[u].push_back(v);
    g.adjacency_[v].push_back(u);
  }
  for (auto& adj : g.adjacency_) std::sort(adj.begin(), adj.end());
  return g;
}

bool Graph::has_edge(int u, int v) const {
  if (u < 0 || v < 0 || u >= n() || v >= n()) return false;
  const auto& adj = adjacency_[u];
  return std::binary_search(adj.begin(), adj.end(), v);
}

bool Graph::connected() const {
  if (n() == 0) return true;
  std::vector<char> seen(n(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  int count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int w : adjacency_[v])
      if (!seen[w]) {
        seen[w] = 1;
        ++count;
        stack.push_back(w);
      }
  }
  return count == n();
}

int min_degree(const Graph& g) {
  if (g.n() == 0) throw std::invalid_argument("min_degree of empty graph");
  int best = g.degree(0);
  for (int v = 1; v < g.n(); ++v) best = std::min(best, g.degree(v));
  return best;
}

Matching Matching::from_edges(int n, const EdgeList& edges) {
  Matching m;
  m.partner_.assign(n, -1);
  std::set<VertexPair> seen;
  for (auto [u, v] : edges) {
    if (u < 0 || v < 0 || u >= n || v >= n)
      throw std::invalid_argument("matching endpoint out of range");
    if (u == v) throw std::invalid_argument("matching loop edge");
    seen.insert(canon(u, v));
  }
  m.edges_.assign(seen.begin(), seen.end());
  for (auto [u, v] : m.edges_) {
    if (m.partner_[u] >= 0 || m.partner_[v] >= 0) m.disjoint_ = false;
    m.partner_[u] = v;
    m.partner_[v] = u;
  }
  if (!m.disjoint_) {
    // partner lookup is unreliable; keep edges for diagnostics only
    m.partner_.assign(n, -1);
  }
  return m;
}

bool Matching::contains(int u, int v) const {
  auto e = canon(u, v);
  return std::binary_search(edges_.begin(), edges_.end(), e);
}

MatchingIssues validate_matching(const Graph& g, const Matching& m) {
  MatchingIssues issues;
  if (m.n() != g.n())
    issues.reasons.push_back("matching built for different vertex count");
  std::vector<int> uses(g.n(), 0);
  for (auto [u, v] : m.edges()) {
    if (u >= g.n() || v >= g.n()) {
      issues.reasons.push_back("endpoint out of range (" + std::to_string(u) +
                               "," + std::to_string(v) + ")");
      continue;
    }
    if (!g.has_edge(u, v))
      issues.reasons.push_back("(" + std::to_string(u) + "," +
                               std::to_string(v) + ") is not an edge of the graph");
    ++uses[u];
    ++uses[v];
  }
  for (int v = 0; v < g.n(); ++v)
    if (uses[v] > 1)
      issues.reasons.push_back("vertex " + std::to_string(v) +
                               " shared by multiple matching edges");
  return issues;
}

std::vector<int> free_vertices(const Graph& g, const Matching& m) {
  auto issues = validate_matching(g, m);
  if (!issues.ok()) throw std::invalid_argument("invalid matching: " + issues.reasons.front());
  std::vector<int> free;
  for (int v = 0; v < g.n(); ++v)
    if (!m.is_matched(v)) free.push_back(v);
  return free;
}

}  // namespace onematch
