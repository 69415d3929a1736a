#include "onematch/matching.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

namespace onematch {

namespace {

struct PathSearch {
  const Graph& g;
  const Matching& m;
  int limit;  // max number of edges
  std::vector<char> on_path;
  std::vector<int> path;
  std::vector<bool> flags;

  bool dfs(int v, int len) {
    if (len >= limit) return false;
    if (len % 2 == 0) {
      // next edge unmatched
      for (int w : g.neighbors(v)) {
        if (on_path[w] || m.partner(v) == w) continue;
        path.push_back(w);
        flags.push_back(false);
        if (!m.is_matched(w)) return true;  // augmenting endpoint
        on_path[w] = 1;
        if (dfs(w, len + 1)) return true;
        on_path[w] = 0;
        path.pop_back();
        flags.pop_back();
      }
    } else {
      int w = m.partner(v);
      if (w >= 0 && !on_path[w]) {
        path.push_back(w);
        flags.push_back(true);
        on_path[w] = 1;
        if (dfs(w, len + 1)) return true;
        on_path[w] = 0;
        path.pop_back();
        flags.pop_back();
      }
    }
    return false;
  }
};

void require_valid(const Graph& g, const Matching& m) {
  auto issues = validate_matching(g, m);
  if (!issues.ok())
    throw std::invalid_argument("invalid matching: " + issues.reasons.front());
}

}  // namespace

std::optional<AlternatingPath> find_bounded_augmenting_path(const Graph& g,
                                                            const Matching& m,
                                                            int k) {
  require_valid(g, m);
  if (k % 2 == 0) --k;  // augmenting paths have odd length
  if (k < 1) return std::nullopt;

  std::vector<int> free;
  for (int v = 0; v < g.n(); ++v)
    if (!m.is_matched(v)) free.push_back(v);

  for (int limit = 1; limit <= k; limit += 2) {
    for (int f : free) {
      PathSearch search{g, m, limit, std::vector<char>(g.n(), 0), {f}, {}};
      search.on_path[f] = 1;
      if (search.dfs(f, 0))
        return AlternatingPath{std::move(search.path), std::move(search.flags)};
    }
  }
  return std::nullopt;
}

Matching augment(const Matching& m, const AlternatingPath& p) {
  const auto& vs = p.vertices;
  if (vs.size() < 2 || p.matched.size() + 1 != vs.size())
    throw std::invalid_argument("malformed path");
  if (p.length() % 2 == 0 || p.matched.front() || p.matched.back())
    throw std::invalid_argument("path does not start and end with unmatched edges");
  if (m.is_matched(vs.front()) || m.is_matched(vs.back()))
    throw std::invalid_argument("path endpoint is matched");
  std::set<int> distinct(vs.begin(), vs.end());
  if (distinct.size() != vs.size())
    throw std::invalid_argument("path repeats a vertex");
  for (size_t i = 0; i + 1 < vs.size(); ++i) {
    bool in_m = m.contains(vs[i], vs[i + 1]);
    if (p.matched[i] != in_m || (i > 0 && p.matched[i] == p.matched[i - 1]))
      throw std::invalid_argument("path is not alternating for this matching");
  }

  std::set<VertexPair> edges(m.edges().begin(), m.edges().end());
  for (size_t i = 0; i + 1 < vs.size(); ++i) {
    auto e = canon(vs[i], vs[i + 1]);
    if (p.matched[i])
      edges.erase(e);
    else
      edges.insert(e);
  }
  return Matching::from_edges(m.n(), EdgeList(edges.begin(), edges.end()));
}

Matching eliminate_bounded_augmenting_paths(const Graph& g, const Matching& m0,
                                            int k) {
  require_valid(g, m0);
  Matching m = m0;
  while (auto p = find_bounded_augmenting_path(g, m, k)) m = augment(m, *p);
  return m;
}

Matching brute_force_maximum_matching(const Graph& g, int cap) {
  if (g.n() > cap)
    throw std::invalid_argument("graph too large for brute-force oracle");
  const int n = g.n();
  const unsigned full = n == 0 ? 0u : (1u << n) - 1;
  std::vector<int> best(full + 1, -1);
  best[0] = 0;

  // best[mask] = max matching size within the vertex subset `mask`
  auto solve = [&](auto&& self, unsigned mask) -> int {
    if (best[mask] >= 0) return best[mask];
    int v = __builtin_ctz(mask);
    int res = self(self, mask & ~(1u << v));  // leave v unmatched
    for (int w : g.neighbors(v))
      if (mask & (1u << w))
        res = std::max(res, 1 + self(self, mask & ~(1u << v) & ~(1u << w)));
    return best[mask] = res;
  };

  EdgeList edges;
  unsigned mask = full;
  while (mask) {
    int v = __builtin_ctz(mask);
    int target = solve(solve, mask);
    if (target == solve(solve, mask & ~(1u << v))) {
      mask &= ~(1u << v);
      continue;
    }
    for (int w : g.neighbors(v)) {
      if (!(mask & (1u << w))) continue;
      if (1 + solve(solve, mask & ~(1u << v) & ~(1u << w)) == target) {
        edges.push_back(canon(v, w));
        mask &= ~(1u << v) & ~(1u << w);
        break;
      }
    }
  }
  return Matching::from_edges(n, edges);
}

}  // namespace onematch
