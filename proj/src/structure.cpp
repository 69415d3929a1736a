#include "onematch/structure.hpp"

#include <algorithm>
#include <array>
#include <stdexcept>

#include "onematch/matching.hpp"

namespace onematch {

namespace {

std::string path_string(const std::vector<int>& p) {
  std::string s;
  for (size_t i = 0; i < p.size(); ++i) {
    if (i) s += "-";
    s += std::to_string(p[i]);
  }
  return s;
}

// Enumerates alternating simple cycles of exactly `len` edges rooted at the
// free vertex f (edge i matched iff i odd; the closing edge is unmatched).
// Calls sink(path) with path = [f, v1, ..., v_{len-1}] for each cycle.
template <typename Sink>
void enumerate_flowers(const Graph& g, const Matching& m, int f, int len,
                       Sink&& sink) {
  std::vector<int> path{f};
  std::vector<char> on_path(g.n(), 0);
  on_path[f] = 1;
  auto rec = [&](auto&& self, int v, int depth) -> void {
    if (depth == len - 1) {
      if (g.has_edge(v, f) && m.partner(v) != f) sink(path);
      return;
    }
    if (depth % 2 == 0) {
      for (int w : g.neighbors(v)) {
        if (w == f || on_path[w] || m.partner(v) == w) continue;
        path.push_back(w);
        on_path[w] = 1;
        self(self, w, depth + 1);
        on_path[w] = 0;
        path.pop_back();
      }
    } else {
      int w = m.partner(v);
      if (w >= 0 && w != f && !on_path[w]) {
        path.push_back(w);
        on_path[w] = 1;
        self(self, w, depth + 1);
        on_path[w] = 0;
        path.pop_back();
      }
    }
  };
  rec(rec, f, 0);
}

}  // namespace

FlowerReport find_cycle_flowers(const Graph& g, const Matching& m) {
  if (find_bounded_augmenting_path(g, m, 9))
    throw std::invalid_argument(
        "matching still has an augmenting path of length <= 9");

  FlowerReport report;
  std::set<int> vc;
  std::map<int, std::vector<int>> first_cycle;  // root -> its witness cycle

  for (int f = 0; f < g.n(); ++f) {
    if (m.is_matched(f)) continue;
    for (int len : {3, 5, 7}) {
      enumerate_flowers(g, m, f, len, [&](const std::vector<int>& cycle) {
        vc.insert(cycle.begin(), cycle.end());
        if (!first_cycle.count(f)) first_cycle[f] = cycle;
      });
    }
  }

  report.V_C.assign(vc.begin(), vc.end());
  for (const auto& [f, cycle] : first_cycle) {
    report.F_C.push_back(f);
    report.cycle_witness[f] = canon(cycle[1], cycle[2]);
  }
  for (auto e : m.edges())
    if (vc.count(e.first) && vc.count(e.second)) report.M_C.push_back(e);

  // injectivity of the root witness (Claim: |F_C| <= |M_C|)
  std::map<VertexPair, int> owner;
  for (const auto& [f, edge] : report.cycle_witness) {
    auto [it, fresh] = owner.emplace(edge, f);
    if (fresh) continue;
    int f0 = it->second;
    const auto& cyc = first_cycle[f0];
    std::vector<int> aug;
    if (g.has_edge(f, cyc[2])) {
      aug = {f, cyc[2], cyc[1], f0};
    } else {
      aug.push_back(f);
      for (size_t i = 1; i < cyc.size(); ++i) aug.push_back(cyc[i]);
      aug.push_back(f0);
    }
    report.failures.push_back(
        "cycle-flower witness collision on matching edge (" +
        std::to_string(edge.first) + "," + std::to_string(edge.second) +
        "): augmenting path " + path_string(aug));
  }
  return report;
}

FlowerReport find_stem_blossoms(const Graph& g, const Matching& m,
                                FlowerReport partial) {
  FlowerReport report = std::move(partial);
  std::set<int> vc(report.V_C.begin(), report.V_C.end());
  auto gone = [&](int v) { return vc.count(v) > 0; };

  std::set<VertexPair> mb;
  std::map<int, int> stem_free;  // hinge t -> the free stem vertex used

  for (int t = 0; t < g.n(); ++t) {
    if (gone(t) || !m.is_matched(t)) continue;
    int s = m.partner(t);
    if (gone(s)) continue;
    int f = -1;
    for (int cand : g.neighbors(s)) {
      if (!m.is_matched(cand) && !gone(cand)) {
        f = cand;
        break;
      }
    }
    if (f < 0) continue;  // no stem, not a 7-flower hinge
    bool hinge = false;
    for (int x0 : g.neighbors(t)) {
      if (gone(x0) || x0 == s || !m.is_matched(x0)) continue;
      int x1 = m.partner(x0);
      if (x1 == t || x1 == s || gone(x1) || !g.has_edge(x1, t)) continue;
      mb.insert(canon(x0, x1));
      if (!hinge) {
        hinge = true;
        report.T_B.push_back(t);
        report.blossom_witness[t] = canon(x0, x1);
        stem_free[t] = f;
      }
    }
  }

  report.M_B.assign(mb.begin(), mb.end());
  std::set<int> vb(report.T_B.begin(), report.T_B.end());
  for (auto [x0, x1] : report.M_B) vb.insert(x0), vb.insert(x1);
  report.V_B.assign(vb.begin(), vb.end());

  std::map<VertexPair, int> owner;
  for (const auto& [t, edge] : report.blossom_witness) {
    auto [it, fresh] = owner.emplace(edge, t);
    if (fresh) continue;
    int t0 = it->second;
    std::vector<int> aug{stem_free[t0], m.partner(t0), t0,          edge.first,
                         edge.second,   t,             m.partner(t), stem_free[t]};
    report.failures.push_back(
        "stem-blossom witness collision on matching edge (" +
        std::to_string(edge.first) + "," + std::to_string(edge.second) +
        "): augmenting path or cycle-flower " + path_string(aug));
  }
  return report;
}

Decomposition alternating_levels(const Graph& g, const Matching& m,
                                 const FlowerReport& flowers) {
  std::vector<char> gone(g.n(), 0);
  for (int v : flowers.V_C) gone[v] = 1;
  for (int v : flowers.V_B) gone[v] = 1;

  const int inf = 1 << 30;
  // dist[v][p]: shortest alternating walk from a free vertex with length
  // of parity p (first edge unmatched, strict alternation)
  std::vector<std::array<int, 2>> dist(g.n(), {inf, inf});
  std::vector<std::pair<int, int>> frontier;
  for (int v = 0; v < g.n(); ++v)
    if (!gone[v] && !m.is_matched(v)) {
      dist[v][0] = 0;
      frontier.push_back({v, 0});
    }
  for (int len = 0; len < 3; ++len) {
    std::vector<std::pair<int, int>> next;
    for (auto [v, p] : frontier) {
      if (dist[v][p] != len) continue;
      auto visit = [&](int w) {
        if (gone[w]) return;
        int q = (len + 1) % 2;
        if (dist[w][q] > len + 1) {
          dist[w][q] = len + 1;
          next.push_back({w, q});
        }
      };
      if (len % 2 == 0) {
        for (int w : g.neighbors(v))
          if (m.partner(v) != w) visit(w);
      } else {
        int w = m.partner(v);
        if (w >= 0 && g.has_edge(v, w)) visit(w);
      }
    }
    frontier = std::move(next);
  }

  Decomposition dec;
  for (int v = 0; v < g.n(); ++v) {
    if (gone[v]) continue;
    int d = std::min(dist[v][0], dist[v][1]);
    switch (d) {
      case 0: dec.F_H.push_back(v); break;
      case 1: dec.S.push_back(v); break;
      case 2: dec.T_H.push_back(v); break;
      case 3: dec.U.push_back(v); break;
      default: dec.beyond.push_back(v); break;
    }
  }
  std::set<VertexPair> ms, mu;
  for (int s : dec.S) ms.insert(canon(s, m.partner(s)));
  for (int u : dec.U) mu.insert(canon(u, m.partner(u)));
  dec.M_S.assign(ms.begin(), ms.end());
  dec.M_U.assign(mu.begin(), mu.end());
  return dec;
}

std::vector<std::string> check_level_structure(const Graph& g, const Matching& m,
                                               const FlowerReport& flowers,
                                               const Decomposition& dec) {
  std::vector<std::string> failures;
  auto fail = [&](const std::string& s) { failures.push_back(s); };
  auto edge_str = [](int u, int v) {
    return "(" + std::to_string(u) + "," + std::to_string(v) + ")";
  };

  std::set<int> S(dec.S.begin(), dec.S.end());
  std::set<int> U(dec.U.begin(), dec.U.end());
  std::set<int> FH(dec.F_H.begin(), dec.F_H.end());
  std::set<int> TH(dec.T_H.begin(), dec.T_H.end());
  std::set<int> TB(flowers.T_B.begin(), flowers.T_B.end());
  std::set<int> in_h;
  for (const auto* lvl : {&dec.F_H, &dec.S, &dec.T_H, &dec.U})
    in_h.insert(lvl->begin(), lvl->end());

  // level bipartiteness, bullet by bullet
  for (auto [u, v] : m.edges()) {
    if (S.count(u) && S.count(v))
      fail("matching edge within S: " + edge_str(u, v));
    if (U.count(u) && U.count(v))
      fail("matching edge within U: " + edge_str(u, v));
  }
  for (auto [u, v] : g.edges()) {
    if (FH.count(u) && FH.count(v))
      fail("edge within F_H: " + edge_str(u, v));
    if (TH.count(u) && TH.count(v))
      fail("edge within T_H: " + edge_str(u, v));
  }
  for (int s : dec.S) {
    int p = m.partner(s);
    if (p < 0 || !(TH.count(p) || TB.count(p)))
      fail("matching partner of S-vertex " + std::to_string(s) +
           " is not in T_H or T_B");
  }
  for (int u : dec.U) {
    int p = m.partner(u);
    if (p >= 0 && in_h.count(p))
      fail("matching partner of U-vertex " + std::to_string(u) + " lies in H");
  }
  for (int f : dec.F_H)
    for (int w : g.neighbors(f))
      if (in_h.count(w) && !S.count(w))
        fail("F_H-vertex neighbour outside S within H: " + edge_str(f, w));
  for (int t : dec.T_H)
    for (int w : g.neighbors(t))
      if (in_h.count(w) && !S.count(w) && !U.count(w))
        fail("T_H-vertex neighbour outside S and U within H: " + edge_str(t, w));

  // no vertex of F_H or T_H may have a neighbour outside H
  for (const auto* lvl : {&dec.F_H, &dec.T_H}) {
    for (int v : *lvl) {
      for (int w : g.neighbors(v)) {
        if (in_h.count(w)) continue;
        std::string diag = "vertex " + std::to_string(v) +
                           " has neighbour outside H via edge " + edge_str(v, w);
        if (TH.count(v))
          diag += "; alternating approach " +
                  path_string({w, v, m.partner(v)}) + "-(free)";
        fail(diag);
      }
    }
  }

  // set-size identities
  if (static_cast<int>(dec.S.size()) !=
      static_cast<int>(dec.T_H.size() + flowers.T_B.size()))
    fail("|S| = |T_H| + |T_B| violated: " + std::to_string(dec.S.size()) +
         " vs " + std::to_string(dec.T_H.size() + flowers.T_B.size()));
  if (dec.M_S.size() != dec.S.size())
    fail("|M_S| = |S| violated");
  if (dec.M_U.size() != dec.U.size())
    fail("|M_U| = |U| violated");

  return failures;
}

LabeledH build_H(const Drawing& d, const std::vector<int>& ids, const Graph& g,
                 const Matching& m, const FlowerReport& flowers,
                 const Decomposition& dec) {
  LabeledH out;
  out.failures = check_level_structure(g, m, flowers, dec);
  auto fail = [&](const std::string& s) { out.failures.push_back(s); };

  std::set<int> in_h;
  for (const auto* lvl : {&dec.F_H, &dec.S, &dec.T_H, &dec.U})
    in_h.insert(lvl->begin(), lvl->end());

  // the induced host subdrawing, carried over to drawing ids
  std::vector<int> keep;
  auto to_id = [&](int v) { return ids.at(v); };
  for (int v : in_h) keep.push_back(to_id(v));
  if (!keep.empty()) out.H = d.subdrawing(keep);
  for (int v : dec.F_H) out.F_H.insert(to_id(v));
  for (int v : dec.S) out.S.insert(to_id(v));
  for (int v : dec.T_H) out.T_H.insert(to_id(v));
  for (int v : dec.U) out.U.insert(to_id(v));

  // degree preservation for F_H and T_H
  for (const auto* lvl : {&dec.F_H, &dec.T_H})
    for (int v : *lvl)
      if (out.H.degree(to_id(v)) != g.degree(v))
        fail("vertex " + std::to_string(v) + " lost degree in H: " +
             std::to_string(out.H.degree(to_id(v))) + " vs " +
             std::to_string(g.degree(v)));

  return out;
}

}  // namespace onematch
