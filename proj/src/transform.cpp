#include "onematch/transform.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <string>

#include "onematch/bounds.hpp"

namespace onematch {

namespace {

std::string vp(int a, int b) {
  return "(" + std::to_string(a) + "," + std::to_string(b) + ")";
}

int edge_between(const Drawing& d, int a, int b) {
  auto ids = d.edge_ids_between(a, b);
  if (ids.empty())
    throw std::logic_error("expected edge " + vp(a, b) + " is missing");
  return ids.front();
}

// the edge paired with e at its crossing
int crossing_mate(const Drawing& d, int e) {
  const auto& info = d.crossings().at(*d.crossing_of(e));
  return info.e1 == e ? info.e2 : info.e1;
}

std::vector<std::pair<int, int>> incident_edges(const Drawing& d, int v) {
  std::vector<std::pair<int, int>> out;  // (edge id, other endpoint)
  for (const auto& ee : d.rotations().at(v))
    out.push_back({ee.edge, d.edges().at(ee.edge).endpoint(1 - ee.end)});
  return out;
}

void add_validity_check(PipelineState& st, const Drawing& d, bool simple,
                        const std::string& name) {
  auto rep = d.validate(simple);
  if (rep.ok())
    st.checks.push_back(pass_record(name, 0, 0));
  else
    st.checks.push_back(fail_record(name, 0, 0, rep.violations.front()));
}

}  // namespace

std::map<int, int> matching_in_drawing_ids(const Decomposition& dec,
                                           const std::vector<int>& ids,
                                           const std::set<int>& T_H) {
  std::map<int, int> partner;
  for (auto [a, b] : dec.M_S) {
    int da = ids.at(a), db = ids.at(b);
    if (T_H.count(da) || T_H.count(db)) {
      partner[da] = db;
      partner[db] = da;
    }
  }
  return partner;
}

PipelineState make_pipeline(const LabeledH& labeled,
                            const std::map<int, int>& matching_partner) {
  PipelineState st;
  st.H = labeled.H;
  st.F_H = labeled.F_H;
  st.S = labeled.S;
  st.T_H = labeled.T_H;
  st.U = labeled.U;
  st.partner = matching_partner;
  for (int t : st.T_H)
    if (!st.partner.count(t))
      st.checks.push_back(
          fail_record("pipeline: matching covers T_H", 0, 0,
                      "vertex " + std::to_string(t) + " has no partner"));
  return st;
}

void build_H_plus(PipelineState& st) {
  st.Hplus = st.H;
  auto in_SU = [&](int v) { return st.S.count(v) || st.U.count(v); };

  {  // strip edges inside S|U
    std::vector<int> doomed;
    for (const auto& [id, e] : st.Hplus.edges())
      if (in_SU(e.u) && in_SU(e.v)) doomed.push_back(id);
    for (int id : doomed) st.Hplus.delete_edge(id);
  }

  // kite-edges, lowest crossing id first; crossings dissolved by a
  // re-route are skipped when their turn comes
  std::vector<int> cids;
  for (const auto& [c, info] : st.Hplus.crossings()) (void)info, cids.push_back(c);
  for (int c : cids) {
    if (!st.Hplus.crossings().count(c)) continue;
    for (auto [p, q] : st.Hplus.potential_kite_edges(c)) {
      int t, x;
      if (st.T_H.count(p) && in_SU(q)) t = p, x = q;
      else if (st.T_H.count(q) && in_SU(p)) t = q, x = p;
      else continue;
      auto ids = st.Hplus.edge_ids_between(t, x);
      if (ids.empty()) {
        st.Hplus.insert_kite_edge(c, t, x);
        continue;
      }
      int e = ids.front();
      int me = edge_between(st.Hplus, t, st.partner.at(t));
      const auto& info = st.Hplus.crossings().at(c);
      bool at_matching = info.e1 == me || info.e2 == me;
      if (st.Hplus.is_crossed(e))
        st.Hplus.reroute_as_kite(e, c);
      else if (at_matching && !st.Hplus.bounds_kite_region_at(e, c))
        st.Hplus.reroute_as_kite(e, c);
    }
  }

  // trade matching-partners where two matching-edges cross
  auto is_matching_edge = [&](const DrawingEdge& e) {
    auto it = st.partner.find(e.u);
    return it != st.partner.end() && it->second == e.v;
  };
  for (const auto& [c, info] : st.Hplus.crossings()) {
    (void)c;
    const auto& e1 = st.Hplus.edges().at(info.e1);
    const auto& e2 = st.Hplus.edges().at(info.e2);
    if (!is_matching_edge(e1) || !is_matching_edge(e2)) continue;
    int t1 = st.T_H.count(e1.u) ? e1.u : e1.v, s1 = e1.u == t1 ? e1.v : e1.u;
    int t2 = st.T_H.count(e2.u) ? e2.u : e2.v, s2 = e2.u == t2 ? e2.v : e2.u;
    st.partner[s1] = t2;
    st.partner[t2] = s1;
    st.partner[s2] = t1;
    st.partner[t1] = s2;
  }

  add_validity_check(st, st.Hplus, true, "Hplus: simple valid drawing");

  for (const auto& [id, e] : st.Hplus.edges()) {
    int su = (in_SU(e.u) ? 1 : 0) + (in_SU(e.v) ? 1 : 0);
    if (su != 1) {
      st.checks.push_back(fail_record("Hplus(a): one endpoint in S|U", su, 1,
                                      "edge " + std::to_string(id) + " " +
                                          vp(e.u, e.v)));
      return;
    }
  }
  st.checks.push_back(pass_record("Hplus(a): one endpoint in S|U", 1, 1));

  for (int f : st.F_H) {
    if (st.Hplus.degree(f) < 3)
      st.checks.push_back(fail_record("Hplus(b): F_H degrees", st.Hplus.degree(f),
                                      3, "vertex " + std::to_string(f)));
    for (auto [e, w] : incident_edges(st.Hplus, f))
      if (!st.S.count(w))
        st.checks.push_back(fail_record("Hplus(b): F_H neighbours in S", 0, 0,
                                        "edge " + std::to_string(e)));
  }
  for (int t : st.T_H) {
    if (st.Hplus.degree(t) < 3)
      st.checks.push_back(fail_record("Hplus(b): T_H degrees", st.Hplus.degree(t),
                                      3, "vertex " + std::to_string(t)));
    for (auto [e, w] : incident_edges(st.Hplus, t))
      if (!in_SU(w) && !st.F_H.count(w))
        st.checks.push_back(fail_record("Hplus(b): T_H neighbours in S|U", 0, 0,
                                        "edge " + std::to_string(e)));
  }
  if (!any_failed(st.checks))
    st.checks.push_back(pass_record("Hplus(b): degree and level pattern", 0, 0));

  for (const auto& [c, info] : st.Hplus.crossings()) {
    (void)info;
    for (auto [p, q] : st.Hplus.potential_kite_edges(c)) {
      int t, x;
      if (st.T_H.count(p) && in_SU(q)) t = p, x = q;
      else if (st.T_H.count(q) && in_SU(p)) t = q, x = p;
      else continue;
      auto ids = st.Hplus.edge_ids_between(t, x);
      if (ids.empty() || st.Hplus.is_crossed(ids.front())) {
        st.checks.push_back(fail_record("Hplus(c): kite-edges exist uncrossed", 0,
                                        0, "pair " + vp(t, x) + " at crossing " +
                                               std::to_string(c)));
        return;
      }
      int me = edge_between(st.Hplus, t, st.partner.at(t));
      const auto& ci = st.Hplus.crossings().at(c);
      if ((ci.e1 == me || ci.e2 == me) &&
          !st.Hplus.bounds_kite_region_at(ids.front(), c)) {
        st.checks.push_back(
            fail_record("Hplus(c): kite-edge routed at matching crossing", 0, 0,
                        "pair " + vp(t, x) + " at crossing " + std::to_string(c)));
        return;
      }
    }
  }
  st.checks.push_back(pass_record("Hplus(c): kite-edges present and routed", 0, 0));

  for (const auto& [c, info] : st.Hplus.crossings()) {
    if (is_matching_edge(st.Hplus.edges().at(info.e1)) &&
        is_matching_edge(st.Hplus.edges().at(info.e2))) {
      st.checks.push_back(fail_record("Hplus(d): no crossing matching-edges", 2, 1,
                                      "crossing " + std::to_string(c)));
      return;
    }
  }
  st.checks.push_back(pass_record("Hplus(d): no crossing matching-edges", 0, 0));
}

void assign_T_to_U(PipelineState& st) {
  Assignment& a = st.assign;
  for (int t : st.T_H) {
    std::vector<std::pair<int, int>> u_edges;  // (edge, u)
    int s_neighbours = 0;
    bool has_uncrossed_u = false;
    for (auto [e, w] : incident_edges(st.Hplus, t)) {
      if (st.U.count(w)) {
        u_edges.push_back({e, w});
        if (!st.Hplus.is_crossed(e)) has_uncrossed_u = true;
      } else if (st.S.count(w)) {
        ++s_neighbours;
      }
    }
    if (has_uncrossed_u) {
      a.T_mu.insert(t);
      int me = edge_between(st.Hplus, t, st.partner.at(t));
      int preferred = -1;
      if (st.Hplus.is_crossed(me)) {
        const auto& other = st.Hplus.edges().at(crossing_mate(st.Hplus, me));
        if (st.U.count(other.u)) preferred = other.u;
        if (st.U.count(other.v)) preferred = other.v;
      }
      if (preferred >= 0) {
        a.assigned_to[t] = preferred;
      } else {
        int lowest = -1;
        for (auto [e, u] : u_edges)
          if (!st.Hplus.is_crossed(e) && (lowest < 0 || u < lowest)) lowest = u;
        a.assigned_to[t] = lowest;
      }
    } else if (s_neighbours >= 3) {
      a.T_sigma.insert(t);
    } else {
      a.T_rho.insert(t);
      if (u_edges.empty()) {
        st.checks.push_back(fail_record("assignment: rho vertex has U-neighbour",
                                        0, 1, "vertex " + std::to_string(t)));
        return;
      }
      int lowest = u_edges.front().second;
      for (auto [e, u] : u_edges) (void)e, lowest = std::min(lowest, u);
      a.assigned_to[t] = lowest;
    }
  }

  auto counts = [&] {
    std::map<int, int> cnt;
    for (int u : st.U) cnt[u] = 0;
    for (auto [t, u] : a.assigned_to) (void)t, ++cnt[u];
    return cnt;
  };

  // re-assignment to fixpoint: pull assignees of big classes down to
  // neighbours with four or fewer assignees
  while (true) {
    auto cnt = counts();
    bool moved = false;
    for (auto& [t, u] : a.assigned_to) {
      if (cnt.at(u) < 6) continue;
      int best = -1;
      for (auto [e, w] : incident_edges(st.Hplus, t)) {
        (void)e;
        if (st.U.count(w) && cnt.at(w) <= 4 && (best < 0 || w < best)) best = w;
      }
      if (best >= 0) {
        u = best;
        moved = true;
        break;
      }
    }
    if (!moved) break;
  }

  auto cnt = counts();
  for (int u : st.U) a.U_classes[cnt.at(u)].insert(u);
  for (auto [t, u] : a.assigned_to) a.T_classes[cnt.at(u)].insert(t);

  long long t_small = 0, u_small = 0;
  for (int d = 0; d <= 5; ++d) {
    if (a.T_classes.count(d)) t_small += a.T_classes.at(d).size();
    if (a.U_classes.count(d)) u_small += a.U_classes.at(d).size();
  }
  long long t0 = a.T_classes.count(0) ? a.T_classes.at(0).size() : 0;
  st.checks.push_back(checked("Tsmall(i): |T^0| = 0", t0, 0, "zero-class T"));
  st.checks.push_back(checked("Tsmall(i): small T against small U", t_small,
                              5 * u_small, "small classes"));
  for (const auto& [d, us] : a.U_classes) {
    long long td = a.T_classes.count(d) ? a.T_classes.at(d).size() : 0;
    if (td != static_cast<long long>(d * us.size())) {
      st.checks.push_back(fail_record("assignment: |T^d| = d|U^d|", td,
                                      d * us.size(), "d = " + std::to_string(d)));
      return;
    }
  }
  st.checks.push_back(pass_record("assignment: |T^d| = d|U^d|", 0, 0));

  for (auto [t, u] : a.assigned_to) {
    if (cnt.at(u) < 6) continue;
    bool uncrossed_u = false;
    for (auto [e, w] : incident_edges(st.Hplus, t)) {
      if (!st.U.count(w)) continue;
      if (!st.Hplus.is_crossed(e)) uncrossed_u = true;
      if (cnt.at(w) <= 4)
        st.checks.push_back(fail_record("Tsmall(iii): big-class neighbours", 0, 0,
                                        "t " + std::to_string(t) + " next to u " +
                                            std::to_string(w)));
    }
    if (uncrossed_u && !a.T_mu.count(t))
      st.checks.push_back(fail_record("Tsmall(ii): uncrossed edge forces mu", 0,
                                      0, "vertex " + std::to_string(t)));
  }
  if (!any_failed(st.checks)) {
    st.checks.push_back(pass_record("Tsmall(ii): uncrossed edge forces mu", 0, 0));
    st.checks.push_back(pass_record("Tsmall(iii): big-class neighbours", 0, 0));
  }

  for (int t : a.T_rho) {
    int s_neighbours = 0;
    for (auto [e, w] : incident_edges(st.Hplus, t))
      (void)e, s_neighbours += st.S.count(w) ? 1 : 0;
    if (s_neighbours >= 3)
      st.checks.push_back(fail_record("assignment: rho has < 3 S-neighbours",
                                      s_neighbours, 2,
                                      "vertex " + std::to_string(t)));
  }
}

void easy_transform(PipelineState& st) {
  st.I = st.Hplus;
  const Assignment& a = st.assign;

  for (int d = 0; d <= 5; ++d) {
    if (a.U_classes.count(d))
      for (int u : a.U_classes.at(d)) st.I.delete_vertex(u);
    if (a.T_classes.count(d))
      for (int t : a.T_classes.at(d)) st.I.delete_vertex(t);
  }

  for (int t : st.T_H) {
    if (!st.I.has_vertex(t)) continue;
    std::vector<int> doomed;
    for (auto [e, w] : incident_edges(st.I, t)) {
      if (!st.U.count(w)) continue;
      auto it = a.assigned_to.find(t);
      if (it == a.assigned_to.end() || it->second != w) doomed.push_back(e);
    }
    for (int e : doomed) st.I.delete_edge(e);
  }

  while (true) {
    int pick = -1;
    for (int t : st.T_H) {
      if (!st.I.has_vertex(t) || a.T_sigma.count(t)) continue;
      int me = edge_between(st.I, t, st.partner.at(t));
      int ae = edge_between(st.I, t, a.assigned_to.at(t));
      if (!st.I.is_crossed(me) || !st.I.is_crossed(ae)) {
        pick = t;
        break;
      }
    }
    if (pick < 0) break;
    int s = st.partner.at(pick), u = a.assigned_to.at(pick);
    int me = edge_between(st.I, pick, s);
    int ae = edge_between(st.I, pick, u);
    std::optional<int> crossed_edge;
    if (st.I.is_crossed(me)) crossed_edge = me;
    if (st.I.is_crossed(ae)) crossed_edge = ae;
    bool kappa = false;
    if (crossed_edge) {
      const auto& other = st.I.edges().at(crossing_mate(st.I, *crossed_edge));
      kappa = other.u == s || other.u == u || other.v == s || other.v == u;
    }
    if (kappa) {
      st.I.insert_kite_edge(*st.I.crossing_of(*crossed_edge), s, u);
      st.I.delete_vertex(pick);
    } else {
      st.I.splice_path(s, pick, u);
      st.I.delete_vertex(pick);
    }
    st.T_mu_prime.insert(pick);
  }

  for (int t : st.T_H)
    if (st.I.has_vertex(t) && !a.T_sigma.count(t)) st.T_rho_prime.insert(t);

  add_validity_check(st, st.I, true, "I: simple valid drawing");

  for (const auto& [d, us] : a.U_classes) {
    if (d < 6) continue;
    for (int u : us)
      if (st.I.degree(u) != d)
        st.checks.push_back(fail_record("I: big-class degrees exact",
                                        st.I.degree(u), d,
                                        "vertex " + std::to_string(u)));
  }
  if (!any_failed(st.checks))
    st.checks.push_back(pass_record("I: big-class degrees exact", 0, 0));

  for (const auto& [id, e] : st.I.edges()) {
    bool su = (st.S.count(e.u) && st.U.count(e.v)) ||
              (st.S.count(e.v) && st.U.count(e.u));
    if (!su || st.I.is_crossed(id)) continue;
    int regions = st.I.incident_kite_regions(id);
    if (regions > 1)
      st.checks.push_back(fail_record("I: at most one kite-region per SU-edge",
                                      regions, 1, "edge " + std::to_string(id)));
  }
  if (!any_failed(st.checks))
    st.checks.push_back(pass_record("I: at most one kite-region per SU-edge", 1, 1));

  for (int t : st.T_rho_prime) {
    int me = edge_between(st.I, t, st.partner.at(t));
    int ae = edge_between(st.I, t, a.assigned_to.at(t));
    if (!st.I.is_crossed(me) || !st.I.is_crossed(ae))
      st.checks.push_back(fail_record("I: loop postcondition", 0, 0,
                                      "vertex " + std::to_string(t) +
                                          " still transformable"));
  }
  if (!any_failed(st.checks))
    st.checks.push_back(pass_record("I: loop postcondition", 0, 0));

  long long t_small = 0;
  for (int d = 0; d <= 5; ++d)
    if (a.T_classes.count(d)) t_small += a.T_classes.at(d).size();
  long long ledger = static_cast<long long>(st.T_mu_prime.size()) +
                     static_cast<long long>(st.T_rho_prime.size()) +
                     static_cast<long long>(a.T_sigma.size()) + t_small;
  if (ledger == static_cast<long long>(st.T_H.size()))
    st.checks.push_back(pass_record("pipeline: T_H ledger conservation", ledger,
                                    st.T_H.size()));
  else
    st.checks.push_back(fail_record("pipeline: T_H ledger conservation", ledger,
                                    st.T_H.size(), "classes do not partition T_H"));
}

void rho_transform(PipelineState& st) {
  st.J = st.I;
  auto fail_tpsi = [&](char point, int t) {
    st.checks.push_back(fail_record(
        std::string("Tpsi(") + point + ")", 0, 0, "vertex " + std::to_string(t)));
  };
  for (int t : st.T_rho_prime) {
    int s = st.partner.at(t), u = st.assign.assigned_to.at(t);
    int me = edge_between(st.J, t, s);
    int ae = edge_between(st.J, t, u);
    if (!st.J.is_crossed(me)) return fail_tpsi('a', t);
    if (!st.J.is_crossed(ae)) return fail_tpsi('b', t);
    const auto& xy = st.J.edges().at(crossing_mate(st.J, me));
    const auto& xf = st.J.edges().at(crossing_mate(st.J, ae));
    int x = st.S.count(xy.u) ? xy.u : (st.S.count(xy.v) ? xy.v : -1);
    if (x < 0) return fail_tpsi('a', t);
    int y = xy.u == x ? xy.v : xy.u;
    int xp = st.S.count(xf.u) ? xf.u : (st.S.count(xf.v) ? xf.v : -1);
    if (xp < 0) return fail_tpsi('b', t);
    int f = xf.u == xp ? xf.v : xf.u;
    auto tx = st.J.edge_ids_between(t, x);
    if (x != xp || tx.empty() || st.J.is_crossed(tx.front()))
      return fail_tpsi('c', t);
    if (!st.F_H.count(y) && !st.assign.T_sigma.count(y)) return fail_tpsi('d', t);
    if (!st.F_H.count(f)) return fail_tpsi('e', t);

    st.J.insert_kite_edge(*st.J.crossing_of(ae), x, u, /*allow_multi=*/true);
    st.J.delete_vertex(t);
  }
  if (!any_failed(st.checks))
    st.checks.push_back(pass_record("Tpsi(a-e) before each rho step", 0, 0));

  add_validity_check(st, st.J, false, "J: valid drawing");
  if (st.J.has_empty_theta())
    st.checks.push_back(fail_record("J: no empty theta", 1, 0, "theta found"));
  else
    st.checks.push_back(pass_record("J: no empty theta", 0, 0));

  std::map<VertexPair, int> crossed_copies;
  for (const auto& [id, e] : st.J.edges())
    if (st.J.is_crossed(id)) ++crossed_copies[canon(e.u, e.v)];
  for (const auto& [pair, n] : crossed_copies) {
    if (n > 1 && st.J.edge_ids_between(pair.first, pair.second).size() > 1) {
      st.checks.push_back(fail_record("J: one crossed copy per multi-edge", n, 1,
                                      "edge " + vp(pair.first, pair.second)));
      return;
    }
  }
  st.checks.push_back(pass_record("J: one crossed copy per multi-edge", 1, 1));
}

void remove_empty_lenses(PipelineState& st) {
  st.Jminus = st.J;
  while (true) {
    auto lenses = st.Jminus.find_empty_lenses();
    if (lenses.empty()) break;
    st.Jminus.delete_edge(lenses.front().edge_b);  // keep the lower id
  }
  add_validity_check(st, st.Jminus, false, "Jminus: valid drawing");
  st.checks.push_back(checked("Jminus: no empty lens",
                              st.Jminus.find_empty_lenses().size(), 0, "lens"));

  for (const auto& [d, us] : st.assign.U_classes) {
    if (d < 6) continue;
    for (int u : us) {
      if (st.Jminus.degree(u) < 3)
        st.checks.push_back(fail_record("degreeU: degree at least 3",
                                        st.Jminus.degree(u), 3,
                                        "vertex " + std::to_string(u)));
      if (st.Jminus.crossing_weighted_degree(u) < d)
        st.checks.push_back(
            fail_record("degreeU: weighted degree at least d",
                        st.Jminus.crossing_weighted_degree(u), d,
                        "vertex " + std::to_string(u)));
    }
  }
  if (!any_failed(st.checks))
    st.checks.push_back(pass_record("degreeU: big classes keep their weight", 0, 0));
}

void verify_lemma_hard(PipelineState& st) {
  const Assignment& a = st.assign;
  std::set<int> A = st.F_H;
  A.insert(a.T_sigma.begin(), a.T_sigma.end());
  long long u_big = 0, t_big = 0, weighted_u_big = 0;
  for (const auto& [d, us] : a.U_classes) {
    if (d < 6) continue;
    A.insert(us.begin(), us.end());
    u_big += us.size();
    weighted_u_big += (3LL * d - 12) * us.size();
    if (a.T_classes.count(d)) t_big += a.T_classes.at(d).size();
  }
  long long u_small = static_cast<long long>(st.U.size()) - u_big;
  long long t_small = 0;
  for (int d = 0; d <= 5; ++d)
    if (a.T_classes.count(d)) t_small += a.T_classes.at(d).size();

  {  // V(Jminus) must be exactly A plus S
    bool clean = true;
    for (const auto& [v, rot] : st.Jminus.rotations()) {
      (void)rot;
      if (!A.count(v) && !st.S.count(v)) {
        st.checks.push_back(fail_record("Jminus: vertex classes", 0, 0,
                                        "unexpected vertex " + std::to_string(v)));
        clean = false;
      }
    }
    for (int v : A)
      if (!st.Jminus.has_vertex(v)) {
        st.checks.push_back(fail_record("Jminus: vertex classes", 0, 0,
                                        "missing A-vertex " + std::to_string(v)));
        clean = false;
      }
    for (int v : st.S)
      if (!st.Jminus.has_vertex(v)) {
        st.checks.push_back(fail_record("Jminus: vertex classes", 0, 0,
                                        "missing S-vertex " + std::to_string(v)));
        clean = false;
      }
    if (clean) st.checks.push_back(pass_record("Jminus: vertex classes", 0, 0));
  }

  auto bw = check_weighted_independent_set_bound(st.Jminus, A);
  bw.name = "lemma hard: " + bw.name;
  st.checks.push_back(bw);

  long long S = st.S.size(), F = st.F_H.size(), Ts = a.T_sigma.size();
  long long T_H = st.T_H.size(), U = st.U.size();
  if (A.empty()) {
    st.checks.push_back(vacuous_record("lemma hard: chain link 1", "A empty"));
    st.checks.push_back(vacuous_record("lemma hard: chain link 2", "A empty"));
  } else {
    st.checks.push_back(checked("lemma hard: chain link 1",
                                2 * F + 2 * Ts + weighted_u_big, 12 * S - 24,
                                "weighted class sum"));
    st.checks.push_back(checked("lemma hard: chain link 2",
                                2 * F + 2 * Ts + 2 * t_big - 10 * u_big,
                                12 * S - 24, "T-for-U exchange"));
  }
  if (st.U.empty())
    st.checks.push_back(vacuous_record("lemma hard: small-class link", "U empty"));
  else
    st.checks.push_back(checked("lemma hard: small-class link", 2 * t_small,
                                10 * u_small, "small classes"));
  if (st.F_H.empty())
    st.checks.push_back(vacuous_record(
        "lemma hard: |F_H| + |T_H| <= 6|S| + 5|U| - 12", "F_H empty"));
  else
    st.checks.push_back(checked("lemma hard: |F_H| + |T_H| <= 6|S| + 5|U| - 12",
                                F + T_H, 6 * S + 5 * U - 12, "final bound"));
}

PipelineState run_pipeline(const LabeledH& labeled,
                           const std::map<int, int>& matching_partner) {
  PipelineState st = make_pipeline(labeled, matching_partner);
  if (st.ok()) build_H_plus(st);
  if (st.ok()) assign_T_to_U(st);
  if (st.ok()) easy_transform(st);
  if (st.ok()) rho_transform(st);
  if (st.ok()) remove_empty_lenses(st);
  if (st.ok()) verify_lemma_hard(st);
  return st;
}

}  // namespace onematch
