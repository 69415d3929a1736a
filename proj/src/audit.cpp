#include "onematch/audit.hpp"

#include <algorithm>
#include <set>
#include <stdexcept>

#include "onematch/matching.hpp"
#include "onematch/structure.hpp"
#include "onematch/transform.hpp"

namespace onematch {

namespace {

CheckRecord equal_record(std::string name, long long lhs, long long rhs,
                         std::string witness_on_fail) {
  return lhs == rhs
             ? pass_record(std::move(name), lhs, rhs)
             : fail_record(std::move(name), lhs, rhs, std::move(witness_on_fail));
}

// final cardinality bounds: pass when the numbers work out; when they do
// not, the unmet nonempty-set guard of the derivation makes the record
// vacuous rather than a failure
CheckRecord bound_record(std::string name, long long lhs, long long rhs,
                         bool guard_met, std::string guard_reason) {
  if (lhs <= rhs) return pass_record(std::move(name), lhs, rhs);
  if (!guard_met) return vacuous_record(std::move(name), std::move(guard_reason));
  return fail_record(std::move(name), lhs, rhs, "cardinality bound violated");
}

std::string path_string(const AlternatingPath& p) {
  std::string s;
  for (size_t i = 0; i < p.vertices.size(); ++i)
    s += (i ? "-" : "") + std::to_string(p.vertices[i]);
  return s;
}

std::string pair_string(VertexPair e) {
  return "(" + std::to_string(e.first) + "," + std::to_string(e.second) + ")";
}

std::set<int> to_drawing_ids(const std::vector<int>& graph_vertices,
                             const std::vector<int>& ids) {
  std::set<int> out;
  for (int v : graph_vertices) out.insert(ids[v]);
  return out;
}

bool injective_values(const std::map<int, VertexPair>& witness) {
  std::set<VertexPair> vals;
  for (const auto& [key, e] : witness) {
    (void)key;
    vals.insert(canon(e.first, e.second));
  }
  return vals.size() == witness.size();
}

// the k = 3 chain: covered matching edges, the auxiliary free/S graph,
// and 8|M| >= n + 12
void audit_short_chain(const Drawing& d, const Graph& g,
                       const std::vector<int>& ids, const Matching& m,
                       AuditReport& rep) {
  auto& rec = rep.records;
  std::vector<bool> is_free(g.n(), false);
  for (int f : free_vertices(g, m)) is_free[f] = true;

  auto free_neighbors = [&](int v) {
    std::set<int> out;
    for (int w : g.neighbors(v))
      if (is_free[w]) out.insert(w);
    return out;
  };

  // M_c: matching edges with a free vertex adjacent to both ends; that
  // free vertex is unique per edge, or a 3-augmenting path exists
  EdgeList M_c, M_o;
  std::set<int> F_c;
  CheckRecord unique =
      pass_record("short chain: defining free vertex unique per covered edge", 0, 0);
  for (auto [x, y] : m.edges()) {
    auto fx = free_neighbors(x), fy = free_neighbors(y);
    std::set<int> both;
    std::set_intersection(fx.begin(), fx.end(), fy.begin(), fy.end(),
                          std::inserter(both, both.begin()));
    if (both.empty()) {
      M_o.push_back({x, y});
      continue;
    }
    M_c.push_back({x, y});
    F_c.insert(both.begin(), both.end());
    std::set<int> all = fx;
    all.insert(fy.begin(), fy.end());
    if (all.size() != 1 && unique.status == "pass")
      unique = fail_record("short chain: defining free vertex unique per covered edge",
                           static_cast<long long>(all.size()), 1,
                           "edge " + pair_string({x, y}) + " sees " +
                               std::to_string(all.size()) + " free vertices");
  }
  rec.push_back(unique);
  rec.push_back(checked("short chain: |F_c| <= |M_c|",
                        static_cast<long long>(F_c.size()),
                        static_cast<long long>(M_c.size()),
                        "more covered free vertices than covered edges"));

  // ends of the remaining matching edges that see free vertices; at most
  // one end per edge qualifies
  std::set<int> S;
  CheckRecord one_end =
      pass_record("short chain: one end per remaining edge sees free vertices", 0, 0);
  for (auto [x, y] : M_o) {
    bool fx = !free_neighbors(x).empty(), fy = !free_neighbors(y).empty();
    if (fx && fy && one_end.status == "pass")
      one_end = fail_record("short chain: one end per remaining edge sees free vertices",
                            2, 1, "both ends of " + pair_string({x, y}));
    if (fx) S.insert(x);
    if (fy) S.insert(y);
  }
  rec.push_back(one_end);

  std::vector<int> F_o;
  for (int v = 0; v < g.n(); ++v)
    if (is_free[v] && !F_c.count(v)) F_o.push_back(v);

  rep.meta.set_sizes["F_c"] = static_cast<int>(F_c.size());
  rep.meta.set_sizes["F_o"] = static_cast<int>(F_o.size());
  rep.meta.set_sizes["M_c"] = static_cast<int>(M_c.size());
  rep.meta.set_sizes["M_o"] = static_cast<int>(M_o.size());
  rep.meta.set_sizes["S"] = static_cast<int>(S.size());

  if (F_o.empty()) {
    rec.push_back(vacuous_record("short chain: |F_o| <= 6|S| - 12",
                                 "no free vertex outside the covered class"));
  } else {
    rec.push_back(checked("short chain: |F_o| <= 6|S| - 12",
                          static_cast<long long>(F_o.size()),
                          6 * static_cast<long long>(S.size()) - 12,
                          "free-vertex count exceeds the bound"));
    rec.push_back(checked("short chain: |S| <= |M_o|",
                          static_cast<long long>(S.size()),
                          static_cast<long long>(M_o.size()),
                          "an edge contributed both ends"));
    auto A = to_drawing_ids(F_o, ids);
    std::set<int> keep = A;
    for (int v : S) keep.insert(ids[v]);
    auto bw = check_independent_set_bound(
        extract_subdrawing(d, {keep.begin(), keep.end()}), A);
    bw.name = "short chain: " + bw.name + " on F_o and S";
    rec.push_back(bw);
  }

  long long n = g.n(), M = m.size();
  rec.push_back(bound_record("matching bound: 8|M| >= n + 12", n + 12, 8 * M,
                             !F_o.empty(),
                             "derivation needs a free vertex outside the covered class"));
}

// the k = 9 chain: flowers, levels, the auxiliary graph, the surgery
// pipeline, the reassembly and the final cardinality bounds
void audit_full_chain(const Drawing& d, const Graph& g,
                      const std::vector<int>& ids, const Matching& m,
                      AuditReport& rep) {
  auto& rec = rep.records;
  auto flowers = find_stem_blossoms(g, m, find_cycle_flowers(g, m));
  for (const auto& f : flowers.failures)
    rec.push_back(fail_record("flowers: structural claim", 0, 0, f));
  auto witness_record = [](std::string name, const std::map<int, VertexPair>& w,
                           size_t domain) {
    if (w.size() != domain)
      return fail_record(std::move(name), static_cast<long long>(w.size()),
                         static_cast<long long>(domain), "witness not total");
    if (!injective_values(w))
      return fail_record(std::move(name), static_cast<long long>(w.size()),
                         static_cast<long long>(domain), "witness collision");
    return pass_record(std::move(name), static_cast<long long>(w.size()),
                       static_cast<long long>(domain));
  };
  rec.push_back(witness_record("flowers: root witness injective",
                               flowers.cycle_witness, flowers.F_C.size()));
  rec.push_back(witness_record("flowers: hinge witness injective",
                               flowers.blossom_witness, flowers.T_B.size()));
  rec.push_back(checked("flowers: |F_C| <= |M_C|",
                        static_cast<long long>(flowers.F_C.size()),
                        static_cast<long long>(flowers.M_C.size()),
                        "more roots than cycle matching edges"));
  rec.push_back(checked("flowers: |T_B| <= |M_B|",
                        static_cast<long long>(flowers.T_B.size()),
                        static_cast<long long>(flowers.M_B.size()),
                        "more hinges than blossom matching edges"));

  auto dec = alternating_levels(g, m, flowers);
  auto level_problems = check_level_structure(g, m, flowers, dec);
  rec.push_back(level_problems.empty()
                    ? pass_record("levels: structure assertions", 0, 0)
                    : fail_record("levels: structure assertions",
                                  static_cast<long long>(level_problems.size()), 0,
                                  level_problems.front()));
  auto labeled = build_H(d, ids, g, m, flowers, dec);
  rec.push_back(labeled.ok()
                    ? pass_record("auxiliary graph: assertions", 0, 0)
                    : fail_record("auxiliary graph: assertions",
                                  static_cast<long long>(labeled.failures.size()), 0,
                                  labeled.failures.front()));

  auto& sz = rep.meta.set_sizes;
  sz["V_C"] = static_cast<int>(flowers.V_C.size());
  sz["F_C"] = static_cast<int>(flowers.F_C.size());
  sz["M_C"] = static_cast<int>(flowers.M_C.size());
  sz["T_B"] = static_cast<int>(flowers.T_B.size());
  sz["M_B"] = static_cast<int>(flowers.M_B.size());
  sz["F_H"] = static_cast<int>(dec.F_H.size());
  sz["S"] = static_cast<int>(dec.S.size());
  sz["T_H"] = static_cast<int>(dec.T_H.size());
  sz["U"] = static_cast<int>(dec.U.size());
  sz["beyond"] = static_cast<int>(dec.beyond.size());
  sz["M_S"] = static_cast<int>(dec.M_S.size());
  sz["M_U"] = static_cast<int>(dec.M_U.size());
  if (any_failed(rec)) return;

  long long n = g.n(), M = m.size();
  long long F_n = static_cast<long long>(free_vertices(g, m).size());
  long long F_H_n = dec.F_H.size(), S_n = dec.S.size();
  long long T_H_n = dec.T_H.size(), U_n = dec.U.size();
  int delta = rep.meta.delta;
  bool guard = !dec.F_H.empty();
  const std::string guard_reason = "F_H empty; the -12/-24 constants need it";

  if (!guard) {
    rec.push_back(vacuous_record("levels: |F_H| <= 6|S| - 12", guard_reason));
    rec.push_back(
        vacuous_record("levels: |F_H| + |T_H| <= 6|S| + 6|U| - 12", guard_reason));
  } else {
    rec.push_back(checked("levels: |F_H| <= 6|S| - 12", F_H_n, 6 * S_n - 12,
                          "free level exceeds the bound"));
    rec.push_back(checked("levels: |F_H| + |T_H| <= 6|S| + 6|U| - 12",
                          F_H_n + T_H_n, 6 * S_n + 6 * U_n - 12,
                          "independent levels exceed the bound"));
    // the two instantiations of the independent-set bound behind them
    std::set<int> FS = labeled.F_H;
    FS.insert(labeled.S.begin(), labeled.S.end());
    auto bw1 = check_independent_set_bound(
        extract_subdrawing(labeled.H, {FS.begin(), FS.end()}), labeled.F_H);
    bw1.name = "levels: " + bw1.name + " on F_H and S";
    rec.push_back(bw1);
    std::set<int> FT = labeled.F_H;
    FT.insert(labeled.T_H.begin(), labeled.T_H.end());
    auto bw2 = check_independent_set_bound(labeled.H, FT);
    bw2.name = "levels: " + bw2.name + " on H";
    rec.push_back(bw2);
  }

  if (delta > 3) {
    rep.meta.c = Rational(4, delta - 2);
    if (!guard) {
      rec.push_back(vacuous_record(
          "high-degree levels: (delta-2)|F_H| <= 4(|S| - 2)", guard_reason));
      rec.push_back(vacuous_record(
          "high-degree levels: (delta-2)(|F_H| + |T_H|) <= 4(|S| + |U| - 2)",
          guard_reason));
    } else {
      rec.push_back(checked("high-degree levels: (delta-2)|F_H| <= 4(|S| - 2)",
                            (delta - 2) * F_H_n, 4 * (S_n - 2),
                            "free level exceeds the bound"));
      rec.push_back(
          checked("high-degree levels: (delta-2)(|F_H| + |T_H|) <= 4(|S| + |U| - 2)",
                  (delta - 2) * (F_H_n + T_H_n), 4 * (S_n + U_n - 2),
                  "independent levels exceed the bound"));
    }
  }

  rec.push_back(equal_record("identity: |F| = n - 2|M|", F_n, n - 2 * M,
                             "matching does not cover n - |F| vertices"));
  rec.push_back(equal_record("identity: |S| = |M_S|", S_n,
                             static_cast<long long>(dec.M_S.size()),
                             "an S-vertex is unmatched or shares its edge"));
  rec.push_back(equal_record("identity: |U| = |M_U|", U_n,
                             static_cast<long long>(dec.M_U.size()),
                             "a U-vertex is unmatched or shares its edge"));
  rec.push_back(equal_record("identity: |T_H| + |T_B| = |M_S|",
                             T_H_n + static_cast<long long>(flowers.T_B.size()),
                             static_cast<long long>(dec.M_S.size()),
                             "an S-partner is neither in T_H nor in T_B"));

  {
    std::set<VertexPair> seen;
    std::string problem;
    auto absorb = [&](const EdgeList& part, const char* part_name) {
      for (auto [a, b] : part) {
        auto cp = canon(a, b);
        if (!seen.insert(cp).second && problem.empty())
          problem = std::string(part_name) + " repeats edge " + pair_string(cp);
        if (!m.contains(a, b) && problem.empty())
          problem = std::string(part_name) + " edge " + pair_string(cp) +
                    " is not a matching edge";
      }
    };
    absorb(flowers.M_C, "M_C");
    absorb(flowers.M_B, "M_B");
    absorb(dec.M_S, "M_S");
    absorb(dec.M_U, "M_U");
    long long total = static_cast<long long>(flowers.M_C.size()) +
                      flowers.M_B.size() + dec.M_S.size() + dec.M_U.size();
    rec.push_back(problem.empty()
                      ? checked("partition: |M_C| + |M_B| + |M_S| + |M_U| <= |M|",
                                total, M, "matching edges overcounted")
                      : fail_record("partition: |M_C| + |M_B| + |M_S| + |M_U| <= |M|",
                                    total, M, problem));
  }
  {
    std::set<int> fc(flowers.F_C.begin(), flowers.F_C.end());
    std::string problem;
    for (int v : dec.F_H)
      if (fc.count(v) && problem.empty())
        problem = "free vertex " + std::to_string(v) + " in both F_C and F_H";
    long long both = static_cast<long long>(fc.size()) + F_H_n;
    rec.push_back(problem.empty()
                      ? equal_record("partition: |F_C| + |F_H| = |F|", both, F_n,
                                     "a free vertex escaped both classes")
                      : fail_record("partition: |F_C| + |F_H| = |F|", both, F_n,
                                    problem));
  }
  if (any_failed(rec)) return;

  auto partner = matching_in_drawing_ids(dec, ids, labeled.T_H);
  auto st = run_pipeline(labeled, partner);
  rec.insert(rec.end(), st.checks.begin(), st.checks.end());
  if (!st.ok()) return;

  long long M_C_n = flowers.M_C.size(), M_B_n = flowers.M_B.size();
  long long M_S_n = dec.M_S.size(), M_U_n = dec.M_U.size();

  if (!guard) {
    rec.push_back(vacuous_record("corollary: 7|F| <= 36|M| - 84", guard_reason));
  } else {
    rec.push_back(checked("corollary: 7|F| <= 36|M| - 84", 7 * F_n, 36 * M - 84,
                          "weak chain violated"));
  }
  rec.push_back(bound_record("corollary: 50|M| >= 7(n + 12)", 7 * (n + 12),
                             50 * M, guard, guard_reason));

  if (!guard) {
    rec.push_back(vacuous_record(
        "reassembly: |F| <= |M_C| + |M_B| + 5|M_S| + 5|M_U| - 12", guard_reason));
    rec.push_back(vacuous_record("reassembly: |F| <= 5|M| - 12", guard_reason));
  } else {
    rec.push_back(checked("reassembly: |F| <= |M_C| + |M_B| + 5|M_S| + 5|M_U| - 12",
                          F_n, M_C_n + M_B_n + 5 * M_S_n + 5 * M_U_n - 12,
                          "component inequalities do not cover |F|"));
    rec.push_back(checked("reassembly: |F| <= 5|M| - 12", F_n, 5 * M - 12,
                          "direct count exceeds the assembled bound"));
  }

  rec.push_back(bound_record("main bound: 7|M| >= n + 12", n + 12, 7 * M, guard,
                             guard_reason));
  if (delta == 4) {
    if (!guard)
      rec.push_back(vacuous_record("high-degree chain: 3|F| <= 4|M| - 12",
                                   guard_reason));
    else
      rec.push_back(checked("high-degree chain: 3|F| <= 4|M| - 12", 3 * F_n,
                            4 * M - 12, "high-degree chain violated"));
    rec.push_back(bound_record("high-degree bound: 10|M| >= 3(n + 12)",
                               3 * (n + 12), 10 * M, guard, guard_reason));
  } else if (delta >= 5) {
    if (!guard)
      rec.push_back(vacuous_record(
          "high-degree chain: (delta-2)|F| <= (delta-2)|M| - 8", guard_reason));
    else
      rec.push_back(checked("high-degree chain: (delta-2)|F| <= (delta-2)|M| - 8",
                            (delta - 2) * F_n, (delta - 2) * M - 8,
                            "high-degree chain violated"));
    rec.push_back(bound_record("high-degree bound: 3|M| >= n + 12", n + 12,
                               3 * M, guard, guard_reason));
  }
}

}  // namespace

AuditReport audit_instance(const Drawing& d, const Matching& m, int k) {
  if (k != 3 && k != 9)
    throw std::invalid_argument("audit supports k = 3 and k = 9 only");
  AuditReport rep;
  rep.meta.k = k;
  auto& rec = rep.records;

  auto vr = d.validate(false);
  if (!vr.ok()) {
    rec.push_back(fail_record("audit: valid drawing",
                              static_cast<long long>(vr.violations.size()), 0,
                              vr.violations.front()));
    return rep;
  }
  auto [g, ids] = d.to_graph();
  rep.meta.n = g.n();
  rep.meta.m = g.m();
  if (g.n() == 0) {
    rec.push_back(fail_record("audit: nonempty instance", 0, 1, "no vertices"));
    return rep;
  }
  auto mi = validate_matching(g, m);
  if (!mi.ok()) {
    rec.push_back(fail_record("audit: valid matching",
                              static_cast<long long>(mi.reasons.size()), 0,
                              mi.reasons.front()));
    return rep;
  }
  rep.meta.matching_size = m.size();
  rep.meta.delta = min_degree(g);
  rep.meta.set_sizes["F"] = static_cast<int>(free_vertices(g, m).size());

  rec.push_back(g.connected()
                    ? pass_record("audit: connected instance", 1, 1)
                    : fail_record("audit: connected instance", 2, 1,
                                  "bound constants assume one component"));
  rec.push_back(rep.meta.delta >= 3
                    ? pass_record("audit: minimum degree >= 3", 3, rep.meta.delta)
                    : fail_record("audit: minimum degree >= 3", 3, rep.meta.delta,
                                  "a vertex has degree " +
                                      std::to_string(rep.meta.delta)));
  auto ap = find_bounded_augmenting_path(g, m, k);
  rec.push_back(!ap ? pass_record("audit: no augmenting path of length <= k", 0, k)
                    : fail_record("audit: no augmenting path of length <= k",
                                  ap->length(), k, path_string(*ap)));
  if (any_failed(rec)) return rep;

  if (k == 3)
    audit_short_chain(d, g, ids, m, rep);
  else
    audit_full_chain(d, g, ids, m, rep);
  return rep;
}

nlohmann::ordered_json audit_report_to_json(const AuditReport& r) {
  nlohmann::ordered_json meta;
  meta["n"] = r.meta.n;
  meta["m"] = r.meta.m;
  meta["delta"] = r.meta.delta;
  meta["k"] = r.meta.k;
  meta["matching_size"] = r.meta.matching_size;
  if (r.meta.delta > 3)
    meta["c"] = {{"num", r.meta.c.num}, {"den", r.meta.c.den}};
  meta["set_sizes"] = r.meta.set_sizes;
  nlohmann::ordered_json records = nlohmann::ordered_json::array();
  for (const auto& c : r.records) {
    nlohmann::ordered_json jr;
    jr["name"] = c.name;
    jr["status"] = c.status;
    jr["lhs"] = c.lhs;
    jr["rhs"] = c.rhs;
    jr["witness"] = c.witness;
    records.push_back(jr);
  }
  return {{"meta", meta}, {"records", records}, {"ok", r.ok()}};
}

}  // namespace onematch
