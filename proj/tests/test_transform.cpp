#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "onematch/generators.hpp"
#include "onematch/matching.hpp"
#include "onematch/structure.hpp"
#include "onematch/transform.hpp"

using namespace onematch;

namespace {

struct Prepared {
  Drawing d;
  Graph g;
  std::vector<int> ids;
  Matching m;
  FlowerReport flowers;
  Decomposition dec;
  LabeledH labeled;
};

Prepared prepare(const Drawing& d, int k = 9) {
  auto [g, ids] = d.to_graph();
  auto m = eliminate_bounded_augmenting_paths(g, Matching::from_edges(g.n(), {}), k);
  auto fl = find_stem_blossoms(g, m, find_cycle_flowers(g, m));
  auto dec = alternating_levels(g, m, fl);
  auto labeled = build_H(d, ids, g, m, fl, dec);
  return {d, g, ids, m, fl, dec, labeled};
}

PipelineState run_on(const Prepared& p) {
  auto partner = matching_in_drawing_ids(p.dec, p.ids, p.labeled.T_H);
  return run_pipeline(p.labeled, partner);
}

std::string first_failure(const PipelineState& st) {
  for (const auto& r : st.checks)
    if (r.status == "fail") return r.name + ": " + r.witness;
  return "";
}

// hub 0 with spokes s_i = 1..6, ring vertices t_i = 7..12 between s_i and
// s_{i+1}, and an outer apex u = 13 adjacent to every t_i. All six t_i end
// up assigned to u, putting u into the d >= 6 class that triggers the
// elimination loop.
Drawing fan_gadget() {
  std::vector<std::vector<int>> faces;
  for (int i = 1; i <= 6; ++i) {
    int s = i, t = 6 + i, sn = i % 6 + 1, tn = 6 + i % 6 + 1;
    faces.push_back({0, s, t, sn});
    faces.push_back({13, tn, sn, t});
  }
  return drawing_from_oriented_faces(faces);
}

LabeledH fan_labels(const Drawing& d) {
  LabeledH labeled;
  labeled.H = d;
  labeled.F_H = {0};
  labeled.S = {1, 2, 3, 4, 5, 6};
  labeled.T_H = {7, 8, 9, 10, 11, 12};
  labeled.U = {13};
  return labeled;
}

std::map<int, int> fan_partner() {
  std::map<int, int> partner;
  for (int i = 1; i <= 6; ++i) partner[i] = 6 + i, partner[6 + i] = i;
  return partner;
}

int rot_pos(const Drawing& d, int v, int other) {
  const auto& rot = d.rotations().at(v);
  for (size_t i = 0; i < rot.size(); ++i) {
    const auto& e = d.edges().at(rot[i].edge);
    if (e.endpoint(1 - rot[i].end) == other) return static_cast<int>(i);
  }
  throw std::logic_error("neighbour not in rotation");
}

// corner positions are topology, not arithmetic; for test construction it
// is simpler to scan the few possibilities and keep the first that yields
// a valid drawing
bool try_insert_uncrossed(Drawing& d, int a, int b) {
  int da = d.degree(a), db = d.degree(b);
  for (int pa = 0; pa <= da; ++pa)
    for (int pb = 0; pb <= db; ++pb) {
      Drawing trial = d;
      try {
        trial.insert_uncrossed_edge(a, b, {a, pa}, {b, pb});
      } catch (const std::invalid_argument&) {
        continue;
      }
      if (trial.validate(true).ok()) {
        d = std::move(trial);
        return true;
      }
    }
  return false;
}

bool try_insert_crossing(Drawing& d, int a, int b, int over) {
  int da = d.degree(a), db = d.degree(b);
  for (int pa = 0; pa <= da; ++pa)
    for (int pb = 0; pb <= db; ++pb)
      for (int orient = 0; orient < 2; ++orient) {
        Drawing trial = d;
        trial.insert_edge_crossing(a, b, {a, pa}, {b, pb}, over, orient);
        if (trial.validate(true).ok()) {
          d = std::move(trial);
          return true;
        }
      }
  return false;
}

}  // namespace

TEST_CASE("fan gadget runs the path transformation on every spoke") {
  auto d = fan_gadget();
  REQUIRE(d.validate(true).ok());
  auto st = run_pipeline(fan_labels(d), fan_partner());
  CAPTURE(first_failure(st));
  CHECK(st.ok());
  CHECK(st.assign.U_classes.count(6));
  CHECK(st.assign.T_mu.size() == 6);
  CHECK(st.T_mu_prime.size() == 6);
  CHECK(st.T_rho_prime.empty());
  CHECK(st.I.degree(13) == 6);
  // every spoke partner ends up connected straight to the apex
  for (int s = 2; s <= 6; ++s) CHECK(!st.I.edge_ids_between(s, 13).empty());
}

TEST_CASE("crossed apex edge forces a kite transformation") {
  auto d = fan_gadget();
  // route (s_1, t_2) across the apex edge of t_1: the crossing partner has
  // endpoint s_1, which is exactly the kite case of the elimination loop
  REQUIRE(try_insert_crossing(d, 1, 8, d.edge_ids_between(7, 13).front()));
  auto st = run_pipeline(fan_labels(d), fan_partner());
  CAPTURE(first_failure(st));
  CHECK(st.ok());
  CHECK(st.assign.T_rho == std::set<int>{7});
  CHECK(st.T_mu_prime.count(7));  // rho vertex removed by the kite step
  CHECK(st.T_rho_prime.empty());
  CHECK(st.I.degree(13) == 6);
  CHECK(!st.I.edge_ids_between(1, 13).empty());
}

TEST_CASE("doubly crossed spoke survives to the rho transformation") {
  auto d = fan_gadget();
  d.delete_edge(d.edge_ids_between(7, 2).front());  // keep t_1 at two S-neighbours
  int x = 14, y = 15, f2 = 16, x2 = 17;
  d.add_vertex(x);
  d.insert_uncrossed_edge(7, x, {7, rot_pos(d, 7, 1)}, {x, 0});
  d.add_vertex(y);
  REQUIRE(try_insert_crossing(d, x, y, d.edge_ids_between(1, 7).front()));
  REQUIRE(try_insert_uncrossed(d, y, 1));
  REQUIRE(try_insert_uncrossed(d, y, 2));
  d.add_vertex(f2);
  REQUIRE(try_insert_crossing(d, x, f2, d.edge_ids_between(7, 13).front()));
  REQUIRE(try_insert_uncrossed(d, f2, 2));
  d.add_vertex(x2);
  d.insert_uncrossed_edge(f2, x2, {f2, 0}, {x2, 0});
  REQUIRE(d.validate(true).ok());

  auto labeled = fan_labels(d);
  labeled.F_H = {0, y, f2};
  labeled.S = {1, 2, 3, 4, 5, 6, x, x2};
  auto st = run_pipeline(labeled, fan_partner());
  CAPTURE(first_failure(st));
  CHECK(st.ok());
  CHECK(st.assign.T_rho == std::set<int>{7});
  CHECK(st.T_rho_prime == std::set<int>{7});
  CHECK(st.T_mu_prime.size() == 5);
  // the rho step replaced t_1 by the kite copy (x, u)
  CHECK(!st.J.has_vertex(7));
  CHECK(!st.J.edge_ids_between(x, 13).empty());
  CHECK(st.Jminus.degree(13) == 6);
  bool tpsi_passed = false;
  for (const auto& r : st.checks)
    if (r.name.find("Tpsi") != std::string::npos && r.status == "pass")
      tpsi_passed = true;
  CHECK(tpsi_passed);
}

TEST_CASE("perfect matching gives a vacuous pipeline") {
  auto p = prepare(fixed_instance("K4"));
  REQUIRE(p.flowers.ok());
  REQUIRE(p.dec.F_H.empty());
  auto st = run_on(p);
  CHECK(st.ok());
  bool final_vacuous = false;
  for (const auto& r : st.checks)
    if (r.name.find("|F_H| + |T_H|") != std::string::npos)
      final_vacuous = r.status == "vacuous";
  CHECK(final_vacuous);
}

TEST_CASE("degree-deficient labels fail honestly instead of throwing") {
  // path 0-1-2 drawn plainly: the T-vertex has degree 1, so the H+ degree
  // assertion must produce a fail record
  auto d = Drawing::from_parts(
      {0, 1, 2}, {{0, {0, 1}}, {1, {1, 2}}}, {},
      {{0, {{0, 0}}}, {1, {{0, 1}, {1, 0}}}, {2, {{1, 1}}}});
  LabeledH labeled;
  labeled.H = d;
  labeled.F_H = {0};
  labeled.S = {1};
  labeled.T_H = {2};
  std::map<int, int> partner{{1, 2}, {2, 1}};
  auto st = run_pipeline(labeled, partner);
  CHECK(!st.ok());
  bool named = false;
  for (const auto& r : st.checks)
    if (r.status == "fail" && r.name.find("Hplus(b)") != std::string::npos)
      named = true;
  CHECK(named);
}

TEST_CASE("missing partner is reported") {
  LabeledH labeled;
  labeled.H = fixed_instance("K4");
  labeled.T_H = {0};
  auto st = run_pipeline(labeled, {});
  CHECK(!st.ok());
  CHECK(st.checks.front().name == "pipeline: matching covers T_H");
}

TEST_CASE("matching translation keeps only in-H pairs") {
  Decomposition dec;
  dec.M_S = {{0, 1}, {2, 3}};
  std::vector<int> ids{10, 11, 12, 13};
  std::set<int> T_H{11};  // 13 is a blossom hinge, outside H
  auto partner = matching_in_drawing_ids(dec, ids, T_H);
  CHECK(partner == std::map<int, int>{{10, 11}, {11, 10}});
}

TEST_CASE("pipeline holds on generated planar instances") {
  for (std::uint64_t seed = 0; seed < 12; ++seed) {
    auto p = prepare(random_planar_triangulation(18 + 2 * (seed % 5), seed));
    REQUIRE(p.flowers.ok());
    REQUIRE(p.labeled.ok());
    auto st = run_on(p);
    CAPTURE(seed);
    CAPTURE(first_failure(st));
    CHECK(st.ok());
  }
}

TEST_CASE("pipeline holds on crossed and sparsified instances") {
  int with_T_H = 0, with_mu = 0;
  for (std::uint64_t seed = 0; seed < 25; ++seed) {
    GenConfig cfg{16 + static_cast<int>(seed % 9) * 3, seed, 0.3, 0.25};
    auto p = prepare(generate(cfg));
    REQUIRE(p.flowers.ok());
    REQUIRE(p.labeled.ok());
    auto st = run_on(p);
    CAPTURE(seed);
    CAPTURE(first_failure(st));
    CHECK(st.ok());
    if (!st.T_H.empty()) ++with_T_H;
    if (!st.T_mu_prime.empty()) ++with_mu;
  }
  // the corpus must exercise the transformation machinery somewhere
  CHECK(with_T_H > 0);
  (void)with_mu;  // tracked in the acceptance coverage criterion
}
