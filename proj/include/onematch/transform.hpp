#pragma once

#include <map>
#include <set>
#include <vector>

#include "onematch/drawing.hpp"
#include "onematch/report.hpp"
#include "onematch/structure.hpp"

namespace onematch {

/// Classification of the T_H vertices and their assignment edges.
/// mu = has an uncrossed edge into U, sigma = three or more S-neighbours,
/// rho = remaining. U_classes[d] holds the U-vertices with d assignees,
/// T_classes[d] the non-sigma T-vertices assigned into U_classes[d].
struct Assignment {
  std::set<int> T_mu, T_sigma, T_rho;
  std::map<int, int> assigned_to;  // t -> u for T_mu and T_rho
  std::map<int, std::set<int>> U_classes;
  std::map<int, std::set<int>> T_classes;
};

/// Sequential surgery state: H -> H+ -> I -> J -> J-. `partner` is the
/// pipeline-local matching over drawing vertex ids (symmetric map), which
/// diverges from the input matching when crossing matching-edge pairs
/// trade partners. Every structural claim along the way lands in `checks`.
struct PipelineState {
  Drawing H, Hplus, I, J, Jminus;
  std::set<int> F_H, S, T_H, U;
  std::map<int, int> partner;
  Assignment assign;
  std::set<int> T_mu_prime, T_rho_prime;
  std::vector<CheckRecord> checks;
  bool ok() const { return !any_failed(checks); }
};

/// The pipeline-local matching: dec.M_S pairs translated to drawing ids,
/// keeping only pairs whose T-side lies in T_H (blossom partners are
/// outside H and play no role here).
std::map<int, int> matching_in_drawing_ids(const Decomposition& dec,
                                           const std::vector<int>& ids,
                                           const std::set<int>& T_H);

PipelineState make_pipeline(const LabeledH& labeled,
                            const std::map<int, int>& matching_partner);

/// H+ = H minus edges inside S|U, plus kite-edges (t,x) for every crossing
/// kite pair with t in T_H and x in S|U (inserted, or re-routed when
/// crossed or not routed at the matching-edge crossing), with crossing
/// matching-edge pairs traded. Asserts the four H+ properties.
void build_H_plus(PipelineState& st);

/// Runs the assignment algorithm plus the re-assignment loop to fixpoint,
/// then asserts the small-class properties (|T^0| = 0, the 5x bound, the
/// |T^d| = d|U^d| identity, and the fixpoint consequences).
void assign_T_to_U(PipelineState& st);

/// I: delete the d<=5 classes, strip non-assignment TU-edges, then
/// eliminate every non-sigma T-vertex with an uncrossed matching- or
/// assignment-edge by a kite-edge insertion (shared-endpoint crossing) or
/// a path splice. Asserts simplicity, exact U-degrees, the one-incident-
/// kite-region claim, the loop postcondition, and ledger conservation.
void easy_transform(PipelineState& st);

/// J: for each remaining rho-vertex, assert the five-point crossing
/// pattern around it (in the current drawing, before each surgery), then
/// replace the vertex by a kite-edge copy (multi-edges allowed). Asserts
/// no empty theta and at most one crossed copy per parallel class.
void rho_transform(PipelineState& st);

/// J-: drop one edge per empty lens until none remain; asserts that the
/// big U-classes keep degree >= 3 and crossing-weighted degree >= d.
void remove_empty_lenses(PipelineState& st);

/// Evaluates the weighted independent-set bound on J- with
/// A = F_H | T_sigma | (U-classes d >= 6) and the integer inequality
/// chain down to |F_H| + |T_H| <= 6|S| + 5|U| - 12.
void verify_lemma_hard(PipelineState& st);

/// All stages in order; later stages are skipped once a check fails.
PipelineState run_pipeline(const LabeledH& labeled,
                           const std::map<int, int>& matching_partner);

}  // namespace onematch
