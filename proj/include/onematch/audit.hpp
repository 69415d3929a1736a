#pragma once

#include <map>
#include <string>
#include <vector>

#include <json.hpp>

#include "onematch/bounds.hpp"
#include "onematch/drawing.hpp"
#include "onematch/graph.hpp"
#include "onematch/report.hpp"

namespace onematch {

/// Instance measurements that give the check records their context.
/// `c` is the exact high-degree coefficient 4/(delta-2), only meaningful
/// when delta > 3.
struct AuditMeta {
  int n = 0, m = 0, delta = 0, k = 0, matching_size = 0;
  Rational c;
  std::map<std::string, int> set_sizes;
};

struct AuditReport {
  AuditMeta meta;
  std::vector<CheckRecord> records;
  bool ok() const { return !any_failed(records); }
};

nlohmann::ordered_json audit_report_to_json(const AuditReport& r);

/// Evaluates the whole inequality chain on one drawn instance. M lives in
/// the index space of d.to_graph(). k = 3 runs the short chain down to
/// 8|M| >= n + 12; k = 9 runs flowers, levels, the surgery pipeline, the
/// reassembly and the final cardinality bounds (including the high-degree
/// variants when the minimum degree exceeds 3). A failed check aborts the
/// checks depending on it; the report is produced either way. Final
/// cardinality bounds that fail numerically while their derivation guard
/// (a nonempty free level) is unmet are recorded vacuous, never fail.
AuditReport audit_instance(const Drawing& d, const Matching& m, int k);

}  // namespace onematch
