#pragma once

#include <string>
#include <vector>

namespace onematch {

/// One audited inequality or structural assertion. `lhs <= rhs` is the
/// convention for pass; vacuous means a stated precondition was unmet and
/// the check carries no information.
struct CheckRecord {
  std::string name;
  std::string status;  // "pass" | "fail" | "vacuous"
  long long lhs = 0;
  long long rhs = 0;
  std::string witness;
};

inline CheckRecord pass_record(std::string name, long long lhs, long long rhs) {
  return {std::move(name), "pass", lhs, rhs, ""};
}

inline CheckRecord fail_record(std::string name, long long lhs, long long rhs,
                               std::string witness) {
  return {std::move(name), "fail", lhs, rhs, std::move(witness)};
}

inline CheckRecord vacuous_record(std::string name, std::string reason) {
  return {std::move(name), "vacuous", 0, 0, std::move(reason)};
}

inline CheckRecord checked(std::string name, long long lhs, long long rhs,
                           std::string witness_on_fail) {
  return lhs <= rhs ? pass_record(std::move(name), lhs, rhs)
                    : fail_record(std::move(name), lhs, rhs,
                                  std::move(witness_on_fail));
}

inline bool any_failed(const std::vector<CheckRecord>& records) {
  for (const auto& r : records)
    if (r.status == "fail") return true;
  return false;
}

}  // namespace onematch
