#pragma once

#include <string>
#include <utility>
#include <vector>

namespace frameforge {

/// One verified inequality `measured <relation> bound`, relation "<=" or
/// ">=". Equalities are recorded as their deviation against a tolerance, so
/// both sides are always available.
struct CheckResult {
  std::string name;
  double measured = 0.0;
  double bound = 0.0;
  std::string relation = "<=";
  bool pass = false;
  std::string note;
};

inline CheckResult check_le(std::string name, double measured, double bound, std::string note = {}) {
  const bool pass = measured <= bound;  // NaN fails
  return {std::move(name), measured, bound, "<=", pass, std::move(note)};
}

/// Lower-bound form: value >= floor, stored as measured = value, bound = floor.
inline CheckResult check_ge(std::string name, double measured, double floor, std::string note = {}) {
  const bool pass = measured >= floor;
  return {std::move(name), measured, floor, ">=", pass, std::move(note)};
}

inline bool all_pass(const std::vector<CheckResult>& checks) {
  for (const CheckResult& c : checks) {
    if (!c.pass) return false;
  }
  return true;
}

}  // namespace frameforge
