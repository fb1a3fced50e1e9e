#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "frameforge/check.hpp"
#include "frameforge/linalg.hpp"
#include "frameforge/report.hpp"

namespace frameforge {

inline constexpr std::uint64_t kDefaultSeed = 20240601;

struct CriterionResult {
  int id = 0;
  std::string name;    // "01_reconstruction", ...
  std::string module;  // owning module, matched by --filter
  std::vector<CheckResult> checks;
  std::string error;   // set when the criterion threw

  bool pass() const { return error.empty() && all_pass(checks); }
};

struct AcceptanceOptions {
  std::uint64_t seed = kDefaultSeed;
  TolerancePolicy tol;
  std::string filter;  // substring of a criterion name or module; empty runs all
  bool parallel = true;
};

struct CriterionInfo {
  int id;
  const char* name;
  const char* module;
};

const std::vector<CriterionInfo>& acceptance_criteria();

bool criterion_selected(const CriterionInfo& c, const std::string& filter);

/// Runs the selected criteria, ordered by name. The determinism criterion
/// reruns the others and compares the serialized reports byte for byte.
std::vector<CriterionResult> run_acceptance(const AcceptanceOptions& options);

/// The verify report for a finished run.
ReportDocument acceptance_report(const AcceptanceOptions& options, const std::vector<CriterionResult>& results);

/// Casazza reconstruction defect of a random dim x dim operator against
/// identity_tol: at dim 256 rounding alone exceeds 1e-14.
CheckResult rounding_floor_check(Eigen::Index dim, std::uint64_t seed, const TolerancePolicy& tol);

}  // namespace frameforge
