#pragma once

#include <string>
#include <vector>

#include "frameforge/check.hpp"
#include "frameforge/ell1.hpp"
#include "frameforge/manifest.hpp"

namespace frameforge {

inline constexpr const char* kVersion = "0.1.0";

/// Output of every command: the echoed configuration, the verified checks
/// and a command-specific payload.
struct ReportDocument {
  std::string command;
  Json config = Json::object();
  std::vector<CheckResult> results;
  Json payload = Json::object();
  std::string status;  // "pass", "fail" or "inconclusive"; derived from results when empty
};

Json check_to_json(const CheckResult& c);
Json versions_json();
Json report_to_json(const ReportDocument& report);

/// Pretty-printed JSON followed by a newline. Identical inputs give
/// identical bytes.
std::string dump_report(const ReportDocument& report);

/// Shortest decimal string that parses back to the same double.
std::string format_double(double x);

/// "budget,partial_sum" rows.
std::string series_to_csv(const Ell1Report& report);

/// "name,measured,relation,bound,pass" rows.
std::string checks_to_csv(const std::vector<CheckResult>& checks);

Json ell1_report_to_json(const Ell1Report& report);

}  // namespace frameforge
