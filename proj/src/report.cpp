#include "frameforge/report.hpp"

#include <Eigen/Core>
#include <array>
#include <charconv>
#include <sstream>

namespace frameforge {

Json check_to_json(const CheckResult& c) {
  Json j = {{"name", c.name},   {"measured", c.measured}, {"relation", c.relation},
            {"bound", c.bound}, {"pass", c.pass}};
  if (!c.note.empty()) j["note"] = c.note;
  return j;
}

Json versions_json() {
  const std::string eigen = std::to_string(EIGEN_WORLD_VERSION) + "." + std::to_string(EIGEN_MAJOR_VERSION) + "." +
                            std::to_string(EIGEN_MINOR_VERSION);
  const std::string json = std::to_string(NLOHMANN_JSON_VERSION_MAJOR) + "." +
                           std::to_string(NLOHMANN_JSON_VERSION_MINOR) + "." +
                           std::to_string(NLOHMANN_JSON_VERSION_PATCH);
  return {{"frameforge", kVersion}, {"eigen", eigen}, {"nlohmann_json", json}};
}

Json report_to_json(const ReportDocument& report) {
  Json results = Json::array();
  for (const CheckResult& c : report.results) results.push_back(check_to_json(c));
  std::string status = report.status;
  if (status.empty()) status = all_pass(report.results) ? "pass" : "fail";
  return {{"command", report.command}, {"config", report.config},   {"results", results},
          {"payload", report.payload}, {"status", status},          {"versions", versions_json()}};
}

std::string dump_report(const ReportDocument& report) { return report_to_json(report).dump(2) + "\n"; }

std::string format_double(double x) {
  std::array<char, 32> buf{};
  const auto res = std::to_chars(buf.data(), buf.data() + buf.size(), x);
  return std::string(buf.data(), res.ptr);
}

std::string series_to_csv(const Ell1Report& report) {
  std::ostringstream out;
  out << "budget,partial_sum\n";
  for (std::size_t i = 0; i < report.budgets.size(); ++i) {
    out << report.budgets[i] << ',' << format_double(report.partial_sums[i]) << '\n';
  }
  return out.str();
}

std::string checks_to_csv(const std::vector<CheckResult>& checks) {
  std::ostringstream out;
  out << "name,measured,relation,bound,pass\n";
  for (const CheckResult& c : checks) {
    out << c.name << ',' << format_double(c.measured) << ',' << c.relation << ',' << format_double(c.bound) << ','
        << (c.pass ? "true" : "false") << '\n';
  }
  return out.str();
}

Json ell1_report_to_json(const Ell1Report& report) {
  const auto fit = [](const LinearFit& f) {
    return Json{{"alpha", f.alpha}, {"beta", f.beta}, {"r_squared", f.r_squared}};
  };
  return {{"budgets", report.budgets},
          {"partial_sums", report.partial_sums},
          {"classification", std::string(to_string(report.classification))},
          {"log_fit", fit(report.fit)},
          {"power_fit", fit(report.power_fit)}};
}

}  // namespace frameforge
