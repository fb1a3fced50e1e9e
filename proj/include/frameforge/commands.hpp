#pragma once

#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>
#include <vector>

#include "frameforge/acceptance.hpp"
#include "frameforge/decompose.hpp"
#include "frameforge/manifest.hpp"
#include "frameforge/report.hpp"

namespace frameforge {

enum ExitCode : int { kExitOk = 0, kExitInputError = 2, kExitCheckFailure = 3 };

struct ExperimentConfig {
  std::string command;
  std::string input;             // matrix or frame manifest
  Json family;                   // family spec, null when unset
  std::vector<std::size_t> budgets;
  double epsilon = kDefaultEpsilon;
  std::uint64_t seed = kDefaultSeed;
  TolerancePolicy tol;
  std::string out;               // empty or "-" for stdout
  std::string manifest;          // build: where to write the frame manifest
  std::string format = "json";   // json or csv
  std::string filter;
  std::string stream;            // diagnose: harmonic, zeta2 or zero
  std::vector<Eigen::Index> sphere_dims;
  std::vector<ComplexVector> probes;
  bool timing = false;
};

/// Overlays the keys present in a config document onto `base`.
ExperimentConfig apply_config_json(const Json& j, ExperimentConfig base);

/// Throws InvalidInput / InvalidBudgets / InvalidEpsilon on a bad config.
void validate_config(const ExperimentConfig& config);

/// "a,b,c" -> {a, b, c}.
std::vector<std::size_t> parse_size_list(const std::string& text);

/// The configuration fields that affect results (no output paths).
Json config_echo(const ExperimentConfig& config);

struct CommandResult {
  ReportDocument report;
  std::string csv;      // diagnose series (csv format)
  Json manifest;        // build output, null otherwise
};

CommandResult cmd_decompose(const ExperimentConfig& config);
CommandResult cmd_build(const ExperimentConfig& config);
CommandResult cmd_diagnose(const ExperimentConfig& config);
CommandResult cmd_verify(const ExperimentConfig& config);
CommandResult cmd_probe(const ExperimentConfig& config);

CommandResult run_command(const ExperimentConfig& config);

/// 0 when every check passed, 3 otherwise.
int exit_code_for(const ReportDocument& report);

/// Full command-line entry point. Output aimed at stdout goes to `out`.
int cli_main(int argc, const char* const* argv, std::ostream& out, std::ostream& err);

}  // namespace frameforge
