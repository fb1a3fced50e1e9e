#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace frameforge {

enum class ErrorCode {
  InvalidInput,
  ShapeError,
  NotHermitian,
  NotPSD,
  SingularOperator,
  NotAFrame,
  NotRieszBasis,
  NotRieszSequence,
  NotParseval,
  InvalidSubspace,
  NormTooLarge,
  NotIsomorphism,
  InvalidEpsilon,
  InvalidBudgets,
  InvalidP,
  BudgetTooLarge,
  ZeroVector,
  ParseError,
};

std::string_view to_string(ErrorCode code) noexcept;

/// All failures raised by the library carry one of the codes above so that
/// callers (the CLI in particular) can map them onto stable exit codes.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace frameforge
