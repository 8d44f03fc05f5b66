#pragma once

#include <stdexcept>
#include <string>

namespace ifam {

// Every failure mode in the library carries one of these codes so callers
// (and the CLI) can react without parsing message text.
enum class Err {
  // family construction / validation
  DuplicateBlock,
  DuplicateLabel,
  EmptyBlock,
  EmptyLabel,
  IsolatedPoint,
  IndexOutOfRange,
  UniverseTooLarge,
  // serialization
  ParseError,
  ValidationError,
  // algebra on families
  OverlappingUniverses,
  // property checks
  NotUniform,
  NotIntersecting,
  TauTooLarge,
  CharacterizationMismatch,
  // generators
  InvalidParams,
  UnsupportedOrder,
  // composers
  NotCif,
  NotMif,
  SizeMismatch,
  BadPartition,
  TooManyClasses,
  ConditionAFailed,
  ConditionBFailed,
  ConditionCFailed,
  TauMismatch,
  NonUniformFactors,
  DualTauMismatch,
  ShapeMismatch,
  DualTauTooSmall,
  ReconstructionMismatch,
  VerificationFailed,
  // resource guards
  BudgetExceeded,
};

const char* to_string(Err code);

class Error : public std::runtime_error {
public:
  Error(Err code, const std::string& msg)
      : std::runtime_error(std::string(to_string(code)) + ": " + msg), code_(code) {}

  Err code() const { return code_; }

private:
  Err code_;
};

} // namespace ifam
