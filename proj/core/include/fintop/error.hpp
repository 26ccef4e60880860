#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace fintop {

enum class ErrorCode {
  NotATopology,
  DuplicateLabel,
  UnknownLabel,
  IndexOutOfRange,
  InvalidPartition,
  QuotientMismatch,
  NotT0,
  NotContinuous,
  DomainMismatch,
  NotDiscreteCodomain,
  NotConstantOnClasses,
  OracleTooLarge,
  SearchSpaceTooLarge,
  NotFaceClosed,
  UnsupportedPrime,
  UnsupportedCoefficients,
  WindowTooLarge,
  ResolutionTooSmall,
  BondNotWellDefined,
  IsolatedTwin,
  ParseError,
  InvariantViolation,
};

std::string_view to_string(ErrorCode code) noexcept;

/// True for codes that signal a failed internal property check rather than
/// bad input.
bool is_property_failure(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace fintop
