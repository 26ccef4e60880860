#include "fintop/error.hpp"

namespace fintop {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotATopology: return "NotATopology";
    case ErrorCode::DuplicateLabel: return "DuplicateLabel";
    case ErrorCode::UnknownLabel: return "UnknownLabel";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::QuotientMismatch: return "QuotientMismatch";
    case ErrorCode::NotT0: return "NotT0";
    case ErrorCode::NotContinuous: return "NotContinuous";
    case ErrorCode::DomainMismatch: return "DomainMismatch";
    case ErrorCode::NotDiscreteCodomain: return "NotDiscreteCodomain";
    case ErrorCode::NotConstantOnClasses: return "NotConstantOnClasses";
    case ErrorCode::OracleTooLarge: return "OracleTooLarge";
    case ErrorCode::SearchSpaceTooLarge: return "SearchSpaceTooLarge";
    case ErrorCode::NotFaceClosed: return "NotFaceClosed";
    case ErrorCode::UnsupportedPrime: return "UnsupportedPrime";
    case ErrorCode::UnsupportedCoefficients: return "UnsupportedCoefficients";
    case ErrorCode::WindowTooLarge: return "WindowTooLarge";
    case ErrorCode::ResolutionTooSmall: return "ResolutionTooSmall";
    case ErrorCode::BondNotWellDefined: return "BondNotWellDefined";
    case ErrorCode::IsolatedTwin: return "IsolatedTwin";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

bool is_property_failure(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::QuotientMismatch:
    case ErrorCode::NotConstantOnClasses:
    case ErrorCode::InvariantViolation:
      return true;
    default:
      return false;
  }
}

}  // namespace fintop
