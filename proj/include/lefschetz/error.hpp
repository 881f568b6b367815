#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lefschetz {

enum class ErrorCode {
  MalformedDocument,
  InvariantViolation,
  DimensionMismatch,
  NoSection,
  GenusMismatch,
  MissingLiftData,
  NotMcgTrivial,
  MissingBlockData,
  InconsistentInvariants,
  LiftNotTrivial,
  LiftUndecided,
  UndecidedLift,
  NonIntegralSignature,
  OutOfRange,
};

constexpr std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::MalformedDocument: return "MalformedDocument";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NoSection: return "NoSection";
    case ErrorCode::GenusMismatch: return "GenusMismatch";
    case ErrorCode::MissingLiftData: return "MissingLiftData";
    case ErrorCode::NotMcgTrivial: return "NotMcgTrivial";
    case ErrorCode::MissingBlockData: return "MissingBlockData";
    case ErrorCode::InconsistentInvariants: return "InconsistentInvariants";
    case ErrorCode::LiftNotTrivial: return "LiftNotTrivial";
    case ErrorCode::LiftUndecided: return "LiftUndecided";
    case ErrorCode::UndecidedLift: return "UndecidedLift";
    case ErrorCode::NonIntegralSignature: return "NonIntegralSignature";
    case ErrorCode::OutOfRange: return "OutOfRange";
  }
  return "Unknown";
}

// Every failure raised by the engine carries one of the codes above; the
// CLI maps codes to exit statuses.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lefschetz
