#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace gwb {

enum class ErrorCode {
  ResourceExhausted,
  MalformedVariety,
  MalformedPresentation,
  InvalidArgument,
  PointNotOnVariety,
  SamplingFailed,
  NotPure,
  UnsupportedHSpec,
  ToleranceUnachievable,
  VNotOverConstants,
  DependentRows,
  PrecisionTooLow,
  MaxRestartsExceeded,
  SingularLocusOnly,
  PrecisionUnreachable,
  NewtonDiverged,
  NoTransversalPoint,
  NonzeroConstantTerm,
  ZeroConstant,
  LengthMismatch,
  ResolutionTooLow,
  ParseError,
  UnknownVerb,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so the
/// CLI can report it without string matching.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace gwb
