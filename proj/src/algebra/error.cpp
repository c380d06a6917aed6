#include "gwb/error.hpp"

namespace gwb {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::ResourceExhausted: return "ResourceExhausted";
    case ErrorCode::MalformedVariety: return "MalformedVariety";
    case ErrorCode::MalformedPresentation: return "MalformedPresentation";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::PointNotOnVariety: return "PointNotOnVariety";
    case ErrorCode::SamplingFailed: return "SamplingFailed";
    case ErrorCode::NotPure: return "NotPure";
    case ErrorCode::UnsupportedHSpec: return "UnsupportedHSpec";
    case ErrorCode::ToleranceUnachievable: return "ToleranceUnachievable";
    case ErrorCode::VNotOverConstants: return "VNotOverConstants";
    case ErrorCode::DependentRows: return "DependentRows";
    case ErrorCode::PrecisionTooLow: return "PrecisionTooLow";
    case ErrorCode::MaxRestartsExceeded: return "MaxRestartsExceeded";
    case ErrorCode::SingularLocusOnly: return "SingularLocusOnly";
    case ErrorCode::PrecisionUnreachable: return "PrecisionUnreachable";
    case ErrorCode::NewtonDiverged: return "NewtonDiverged";
    case ErrorCode::NoTransversalPoint: return "NoTransversalPoint";
    case ErrorCode::NonzeroConstantTerm: return "NonzeroConstantTerm";
    case ErrorCode::ZeroConstant: return "ZeroConstant";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::ResolutionTooLow: return "ResolutionTooLow";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::UnknownVerb: return "UnknownVerb";
  }
  return "Unknown";
}

}  // namespace gwb
