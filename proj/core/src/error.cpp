#include "greymop/error.hpp"

namespace greymop {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::TOutOfRange: return "TOutOfRange";
    case ErrorCode::LengthMismatch: return "LengthMismatch";
    case ErrorCode::DegenerateColumn: return "DegenerateColumn";
    case ErrorCode::InvariantViolation: return "InvariantViolation";
    case ErrorCode::MalformedProblem: return "MalformedProblem";
    case ErrorCode::IterationLimit: return "IterationLimit";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::ThetaOutOfRange: return "ThetaOutOfRange";
    case ErrorCode::DegenerateAssessment: return "DegenerateAssessment";
    case ErrorCode::InfeasibleSample: return "InfeasibleSample";
    case ErrorCode::EmptyRegion: return "EmptyRegion";
    case ErrorCode::DegenerateObjective: return "DegenerateObjective";
    case ErrorCode::AllZeroPreferences: return "AllZeroPreferences";
    case ErrorCode::WeightDimensionMismatch: return "WeightDimensionMismatch";
    case ErrorCode::UnboundedObjective: return "UnboundedObjective";
    case ErrorCode::InfeasibleModel: return "InfeasibleModel";
    case ErrorCode::ZeroWidth: return "ZeroWidth";
    case ErrorCode::InfeasibleMaxMin: return "InfeasibleMaxMin";
    case ErrorCode::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorCode::RiskWeightOutOfRange: return "RiskWeightOutOfRange";
    case ErrorCode::EmptyFrontier: return "EmptyFrontier";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::ParameterError: return "ParameterError";
    case ErrorCode::UnknownHandle: return "UnknownHandle";
    case ErrorCode::UnknownSession: return "UnknownSession";
    case ErrorCode::SessionClosed: return "SessionClosed";
  }
  return "Unknown";
}

}  // namespace greymop
