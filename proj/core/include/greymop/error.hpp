#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace greymop {

enum class ErrorCode {
  // grey_core
  TOutOfRange,
  LengthMismatch,
  DegenerateColumn,
  InvariantViolation,
  // lp_solver
  MalformedProblem,
  IterationLimit,
  // positioned_lp
  DimensionMismatch,
  ThetaOutOfRange,
  DegenerateAssessment,
  // gmop
  InfeasibleSample,
  EmptyRegion,
  DegenerateObjective,
  AllZeroPreferences,
  WeightDimensionMismatch,
  UnboundedObjective,
  InfeasibleModel,
  ZeroWidth,
  InfeasibleMaxMin,
  // portfolio
  IndexOutOfRange,
  RiskWeightOutOfRange,
  EmptyFrontier,
  // planner
  ParseError,
  ParameterError,
  UnknownHandle,
  UnknownSession,
  SessionClosed,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above so
/// callers (CLI, HTTP layer) can map it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace greymop
