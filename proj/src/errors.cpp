#include "singlink/errors.hpp"

namespace singlink {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::UnknownVertex: return "UnknownVertex";
    case ErrorCode::UnknownEdge: return "UnknownEdge";
    case ErrorCode::UnknownArrow: return "UnknownArrow";
    case ErrorCode::UnknownEulerNumber: return "UnknownEulerNumber";
    case ErrorCode::SelfLoopUnsupported: return "SelfLoopUnsupported";
    case ErrorCode::NotContractible: return "NotContractible";
    case ErrorCode::SelfLoopWouldForm: return "SelfLoopWouldForm";
    case ErrorCode::TangencyWouldForm: return "TangencyWouldForm";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::NotCoprime: return "NotCoprime";
    case ErrorCode::OutOfRange: return "OutOfRange";
    case ErrorCode::WeightTooSmall: return "WeightTooSmall";
    case ErrorCode::InsufficientTruncation: return "InsufficientTruncation";
    case ErrorCode::NotReduced: return "NotReduced";
    case ErrorCode::InvalidBranch: return "InvalidBranch";
    case ErrorCode::MissingMultiplicity: return "MissingMultiplicity";
    case ErrorCode::NonPositiveDegree: return "NonPositiveDegree";
    case ErrorCode::InvalidHJParams: return "InvalidHJParams";
    case ErrorCode::InvalidCoveringData: return "InvalidCoveringData";
    case ErrorCode::NonIntegralSolution: return "NonIntegralSolution";
    case ErrorCode::InconsistentEulerNumber: return "InconsistentEulerNumber";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::SchemaError: return "SchemaError";
  }
  return "Unknown";
}

void fail(ErrorCode code, const std::string& message) { throw Error(code, message); }

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_add_overflow(a, b, &out)) fail(ErrorCode::Overflow, "int64 overflow in addition");
  return out;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t out = 0;
  if (__builtin_mul_overflow(a, b, &out)) fail(ErrorCode::Overflow, "int64 overflow in multiplication");
  return out;
}

}  // namespace singlink
