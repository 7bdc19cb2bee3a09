#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>

namespace singlink {

enum class ErrorCode {
  UnknownVertex,
  UnknownEdge,
  UnknownArrow,
  UnknownEulerNumber,
  SelfLoopUnsupported,
  NotContractible,
  SelfLoopWouldForm,
  TangencyWouldForm,
  TooLarge,
  NotCoprime,
  OutOfRange,
  WeightTooSmall,
  InsufficientTruncation,
  NotReduced,
  InvalidBranch,
  MissingMultiplicity,
  NonPositiveDegree,
  InvalidHJParams,
  InvalidCoveringData,
  NonIntegralSolution,
  InconsistentEulerNumber,
  Overflow,
  ParseError,
  SchemaError,
};

std::string_view to_string(ErrorCode code);

// Every failure raised by the library carries a machine-readable code.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

[[noreturn]] void fail(ErrorCode code, const std::string& message);

// Checked int64 arithmetic; throws Error(Overflow).
std::int64_t checked_add(std::int64_t a, std::int64_t b);
std::int64_t checked_mul(std::int64_t a, std::int64_t b);

}  // namespace singlink
