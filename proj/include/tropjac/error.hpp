#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace tropjac {

enum class ErrorCode {
  ParseError,
  DisconnectedGraph,
  DanglingReference,
  NegativeGenus,
  DuplicateId,
  OutOfSupportedRange,
  AmbientTooLarge,
  Overflow,
  LoopSlopeNonzero,
  MissingSlope,
  WeightSumMismatch,
  NotATree,
  Infeasible,
  TooManyEdges,
  BoundTooSmall,
  TooManyVertices,
  NotTotallyOrdered,
  DegenerateDivisor,
  InvalidArgument,
};

std::string_view error_name(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail)
      : std::runtime_error(std::string(error_name(code)) + ": " + detail), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace tropjac
