#include "tropjac/error.hpp"

namespace tropjac {

std::string_view error_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::DisconnectedGraph: return "DisconnectedGraph";
    case ErrorCode::DanglingReference: return "DanglingReference";
    case ErrorCode::NegativeGenus: return "NegativeGenus";
    case ErrorCode::DuplicateId: return "DuplicateId";
    case ErrorCode::OutOfSupportedRange: return "OutOfSupportedRange";
    case ErrorCode::AmbientTooLarge: return "AmbientTooLarge";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::LoopSlopeNonzero: return "LoopSlopeNonzero";
    case ErrorCode::MissingSlope: return "MissingSlope";
    case ErrorCode::WeightSumMismatch: return "WeightSumMismatch";
    case ErrorCode::NotATree: return "NotATree";
    case ErrorCode::Infeasible: return "Infeasible";
    case ErrorCode::TooManyEdges: return "TooManyEdges";
    case ErrorCode::BoundTooSmall: return "BoundTooSmall";
    case ErrorCode::TooManyVertices: return "TooManyVertices";
    case ErrorCode::NotTotallyOrdered: return "NotTotallyOrdered";
    case ErrorCode::DegenerateDivisor: return "DegenerateDivisor";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

}  // namespace tropjac
