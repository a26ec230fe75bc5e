#include "okakit/error.hpp"

namespace okakit {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::IncompatibleOperands: return "IncompatibleOperands";
    case ErrorCode::RequiresExactPolynomial: return "RequiresExactPolynomial";
    case ErrorCode::CenterNotOnAxis: return "CenterNotOnAxis";
    case ErrorCode::InvalidArity: return "InvalidArity";
    case ErrorCode::NotARelation: return "NotARelation";
    case ErrorCode::InvalidPartition: return "InvalidPartition";
    case ErrorCode::OnContour: return "OnContour";
    case ErrorCode::QuadratureFailure: return "QuadratureFailure";
    case ErrorCode::PoleTooCloseToSeam: return "PoleTooCloseToSeam";
    case ErrorCode::NotHolomorphicDifference: return "NotHolomorphicDifference";
    case ErrorCode::NotInIdeal: return "NotInIdeal";
    case ErrorCode::InvalidProblem: return "InvalidProblem";
    case ErrorCode::SchemaViolation: return "SchemaViolation";
  }
  return "Unknown";
}

}  // namespace okakit
