#include "wilfkit/error.hpp"

namespace wilfkit {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::EmptyInput: return "EmptyInput";
    case ErrorCode::InvalidGenerator: return "InvalidGenerator";
    case ErrorCode::GcdNotOne: return "GcdNotOne";
    case ErrorCode::DegenerateSemigroup: return "DegenerateSemigroup";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::InvalidWeight: return "InvalidWeight";
    case ErrorCode::InvalidN: return "InvalidN";
    case ErrorCode::EmptySet: return "EmptySet";
    case ErrorCode::NotDownwardClosed: return "NotDownwardClosed";
    case ErrorCode::InternalInconsistency: return "InternalInconsistency";
    case ErrorCode::InvalidDegree: return "InvalidDegree";
    case ErrorCode::DegenerateDenominator: return "DegenerateDenominator";
    case ErrorCode::EmptyBasis: return "EmptyBasis";
    case ErrorCode::NotRepresentable: return "NotRepresentable";
    case ErrorCode::ClosureViolation: return "ClosureViolation";
    case ErrorCode::PreconditionRho: return "PreconditionRho";
    case ErrorCode::DegreeIdentityViolation: return "DegreeIdentityViolation";
    case ErrorCode::ParameterOutOfRange: return "ParameterOutOfRange";
    case ErrorCode::BoundTooLarge: return "BoundTooLarge";
    case ErrorCode::TooLarge: return "TooLarge";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::ParseError: return "ParseError";
    case ErrorCode::IoError: return "IoError";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& what)
    : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

}  // namespace wilfkit
