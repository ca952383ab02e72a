#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wilfkit {

enum class ErrorCode {
  EmptyInput,
  InvalidGenerator,
  GcdNotOne,
  DegenerateSemigroup,
  DimensionMismatch,
  InvalidWeight,
  InvalidN,
  EmptySet,
  NotDownwardClosed,
  InternalInconsistency,
  InvalidDegree,
  DegenerateDenominator,
  EmptyBasis,
  NotRepresentable,
  ClosureViolation,
  PreconditionRho,
  DegreeIdentityViolation,
  ParameterOutOfRange,
  BoundTooLarge,
  TooLarge,
  Overflow,
  ParseError,
  IoError,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so
/// callers (the corpus runner in particular) can classify it without
/// matching on message text.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace wilfkit
