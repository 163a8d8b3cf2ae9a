#pragma once

#include <stdexcept>
#include <string>

namespace cbgon {

enum class ErrorCode {
  InvalidArgument,
  NotPrime,
  ZeroInverse,
  FieldMismatch,
  SyntaxError,
  NotHomogeneous,
  WrongVariable,
  BudgetExceeded,
  PointNotOnScheme,
  DegenerateConfiguration,
  NonReducedSubscheme,
  NegativeCanonicalTwist,
  PointNotOnCurve,
  NonReducedCenterIntersection,
  SingularAtCenter,
  DegreeOrderViolation,
  RangeViolation,
  RetryLimit,
  InstanceFormat,
};

const char* error_code_name(ErrorCode code) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace cbgon
