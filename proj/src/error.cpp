#include "cbgon/error.hpp"

namespace cbgon {

const char* error_code_name(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::ZeroInverse: return "ZeroInverse";
    case ErrorCode::FieldMismatch: return "FieldMismatch";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::NotHomogeneous: return "NotHomogeneous";
    case ErrorCode::WrongVariable: return "WrongVariable";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::PointNotOnScheme: return "PointNotOnScheme";
    case ErrorCode::DegenerateConfiguration: return "DegenerateConfiguration";
    case ErrorCode::NonReducedSubscheme: return "NonReducedSubscheme";
    case ErrorCode::NegativeCanonicalTwist: return "NegativeCanonicalTwist";
    case ErrorCode::PointNotOnCurve: return "PointNotOnCurve";
    case ErrorCode::NonReducedCenterIntersection: return "NonReducedCenterIntersection";
    case ErrorCode::SingularAtCenter: return "SingularAtCenter";
    case ErrorCode::DegreeOrderViolation: return "DegreeOrderViolation";
    case ErrorCode::RangeViolation: return "RangeViolation";
    case ErrorCode::RetryLimit: return "RetryLimit";
    case ErrorCode::InstanceFormat: return "InstanceFormat";
  }
  return "Unknown";
}

}  // namespace cbgon
