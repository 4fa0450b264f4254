#include "periodica/error.hpp"

namespace periodica {

std::string_view error_code_name(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotLatinSquare: return "NotLatinSquare";
    case ErrorCode::NoIdentity: return "NoIdentity";
    case ErrorCode::NoInverse: return "NoInverse";
    case ErrorCode::NotAssociative: return "NotAssociative";
    case ErrorCode::NotSubgroup: return "NotSubgroup";
    case ErrorCode::NotNormal: return "NotNormal";
    case ErrorCode::NotComparable: return "NotComparable";
    case ErrorCode::NotAChain: return "NotAChain";
    case ErrorCode::NotPrime: return "NotPrime";
    case ErrorCode::AlphabetTooSmall: return "AlphabetTooSmall";
    case ErrorCode::SingularMatrix: return "SingularMatrix";
    case ErrorCode::SyntaxError: return "SyntaxError";
    case ErrorCode::UnknownGenerator: return "UnknownGenerator";
    case ErrorCode::InvalidInput: return "InvalidInput";
    case ErrorCode::OrderLimitExceeded: return "OrderLimitExceeded";
    case ErrorCode::LatticeLimitExceeded: return "LatticeLimitExceeded";
    case ErrorCode::IndexLimitExceeded: return "IndexLimitExceeded";
    case ErrorCode::BudgetExceeded: return "BudgetExceeded";
    case ErrorCode::CatalogIncomplete: return "CatalogIncomplete";
    case ErrorCode::CosetLimitExceeded: return "CosetLimitExceeded";
    case ErrorCode::DivisibilityViolation: return "DivisibilityViolation";
  }
  return "Unknown";
}

ErrorCategory error_category(ErrorCode code) {
  switch (code) {
    case ErrorCode::OrderLimitExceeded:
    case ErrorCode::LatticeLimitExceeded:
    case ErrorCode::IndexLimitExceeded:
    case ErrorCode::BudgetExceeded:
    case ErrorCode::CatalogIncomplete:
      return ErrorCategory::Limit;
    case ErrorCode::CosetLimitExceeded:
      return ErrorCategory::Inconclusive;
    case ErrorCode::DivisibilityViolation:
      return ErrorCategory::Internal;
    default:
      return ErrorCategory::Input;
  }
}

}  // namespace periodica
