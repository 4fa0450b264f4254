#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace periodica {

enum class ErrorCode {
  // malformed input
  NotLatinSquare,
  NoIdentity,
  NoInverse,
  NotAssociative,
  NotSubgroup,
  NotNormal,
  NotComparable,
  NotAChain,
  NotPrime,
  AlphabetTooSmall,
  SingularMatrix,
  SyntaxError,
  UnknownGenerator,
  InvalidInput,
  // configured limits
  OrderLimitExceeded,
  LatticeLimitExceeded,
  IndexLimitExceeded,
  BudgetExceeded,
  CatalogIncomplete,
  // coset enumeration did not close
  CosetLimitExceeded,
  // broken internal invariant
  DivisibilityViolation,
};

enum class ErrorCategory { Input, Limit, Inconclusive, Internal };

std::string_view error_code_name(ErrorCode code);
ErrorCategory error_category(ErrorCode code);

class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(error_code_name(code)) + ": " + what),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }
  ErrorCategory category() const noexcept { return error_category(code_); }

 private:
  ErrorCode code_;
};

}  // namespace periodica
