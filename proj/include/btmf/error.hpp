#pragma once

#include <stdexcept>
#include <string>

namespace btmf {

enum class ErrorKind {
  NotPrimePower,
  RankTooSmall,
  DivisionByZero,
  NonIntegralPoint,
  InvalidPoint,
  ZeroVector,
  SingularMatrix,
  IndexOutOfRange,
  KOutOfRange,
  RegimeViolation,
  DependentBasis,
  HypothesisViolated,
  UnsupportedRank,
  GuardExceeded,
  InvalidArgument,
  // consistency failures: these signal a bug, not bad input
  NonIntegralTransform,
  NegativeInnerDegree,
  DivisibilityFailure,
  ConsistencyFailure,
};

const char* to_string(ErrorKind kind);

// True for kinds that indicate an internal inconsistency rather than invalid input.
bool is_consistency_failure(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace btmf
