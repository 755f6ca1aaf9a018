#include "btmf/error.hpp"

namespace btmf {

const char* to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NotPrimePower: return "NotPrimePower";
    case ErrorKind::RankTooSmall: return "RankTooSmall";
    case ErrorKind::DivisionByZero: return "DivisionByZero";
    case ErrorKind::NonIntegralPoint: return "NonIntegralPoint";
    case ErrorKind::InvalidPoint: return "InvalidPoint";
    case ErrorKind::ZeroVector: return "ZeroVector";
    case ErrorKind::SingularMatrix: return "SingularMatrix";
    case ErrorKind::IndexOutOfRange: return "IndexOutOfRange";
    case ErrorKind::KOutOfRange: return "KOutOfRange";
    case ErrorKind::RegimeViolation: return "RegimeViolation";
    case ErrorKind::DependentBasis: return "DependentBasis";
    case ErrorKind::HypothesisViolated: return "HypothesisViolated";
    case ErrorKind::UnsupportedRank: return "UnsupportedRank";
    case ErrorKind::GuardExceeded: return "GuardExceeded";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::NonIntegralTransform: return "NonIntegralTransform";
    case ErrorKind::NegativeInnerDegree: return "NegativeInnerDegree";
    case ErrorKind::DivisibilityFailure: return "DivisibilityFailure";
    case ErrorKind::ConsistencyFailure: return "ConsistencyFailure";
  }
  return "Unknown";
}

bool is_consistency_failure(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::NonIntegralTransform:
    case ErrorKind::NegativeInnerDegree:
    case ErrorKind::DivisibilityFailure:
    case ErrorKind::ConsistencyFailure:
      return true;
    default:
      return false;
  }
}

}  // namespace btmf
