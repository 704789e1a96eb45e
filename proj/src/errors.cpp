#include "canonica/errors.hpp"

namespace canonica {

std::string_view to_string(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::EmptyInput: return "EmptyInput";
    case ErrorKind::InvalidArgument: return "InvalidArgument";
    case ErrorKind::BoundExceeded: return "BoundExceeded";
    case ErrorKind::NonCoprimeGenerators: return "NonCoprimeGenerators";
    case ErrorKind::NotAGapSet: return "NotAGapSet";
    case ErrorKind::TrivialSemigroup: return "TrivialSemigroup";
    case ErrorKind::GenusTooSmall: return "GenusTooSmall";
    case ErrorKind::Hyperelliptic: return "Hyperelliptic";
    case ErrorKind::NotLinearlyNormal: return "NotLinearlyNormal";
    case ErrorKind::NotNearlyGorenstein: return "NotNearlyGorenstein";
    case ErrorKind::Gorenstein: return "Gorenstein";
    case ErrorKind::DegreeTooSmall: return "DegreeTooSmall";
    case ErrorKind::CombinatorialBlowup: return "CombinatorialBlowup";
    case ErrorKind::InvalidModel: return "InvalidModel";
    case ErrorKind::AlphaTooSmall: return "AlphaTooSmall";
    case ErrorKind::InvariantViolation: return "InvariantViolation";
  }
  return "Unknown";
}

bool is_usage_error(ErrorKind kind) {
  switch (kind) {
    case ErrorKind::ParseError:
    case ErrorKind::EmptyInput:
    case ErrorKind::InvalidArgument:
    case ErrorKind::BoundExceeded:
    case ErrorKind::NonCoprimeGenerators:
    case ErrorKind::NotAGapSet:
      return true;
    default:
      return false;
  }
}

}  // namespace canonica
