#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace canonica {

enum class ErrorKind {
  // usage / parse
  ParseError,
  EmptyInput,
  InvalidArgument,
  BoundExceeded,
  // mathematical domain
  NonCoprimeGenerators,
  NotAGapSet,
  TrivialSemigroup,
  GenusTooSmall,
  Hyperelliptic,
  NotLinearlyNormal,
  NotNearlyGorenstein,
  Gorenstein,
  DegreeTooSmall,
  CombinatorialBlowup,
  InvalidModel,
  AlphaTooSmall,
  // a checked identity failed; always a bug or a falsified formula
  InvariantViolation,
};

std::string_view to_string(ErrorKind kind);

/// True for kinds that signal misuse of the interface rather than a
/// mathematical precondition. The CLI maps these to exit code 2.
bool is_usage_error(ErrorKind kind);

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace canonica
