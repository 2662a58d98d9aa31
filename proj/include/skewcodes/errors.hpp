#pragma once

#include <stdexcept>
#include <string>

namespace skewcodes {

// Failure categories shared across the library.  The split between invalid
// input, violated preconditions and exceeded enumeration caps is part of the
// public contract: the CLI maps the categories to process exit codes.
enum class ErrorKind {
  // invalid input (CLI exit code 2)
  ParseError,
  NotPrime,
  EvenCharacteristic,
  ReducibleModulus,
  DegreeMismatch,
  InvalidAutomorphism,
  // violated precondition (CLI exit code 3)
  ZeroInverse,
  NonUnitLeadingCoeff,
  ZeroDivisor,
  ContextMismatch,
  LengthMismatch,
  DegreeTooLarge,
  NotMonic,
  NotRightDivisor,
  GcdConditionViolated,
  // enumeration budget exhausted (CLI exit code 4)
  CapExceeded,
};

const char* to_string(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& message)
      : std::runtime_error(std::string(to_string(kind)) + ": " + message),
        kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace skewcodes
