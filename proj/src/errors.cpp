#include "skewcodes/errors.hpp"

namespace skewcodes {

const char* to_string(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::ParseError: return "ParseError";
    case ErrorKind::NotPrime: return "NotPrime";
    case ErrorKind::EvenCharacteristic: return "EvenCharacteristic";
    case ErrorKind::ReducibleModulus: return "ReducibleModulus";
    case ErrorKind::DegreeMismatch: return "DegreeMismatch";
    case ErrorKind::InvalidAutomorphism: return "InvalidAutomorphism";
    case ErrorKind::ZeroInverse: return "ZeroInverse";
    case ErrorKind::NonUnitLeadingCoeff: return "NonUnitLeadingCoeff";
    case ErrorKind::ZeroDivisor: return "ZeroDivisor";
    case ErrorKind::ContextMismatch: return "ContextMismatch";
    case ErrorKind::LengthMismatch: return "LengthMismatch";
    case ErrorKind::DegreeTooLarge: return "DegreeTooLarge";
    case ErrorKind::NotMonic: return "NotMonic";
    case ErrorKind::NotRightDivisor: return "NotRightDivisor";
    case ErrorKind::GcdConditionViolated: return "GcdConditionViolated";
    case ErrorKind::CapExceeded: return "CapExceeded";
  }
  return "Error";
}

}  // namespace skewcodes
