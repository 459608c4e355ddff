#include "solenoid/error.hpp"

namespace solenoid {

const char* kind_name(ErrorKind kind) noexcept {
  switch (kind) {
    case ErrorKind::InvalidModulus: return "invalid-modulus";
    case ErrorKind::ModulusMismatch: return "modulus-mismatch";
    case ErrorKind::OutOfRange: return "out-of-range";
    case ErrorKind::NotInImage: return "not-in-image";
    case ErrorKind::NotPartialProduct: return "not-a-partial-product";
    case ErrorKind::InvalidValue: return "invalid-value";
    case ErrorKind::Undecidable: return "undecidable";
    case ErrorKind::NotInK: return "not-in-K";
    case ErrorKind::ContextMismatch: return "context-mismatch";
    case ErrorKind::PartialCochain: return "partial-cochain";
    case ErrorKind::BoundExhausted: return "bound-exhausted";
    case ErrorKind::Unsupported: return "unsupported";
    case ErrorKind::NotRationalPeriodic: return "not-rational-periodic";
    case ErrorKind::Overflow: return "overflow";
    case ErrorKind::Parse: return "parse";
  }
  return "unknown";
}

Error::Error(ErrorKind kind, const std::string& what)
    : std::runtime_error(std::string(kind_name(kind)) + ": " + what), kind_(kind) {}

}  // namespace solenoid
