#pragma once

#include <stdexcept>
#include <string>

namespace solenoid {

enum class ErrorKind {
  InvalidModulus,
  ModulusMismatch,
  OutOfRange,
  NotInImage,
  NotPartialProduct,
  InvalidValue,
  Undecidable,
  NotInK,
  ContextMismatch,
  PartialCochain,
  BoundExhausted,
  Unsupported,
  NotRationalPeriodic,
  Overflow,
  Parse,
};

const char* kind_name(ErrorKind kind) noexcept;

class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what);
  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace solenoid
