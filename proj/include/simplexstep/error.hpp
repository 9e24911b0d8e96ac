#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace simplexstep {

enum class ErrorKind {
  EmptyInput,
  NonFiniteInput,
  NonPositiveSum,
  DimensionMismatch,
  OutOfRange,
  NegativeStep,
  Overflow,
  IdenticalInputs,
  IndexOutOfRange,
  InvalidConfig,
  ParseError,
};

std::string_view to_string(ErrorKind kind) noexcept;

/// Raised by every operation in the library when a precondition fails.
class Error : public std::runtime_error {
 public:
  Error(ErrorKind kind, const std::string& what)
      : std::runtime_error(std::string(to_string(kind)) + ": " + what), kind_(kind) {}

  ErrorKind kind() const noexcept { return kind_; }

 private:
  ErrorKind kind_;
};

}  // namespace simplexstep
