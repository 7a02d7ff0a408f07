#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace harmonic {

enum class ErrorCode {
  DivisionByZero,
  PreconditionViolated,
  InvalidParity,
  InternalError,
  ShapeError,
  NotInvertible,
  NonPositive,
  InvalidTriple,
  DegenerateSign,
  ParityError,
  CoprimalityError,
  UnsupportedBridge,
  ZeroTerm,
  MalformedCode,
  InvalidInput,
  NotAKnot,
};

std::string_view to_string(ErrorCode code) noexcept;

/// Every failure raised by the library carries one of the codes above.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what)
      : std::runtime_error(std::string(to_string(code)) + ": " + what), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// True for codes that mean the caller handed us bad input, as opposed to
  /// a broken internal invariant.
  bool is_input_error() const noexcept;

 private:
  ErrorCode code_;
};

}  // namespace harmonic
