#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace wigner {

enum class ErrorCode {
  NegativeJ,
  MOutOfRange,
  ParityMismatch,
  AngleOutOfRange,
  NegativeArgument,
  ArgumentOutOfRange,
  InvalidParameter,
  PrecisionExhausted,
  QuadratureNotConverged,
  DivisionByNearZero,
};

std::string_view to_string(ErrorCode code) noexcept;

// Domain and numerical failures raised by the library. The CLI maps every
// Error onto exit code 2.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

// Carries the best estimate reached before the panel budget ran out.
class QuadratureError : public Error {
 public:
  QuadratureError(const std::string& message, double estimate, double error_estimate);

  double estimate() const noexcept { return estimate_; }
  double error_estimate() const noexcept { return error_estimate_; }

 private:
  double estimate_;
  double error_estimate_;
};

}  // namespace wigner
