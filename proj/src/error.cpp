#include "wigner/error.hpp"

namespace wigner {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NegativeJ: return "NegativeJ";
    case ErrorCode::MOutOfRange: return "MOutOfRange";
    case ErrorCode::ParityMismatch: return "ParityMismatch";
    case ErrorCode::AngleOutOfRange: return "AngleOutOfRange";
    case ErrorCode::NegativeArgument: return "NegativeArgument";
    case ErrorCode::ArgumentOutOfRange: return "ArgumentOutOfRange";
    case ErrorCode::InvalidParameter: return "InvalidParameter";
    case ErrorCode::PrecisionExhausted: return "PrecisionExhausted";
    case ErrorCode::QuadratureNotConverged: return "QuadratureNotConverged";
    case ErrorCode::DivisionByNearZero: return "DivisionByNearZero";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& message)
    : std::runtime_error(std::string(to_string(code)) + ": " + message), code_(code) {}

QuadratureError::QuadratureError(const std::string& message, double estimate,
                                 double error_estimate)
    : Error(ErrorCode::QuadratureNotConverged, message),
      estimate_(estimate),
      error_estimate_(error_estimate) {}

}  // namespace wigner
