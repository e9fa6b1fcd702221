#include "spinent/error.hpp"

namespace spinent {

std::string_view to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NoConvergence: return "NoConvergence";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::NonFinite: return "NonFinite";
    case ErrorCode::ZeroRepulsion: return "ZeroRepulsion";
    case ErrorCode::NonpositiveTemperature: return "NonpositiveTemperature";
    case ErrorCode::Overflow: return "Overflow";
    case ErrorCode::InvalidState: return "InvalidState";
    case ErrorCode::NoRoot: return "NoRoot";
    case ErrorCode::NeverEntangled: return "NeverEntangled";
    case ErrorCode::InvalidAxis: return "InvalidAxis";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, const std::string& detail)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail), code_(code) {}

}  // namespace spinent
