#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace spinent {

enum class ErrorCode {
  NotHermitian,
  NoConvergence,
  DimensionMismatch,
  NonFinite,
  ZeroRepulsion,
  NonpositiveTemperature,
  Overflow,
  InvalidState,
  NoRoot,
  NeverEntangled,
  InvalidAxis,
};

std::string_view to_string(ErrorCode code) noexcept;

// Every failure raised by the library carries one of the codes above; the
// message is prefixed with the code name so diagnostics stay greppable.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& detail);

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace spinent
