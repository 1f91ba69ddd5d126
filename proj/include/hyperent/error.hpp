#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace hyperent {

enum class ErrorCode {
  DuplicateOccupancy,
  AmplitudeOverflow,
  InexactAmplitude,
  PatternArity,
  UnsupportedAngle,
  UnwiredMode,
  DepthExceeded,
  DoubleTagging,
  InvalidSpec,
  InvalidQuery,
  OracleBound,
};

std::string_view to_string(ErrorCode code);

/// Every failure raised by the library carries one of the codes above so that
/// callers (CLI, Python bindings) can map it without parsing messages.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(std::string(to_string(code)) + ": " + message),
        code_(code) {}

  ErrorCode code() const noexcept { return code_; }

  /// Errors caused by bad user input rather than by a failed computation.
  bool is_input_error() const noexcept {
    return code_ == ErrorCode::InvalidSpec ||
           code_ == ErrorCode::InvalidQuery ||
           code_ == ErrorCode::OracleBound ||
           code_ == ErrorCode::UnsupportedAngle ||
           code_ == ErrorCode::PatternArity;
  }

 private:
  ErrorCode code_;
};

}  // namespace hyperent
