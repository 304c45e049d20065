#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace lieext {

enum class ErrorCode {
  DimensionMismatch,
  IndexOutOfRange,
  Singular,
  NonRationalSpectrum,
  NotUnity,
  NotNilpotent,
  Unclassifiable,
  NotCommonEigenvector,
  DegenerateCase,
  NotACasimir,
  Inconsistent,
  InvalidLiePreset,
  UnknownPreset,
  Parse,
};

std::string_view to_string(ErrorCode code);

/// Mathematical and input errors raised by the library. The code is stable
/// and is what the CLI reports; the message carries diagnostics.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& message)
      : std::runtime_error(message), code_(code) {}

  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace lieext
