#pragma once

#include <stdexcept>
#include <string>

namespace steklov {

enum class ErrorCode {
  InvalidArgument,
  NonFiniteCurvature,
  ToleranceUnachievable,
  ZeroBeforeR,
  OriginSingularity,
  PsiVanished,
  DegenerateTestFunction,
  InvalidRadicand,
  GeodesicEscape,
  Config,
  Io,
};

const char* to_string(ErrorCode code) noexcept;

/// Exception type thrown by every operation in the library. The C API maps
/// `code()` one-to-one onto `stk_status`.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, const std::string& what) : std::runtime_error(what), code_(code) {}
  ErrorCode code() const noexcept { return code_; }

 private:
  ErrorCode code_;
};

}  // namespace steklov
