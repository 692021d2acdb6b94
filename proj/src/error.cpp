#include "steklov/error.hpp"

namespace steklov {

const char* to_string(ErrorCode code) noexcept {
  switch (code) {
    case ErrorCode::InvalidArgument: return "InvalidArgument";
    case ErrorCode::NonFiniteCurvature: return "NonFiniteCurvature";
    case ErrorCode::ToleranceUnachievable: return "ToleranceUnachievable";
    case ErrorCode::ZeroBeforeR: return "ZeroBeforeR";
    case ErrorCode::OriginSingularity: return "OriginSingularity";
    case ErrorCode::PsiVanished: return "PsiVanished";
    case ErrorCode::DegenerateTestFunction: return "DegenerateTestFunction";
    case ErrorCode::InvalidRadicand: return "InvalidRadicand";
    case ErrorCode::GeodesicEscape: return "GeodesicEscape";
    case ErrorCode::Config: return "Config";
    case ErrorCode::Io: return "Io";
  }
  return "Unknown";
}

}  // namespace steklov
