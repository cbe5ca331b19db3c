#include "qac/tolerance.hpp"
#include "qac/error.hpp"

#include <cstdlib>
#include <string>

namespace qac {

std::string_view to_string(ErrorCode code) {
  switch (code) {
    case ErrorCode::NotHermitian: return "NotHermitian";
    case ErrorCode::NotPositive: return "NotPositive";
    case ErrorCode::TraceNotOne: return "TraceNotOne";
    case ErrorCode::NotNormalized: return "NotNormalized";
    case ErrorCode::NotUnitary: return "NotUnitary";
    case ErrorCode::DimensionMismatch: return "DimensionMismatch";
    case ErrorCode::DimensionTooSmall: return "DimensionTooSmall";
    case ErrorCode::NotPrimePower: return "NotPrimePower";
    case ErrorCode::NotMub: return "NotMub";
    case ErrorCode::CompletenessViolated: return "CompletenessViolated";
    case ErrorCode::InvalidArgument: return "InvalidArgument";
  }
  return "Unknown";
}

Error::Error(ErrorCode code, std::string detail, double residual)
    : std::runtime_error(std::string(to_string(code)) + ": " + detail),
      code_(code),
      residual_(residual) {}

double tolerance_scale() {
  static const double scale = [] {
    const char* env = std::getenv("QAC_TOLERANCE_SCALE");
    if (env == nullptr || *env == '\0') return 1.0;
    char* end = nullptr;
    const double v = std::strtod(env, &end);
    return (end != env && v > 0.0) ? v : 1.0;
  }();
  return scale;
}

}  // namespace qac
