#pragma once

#include <stdexcept>
#include <string>
#include <string_view>

namespace qac {

enum class ErrorCode {
  NotHermitian,
  NotPositive,
  TraceNotOne,
  NotNormalized,
  NotUnitary,
  DimensionMismatch,
  DimensionTooSmall,
  NotPrimePower,
  NotMub,
  CompletenessViolated,
  InvalidArgument,
};

std::string_view to_string(ErrorCode code);

// Every failure carries the violated invariant and, where one exists, the
// measured residual that tripped it.
class Error : public std::runtime_error {
 public:
  Error(ErrorCode code, std::string detail, double residual = 0.0);

  ErrorCode code() const noexcept { return code_; }
  double residual() const noexcept { return residual_; }

 private:
  ErrorCode code_;
  double residual_;
};

}  // namespace qac
