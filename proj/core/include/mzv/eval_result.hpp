#pragma once

#include <string>
#include <string_view>

#include "mzv/big_real.hpp"

namespace mzv {

enum class Method { direct, accelerated, geometric, quadrature, symbolic };

std::string_view to_string(Method method) noexcept;

/// A numeric value with a nonnegative absolute error estimate. For
/// Method::geometric the error is a bound; for the other methods it is an
/// estimate.
struct EvalResult {
  BigReal value;
  BigReal err;
  Method method = Method::direct;
  long terms_used = 0;
};

/// Outcome of comparing two independently computed values.
struct VerdictRecord {
  std::string id;
  std::string suite;
  BigReal lhs;
  BigReal lhs_err;
  BigReal rhs;
  BigReal rhs_err;
  BigReal diff;
  BigReal tolerance;
  bool pass = false;
  double ms = 0.0;
  /// Empty unless evaluation raised; then holds the error message.
  std::string note;
};

/// No comparison passes with a larger difference, whatever the error estimates.
inline constexpr double kHonestyBound = 1e-4;

/// Fills diff and pass: pass iff |lhs - rhs| <= max(tolerance, lhs_err + rhs_err)
/// and |lhs - rhs| <= kHonestyBound, with no note recorded.
void settle(VerdictRecord& record);

}  // namespace mzv
