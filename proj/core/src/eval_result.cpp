#include "mzv/eval_result.hpp"

namespace mzv {

std::string_view to_string(Method method) noexcept {
  switch (method) {
    case Method::direct: return "direct";
    case Method::accelerated: return "accelerated";
    case Method::geometric: return "geometric";
    case Method::quadrature: return "quadrature";
    case Method::symbolic: return "symbolic";
  }
  return "unknown";
}

void settle(VerdictRecord& record) {
  record.diff = abs(record.lhs - record.rhs);
  const BigReal slack = record.lhs_err + record.rhs_err;
  // Large error estimates never excuse a difference above 1e-4.
  record.pass = record.note.empty() && record.diff.is_finite() && record.diff <= max(record.tolerance, slack) &&
                record.diff <= BigReal(kHonestyBound);
}

}  // namespace mzv
