#pragma once

#include "mzv/eval_result.hpp"
#include "mzv/quadrature.hpp"

namespace mzv::quadrature {

/// Default tolerance of check_lemma.
inline constexpr double kLemmaTolerance = 1e-8;

/// The closed-form or finite-sum counterpart of an integrand:
///   lemma2_1 -> J_closed, powlog -> the finite log-power sum,
///   lemma2_3 -> IntegralI, lemma2_4 (x = 1 only) -> IntegralJ,
///   thm3_3 -> (-1)^{m+k+1} (m+1)! k! Li_{k+2,{1}_m}(1/2).
/// Throws DomainError for lemma2_4 at x != 1.
EvalResult lemma_counterpart(const IntegrandSpec& spec);

/// Quadrature against lemma_counterpart; pass at max(combined err, 1e-8).
VerdictRecord check_lemma(const IntegrandSpec& spec);

}  // namespace mzv::quadrature
