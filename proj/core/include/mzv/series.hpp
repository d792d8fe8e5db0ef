#pragma once

#include <span>

#include "mzv/big_real.hpp"
#include "mzv/eval_result.hpp"
#include "mzv/index.hpp"
#include "mzv/rational.hpp"

namespace mzv::series {

struct TruncationOptions {
  /// Outer cutoff N of the direct pass.
  long cutoff = 100000;
  /// Extra 1/N orders in the tail model beyond the minimum of two.
  int richardson_levels = 2;
  /// Terms fed to the alternating-series accelerator.
  int accel_terms = 64;
  /// Accelerated results whose error estimate exceeds this fall back to the
  /// direct pass.
  double accel_tolerance = 1e-30;
};

/// Largest n accepted by partial_sum_exact.
inline constexpr long kExactPartialSumCap = 10000;

/// zeta_n(s) or zeta*_n(s) per index.kind(), in exact arithmetic. Returns 1 for
/// the empty index and 0 for a strict index with n < depth.
/// Throws ResourceError when n > kExactPartialSumCap, DomainError when n < 0.
Rational partial_sum_exact(const SignedIndex& index, long n);

/// Same as partial_sum_exact at working precision, without the cap.
BigReal partial_sum(const SignedIndex& index, long n);

/// Nested sum truncated at opts.cutoff and extrapolated through a
/// log-polynomial tail model fitted on even checkpoints. Throws
/// DivergentIndexError for inadmissible indices.
EvalResult eval_direct(const SignedIndex& index, const TruncationOptions& opts = {});

/// Accelerates the outer alternation sum_n (-1)^n a_n. Falls back to
/// eval_direct when the acceleration error estimate exceeds
/// opts.accel_tolerance (inner barred entries break the positivity that the
/// accelerator relies on). Throws std::invalid_argument unless the leading
/// entry is barred, DivergentIndexError if inadmissible.
EvalResult eval_accelerated(const SignedIndex& index, const TruncationOptions& opts = {});

/// eval_accelerated for barred leading entries, eval_direct otherwise.
EvalResult eval_auto(const SignedIndex& index, const TruncationOptions& opts = {});

/// Li_{s_1,...,s_k}(1/2) = sum_{n_1 > ... > n_k > 0} 2^{-n_1} / prod n_j^{s_j}.
/// The error is a bound on the geometric tail. Throws DomainError for an
/// empty or non-positive exponent list.
EvalResult eval_mpl_half(std::span<const int> exponents);

/// zeta(k) for k >= 2 through the alternating eta series; DomainError otherwise.
EvalResult eval_zeta(int k);

/// ln 2 = sum_{n>=1} 1 / (n 2^n).
EvalResult eval_ln2();

}  // namespace mzv::series
