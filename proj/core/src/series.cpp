#include "mzv/series.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "mzv/acceleration.hpp"
#include "mzv/errors.hpp"
#include "mzv/nested_sums.hpp"
#include "mzv/tail_fit.hpp"

namespace mzv::series {
namespace {

// Rounding floor for a pass of n steps over values of size `scale`.
BigReal rounding_floor(long n, const BigReal& scale) {
  return ldexp(max(abs(scale), BigReal(1L)) * BigReal(n), 2 - working_precision());
}

// Highest power of ln N in the asymptotic expansion of the partial sums: one
// per unbarred entry equal to 1.
int tail_log_degree(const SignedIndex& index) {
  return static_cast<int>(std::count_if(index.entries().begin(), index.entries().end(),
                                        [](const IndexEntry& e) { return e.magnitude == 1 && e.sign > 0; }));
}

}  // namespace

Rational partial_sum_exact(const SignedIndex& index, long n) {
  if (n < 0) throw DomainError("partial sum bound must be nonnegative");
  if (n > kExactPartialSumCap) throw ResourceError("exact partial sums are capped at n = 10000");
  NestedSums<Rational> sums(index);
  for (long i = 0; i < n; ++i) sums.advance();
  return sums.value();
}

BigReal partial_sum(const SignedIndex& index, long n) {
  if (n < 0) throw DomainError("partial sum bound must be nonnegative");
  NestedSums<BigReal> sums(index);
  for (long i = 0; i < n; ++i) sums.advance();
  return sums.value();
}

EvalResult eval_direct(const SignedIndex& index, const TruncationOptions& opts) {
  if (index.empty()) return {BigReal(1L), BigReal(0L), Method::direct, 0};
  if (!index.admissible()) throw DivergentIndexError(index.to_string());
  if (opts.cutoff < 1) throw DomainError("cutoff must be at least 1");

  const int log_degree = tail_log_degree(index);
  const int orders = std::max(opts.richardson_levels, 0) + 2;
  const long floor = std::min<long>(opts.cutoff, std::max<long>(16, 4L * index.depth()));
  const std::vector<long> ladder = checkpoint_ladder(opts.cutoff, tail_fit_unknowns(log_degree, orders), floor);

  NestedSums<BigReal> sums(index);
  if (ladder.size() < 2) {
    const long n = opts.cutoff;
    BigReal half;
    for (long i = 1; i <= n; ++i) {
      sums.advance();
      if (i == n / 2) half = sums.value();
    }
    BigReal err = abs(sums.value() - half) + rounding_floor(n, sums.value());
    return {sums.value(), std::move(err), Method::direct, n};
  }

  std::vector<BigReal> at(ladder.size());
  auto next = ladder.size();  // ladder is decreasing; fill from the back
  while (next > 0) {
    sums.advance();
    if (sums.n() == ladder[next - 1]) at[--next] = sums.value();
  }
  TailFit fit = fit_log_polynomial(ladder, at, log_degree, orders);
  fit.err += rounding_floor(ladder.front(), fit.limit);
  return {std::move(fit.limit), std::move(fit.err), Method::direct, ladder.front()};
}

EvalResult eval_accelerated(const SignedIndex& index, const TruncationOptions& opts) {
  if (!index.admissible()) throw DivergentIndexError(index.to_string());
  if (index.leading_sign() != -1) {
    throw std::invalid_argument("accelerated evaluation needs a barred leading entry: " + index.to_string());
  }
  const int terms = std::max(opts.accel_terms, 8);

  // a_k = |outer term at n = k + 1| with the inner sign kept, so that the
  // value is -sum_k (-1)^k a_k.
  NestedSums<BigReal> sums(index);
  std::vector<BigReal> a;
  a.reserve(static_cast<std::size_t>(terms));
  for (int k = 0; k < terms; ++k) {
    sums.advance();
    a.push_back((sums.n() & 1) ? -sums.last_term() : sums.last_term());
  }
  BigReal value = -chebyshev_acceleration(a);
  const BigReal coarse = -chebyshev_acceleration(std::span<const BigReal>(a).first(a.size() - 4));
  BigReal err = abs(value - coarse);

  if (err > BigReal(opts.accel_tolerance)) return eval_direct(index, opts);
  err += rounding_floor(terms, value);
  return {std::move(value), std::move(err), Method::accelerated, terms};
}

EvalResult eval_auto(const SignedIndex& index, const TruncationOptions& opts) {
  if (!index.empty() && index.leading_sign() < 0) return eval_accelerated(index, opts);
  return eval_direct(index, opts);
}

EvalResult eval_mpl_half(std::span<const int> exponents) {
  if (exponents.empty()) throw DomainError("multiple polylogarithm needs at least one exponent");
  for (const int s : exponents) {
    if (s < 1) throw DomainError("multiple polylogarithm exponents must be positive");
  }
  const SignedIndex index(IndexKind::strict, exponents);
  NestedSums<BigReal> sums(index, BigReal(1L) / 2);
  const BigReal threshold = pow2(8 - working_precision());
  const long depth = index.depth();
  while (true) {
    sums.advance();
    if (sums.n() <= depth) continue;
    // Successive term ratios tend to 1/2 from above; (1 + depth / n) covers
    // the excess for the remaining tail.
    BigReal bound = 2 * abs(sums.last_term()) * (BigReal(sums.n() + depth) / sums.n());
    if (bound < threshold) {
      bound += rounding_floor(sums.n(), sums.value());
      return {sums.value(), std::move(bound), Method::geometric, sums.n()};
    }
  }
}

EvalResult eval_zeta(int k) {
  if (k < 2) throw DomainError("zeta(k) needs k >= 2");
  const int bits = working_precision();
  BigReal value = BigReal::with_precision(bits);
  int terms = 0;
  {
    PrecisionScope guard(bits + 32);
    terms = chebyshev_terms_for_bits(bits + 8);
    std::vector<BigReal> a;
    a.reserve(static_cast<std::size_t>(terms));
    for (int j = 1; j <= terms; ++j) a.push_back(BigReal(1L) / pow(BigReal(static_cast<long>(j)), k));
    const BigReal eta = chebyshev_acceleration(a);
    const BigReal zeta = eta / (BigReal(1L) - pow2(1 - k));
    mpfr_set(value.get(), zeta.get(), MPFR_RNDN);
  }
  BigReal err = ldexp(abs(value), 4 - bits);
  return {std::move(value), std::move(err), Method::accelerated, terms};
}

EvalResult eval_ln2() {
  const int one[] = {1};
  return eval_mpl_half(one);
}

}  // namespace mzv::series
