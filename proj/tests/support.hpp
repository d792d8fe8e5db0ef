#pragma once

#include <gtest/gtest.h>

#include <functional>
#include <vector>

#include "mzv/big_real.hpp"
#include "mzv/rational.hpp"

namespace mzv::testing {

/// Nested sum over n >= n_1 > n_2 > ... (or >= for star) by plain recursion;
/// independent of the library's forward pass.
inline Rational brute_partial_sum(const std::vector<int>& s, bool star, long n, std::size_t from = 0) {
  if (from == s.size()) return Rational(1);
  Rational total(0);
  const long lower = 1;
  for (long k = lower; k <= n; ++k) {
    Rational term(1);
    const int e = s[from] < 0 ? -s[from] : s[from];
    mpz_class den;
    mpz_ui_pow_ui(den.get_mpz_t(), static_cast<unsigned long>(k), static_cast<unsigned long>(e));
    term = Rational(1) / Rational(den);
    if (s[from] < 0 && k % 2 != 0) term = -term;
    const long inner = star ? k : k - 1;
    total += term * brute_partial_sum(s, star, inner, from + 1);
  }
  return total;
}

/// Expect |a - b| <= tol.
inline ::testing::AssertionResult near(const BigReal& a, const BigReal& b, double tol) {
  const BigReal d = abs(a - b);
  if (d <= BigReal(tol)) return ::testing::AssertionSuccess();
  return ::testing::AssertionFailure() << a.to_scientific(30) << " vs " << b.to_scientific(30) << " differ by "
                                       << d.to_scientific(3) << " > " << tol;
}

}  // namespace mzv::testing
