#pragma once

#include <vector>

#include "mzv/rational.hpp"

namespace mzv::series {

/// Unsigned Stirling number of the first kind, from the additive recurrence
/// s(n,k) = s(n-1,k-1) + (n-1) s(n-1,k).
BigInt stirling1(long n, long k);

/// Rows 0..n of the triangle; row i has i + 1 entries.
std::vector<std::vector<BigInt>> stirling1_rows(long n);

struct StirlingCheck {
  long n = 0;
  long k = 0;
  BigInt stirling;
  /// (n-1)! * zeta_{n-1}({1}_{k-1}), computed exactly.
  Rational harmonic_side;
  bool equal = false;
};

/// Per-k comparison for row n. Throws DomainError unless 1 <= n <= 100.
std::vector<StirlingCheck> stirling_identity_details(long n);

/// True iff every entry of stirling_identity_details(n) is equal.
bool check_stirling_identity(long n);

}  // namespace mzv::series
