#pragma once

#include "mzv/big_real.hpp"

namespace mzv::series {

/// Closed finite-sum form of J(n,m;x) = int_0^x t^{n-1} ln^m(1-t) dt, built
/// from non-strict nested harmonic-type sums over 1 <= k_i <= ... <= k_1 <= n.
/// Requires n >= 1, m >= 0, -1 <= x < 1; DomainError otherwise.
BigReal J_closed(long n, int m, const BigReal& x);

/// J(n,m;-1) through star partial sums zeta*_n({1}_{i-1},-1) and
/// zeta*_n({1}_i). Requires n >= 1, m >= 1.
BigReal J_at_minus_one(long n, int m);

/// int_0^x t^n ln^m t dt as a finite sum; requires 0 < x <= 1, n, m >= 0.
BigReal powlog_closed(long n, int m, const BigReal& x);

}  // namespace mzv::series
