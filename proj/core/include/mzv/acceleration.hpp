#pragma once

#include <span>

#include "mzv/big_real.hpp"

namespace mzv::series {

/// Estimates sum_{k>=0} (-1)^k a_k from the first a.size() terms using the
/// shifted Chebyshev-polynomial weights.
/// When a_k are moments of a positive measure on [0,1] the relative error is
/// at most 2 / (3 + sqrt 8)^n, n = a.size().
BigReal chebyshev_acceleration(std::span<const BigReal> a);

/// Number of terms for which 2 / (3 + sqrt 8)^n <= 2^-bits.
int chebyshev_terms_for_bits(int bits);

}  // namespace mzv::series
