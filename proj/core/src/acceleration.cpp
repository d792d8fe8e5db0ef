#include "mzv/acceleration.hpp"

#include <cmath>

namespace mzv::series {

BigReal chebyshev_acceleration(std::span<const BigReal> a) {
  const long n = static_cast<long>(a.size());
  if (n == 0) return BigReal(0L);
  // d = ((3 + sqrt 8)^n + (3 + sqrt 8)^-n) / 2
  BigReal d = pow(BigReal(3L) + sqrt(BigReal(8L)), n);
  d = (d + BigReal(1L) / d) / 2;
  BigReal b(-1L);
  BigReal c = -d;
  BigReal s(0L);
  for (long k = 0; k < n; ++k) {
    c = b - c;
    s += c * a[static_cast<std::size_t>(k)];
    // b *= (k + n)(k - n) / ((k + 1/2)(k + 1)), kept in integers
    b *= 2 * (k + n) * (k - n);
    b /= (2 * k + 1) * (k + 1);
  }
  return s / d;
}

int chebyshev_terms_for_bits(int bits) {
  return static_cast<int>(std::ceil((bits + 1) * std::log(2.0) / std::log(3.0 + std::sqrt(8.0)))) + 1;
}

}  // namespace mzv::series
