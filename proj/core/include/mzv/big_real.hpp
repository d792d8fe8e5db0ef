#pragma once

#include <mpfr.h>
#include <gmpxx.h>

#include <compare>
#include <string>
#include <string_view>

namespace mzv {

/// Default working precision in bits (about 57 decimal digits).
inline constexpr int kDefaultPrecision = 192;
inline constexpr int kMinPrecision = 64;

/// Working precision used when a BigReal is created without an explicit
/// precision. The setting is per thread.
int working_precision() noexcept;

/// Sets the calling thread's working precision for the lifetime of the scope.
class PrecisionScope {
 public:
  explicit PrecisionScope(int bits);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  int saved_;
};

/// Configurable-precision binary floating point number backed by MPFR.
/// Every operation rounds to nearest; the result of a binary operation carries
/// the larger of the operand precisions.
class BigReal {
 public:
  BigReal();
  BigReal(long value);  // NOLINT(google-explicit-constructor)
  BigReal(int value) : BigReal(static_cast<long>(value)) {}  // NOLINT
  explicit BigReal(double value);
  explicit BigReal(const mpz_class& value);
  explicit BigReal(const mpq_class& value);
  /// Parses a decimal or scientific literal; throws std::invalid_argument.
  explicit BigReal(std::string_view text);

  /// Zero with an explicit precision.
  static BigReal with_precision(int bits);

  BigReal(const BigReal& other);
  BigReal(BigReal&& other) noexcept;
  BigReal& operator=(const BigReal& other);
  BigReal& operator=(BigReal&& other) noexcept;
  ~BigReal();

  int precision() const noexcept;

  BigReal& operator+=(const BigReal& rhs);
  BigReal& operator-=(const BigReal& rhs);
  BigReal& operator*=(const BigReal& rhs);
  BigReal& operator/=(const BigReal& rhs);
  BigReal& operator*=(long rhs);
  BigReal& operator/=(long rhs);

  friend BigReal operator+(BigReal lhs, const BigReal& rhs) { return lhs += rhs; }
  friend BigReal operator-(BigReal lhs, const BigReal& rhs) { return lhs -= rhs; }
  friend BigReal operator*(BigReal lhs, const BigReal& rhs) { return lhs *= rhs; }
  friend BigReal operator/(BigReal lhs, const BigReal& rhs) { return lhs /= rhs; }
  friend BigReal operator*(BigReal lhs, long rhs) { return lhs *= rhs; }
  friend BigReal operator*(long lhs, BigReal rhs) { return rhs *= lhs; }
  friend BigReal operator/(BigReal lhs, long rhs) { return lhs /= rhs; }
  BigReal operator-() const;

  friend bool operator==(const BigReal& a, const BigReal& b) noexcept;
  friend std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) noexcept;

  bool is_zero() const noexcept;
  bool is_finite() const noexcept;
  int sign() const noexcept;
  double to_double() const noexcept;

  /// Scientific notation with `digits` significant digits, e.g. "1.2020569e+00".
  std::string to_scientific(int digits) const;
  /// Round-trippable text: enough digits that BigReal(text) restores the value
  /// at the same precision.
  std::string to_exact_string() const;

  mpfr_srcptr get() const noexcept { return value_; }
  mpfr_ptr get() noexcept { return value_; }

 private:
  explicit BigReal(int bits, std::nullptr_t);
  mpfr_t value_;
};

BigReal abs(BigReal x);
BigReal log(const BigReal& x);
BigReal log1p(const BigReal& x);
BigReal exp(const BigReal& x);
BigReal sqrt(const BigReal& x);
BigReal sinh(const BigReal& x);
BigReal cosh(const BigReal& x);
BigReal pow(const BigReal& x, long n);
/// x * 2^e, exact.
BigReal ldexp(const BigReal& x, long e);
BigReal max(const BigReal& a, const BigReal& b);

/// 2^e at working precision.
BigReal pow2(long e);

/// MPFR's built-in constants. These are used as independent references in
/// tests; library code derives its constants from series.
BigReal mpfr_pi();
BigReal mpfr_log2();
BigReal mpfr_zeta(unsigned long k);

/// Significant decimal digits that can be trusted at `bits` of precision:
/// ceil(bits * log10(2)) - 4.
int trusted_digits(int bits);

}  // namespace mzv
