#include "mzv/big_real.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <stdexcept>
#include <utility>

namespace mzv {
namespace {

thread_local int g_working_precision = kDefaultPrecision;

constexpr mpfr_rnd_t kRnd = MPFR_RNDN;

mpfr_prec_t joint_precision(mpfr_srcptr a, mpfr_srcptr b) {
  return std::max(mpfr_get_prec(a), mpfr_get_prec(b));
}

}  // namespace

int working_precision() noexcept { return g_working_precision; }

PrecisionScope::PrecisionScope(int bits) : saved_(g_working_precision) {
  if (bits < kMinPrecision) {
    throw std::invalid_argument("precision must be at least 64 bits");
  }
  g_working_precision = bits;
}

PrecisionScope::~PrecisionScope() { g_working_precision = saved_; }

BigReal::BigReal(int bits, std::nullptr_t) {
  mpfr_init2(value_, bits);
  mpfr_set_zero(value_, 1);
}

BigReal::BigReal() : BigReal(g_working_precision, nullptr) {}

BigReal::BigReal(long value) : BigReal(g_working_precision, nullptr) {
  mpfr_set_si(value_, value, kRnd);
}

BigReal::BigReal(double value) : BigReal(g_working_precision, nullptr) {
  mpfr_set_d(value_, value, kRnd);
}

BigReal::BigReal(const mpz_class& value) : BigReal(g_working_precision, nullptr) {
  mpfr_set_z(value_, value.get_mpz_t(), kRnd);
}

BigReal::BigReal(const mpq_class& value) : BigReal(g_working_precision, nullptr) {
  mpfr_set_q(value_, value.get_mpq_t(), kRnd);
}

BigReal::BigReal(std::string_view text) : BigReal(g_working_precision, nullptr) {
  std::string buffer(text);
  char* end = nullptr;
  if (!buffer.empty()) mpfr_strtofr(value_, buffer.c_str(), &end, 10, kRnd);
  if (buffer.empty() || end != buffer.c_str() + buffer.size()) {
    // The delegated constructor already finished, so ~BigReal releases value_.
    throw std::invalid_argument("not a decimal number: '" + buffer + "'");
  }
}

BigReal BigReal::with_precision(int bits) { return BigReal(bits, nullptr); }

BigReal::BigReal(const BigReal& other) : BigReal(static_cast<int>(mpfr_get_prec(other.value_)), nullptr) {
  mpfr_set(value_, other.value_, kRnd);
}

BigReal::BigReal(BigReal&& other) noexcept : BigReal(static_cast<int>(mpfr_get_prec(other.value_)), nullptr) {
  mpfr_swap(value_, other.value_);
}

BigReal& BigReal::operator=(const BigReal& other) {
  if (this != &other) {
    mpfr_set_prec(value_, mpfr_get_prec(other.value_));
    mpfr_set(value_, other.value_, kRnd);
  }
  return *this;
}

BigReal& BigReal::operator=(BigReal&& other) noexcept {
  mpfr_swap(value_, other.value_);
  return *this;
}

BigReal::~BigReal() { mpfr_clear(value_); }

int BigReal::precision() const noexcept { return static_cast<int>(mpfr_get_prec(value_)); }

// In-place binary ops: widen the destination first so the result carries the
// larger precision.
#define MZV_BINARY_OP(op, fn)                                      \
  BigReal& BigReal::operator op(const BigReal& rhs) {               \
    const auto prec = joint_precision(value_, rhs.value_);          \
    if (prec > mpfr_get_prec(value_)) mpfr_prec_round(value_, prec, kRnd); \
    fn(value_, value_, rhs.value_, kRnd);                           \
    return *this;                                                   \
  }

MZV_BINARY_OP(+=, mpfr_add)
MZV_BINARY_OP(-=, mpfr_sub)
MZV_BINARY_OP(*=, mpfr_mul)
MZV_BINARY_OP(/=, mpfr_div)
#undef MZV_BINARY_OP

BigReal& BigReal::operator*=(long rhs) {
  mpfr_mul_si(value_, value_, rhs, kRnd);
  return *this;
}

BigReal& BigReal::operator/=(long rhs) {
  mpfr_div_si(value_, value_, rhs, kRnd);
  return *this;
}

BigReal BigReal::operator-() const {
  BigReal out(*this);
  mpfr_neg(out.value_, out.value_, kRnd);
  return out;
}

bool operator==(const BigReal& a, const BigReal& b) noexcept { return mpfr_equal_p(a.value_, b.value_) != 0; }

std::partial_ordering operator<=>(const BigReal& a, const BigReal& b) noexcept {
  if (mpfr_unordered_p(a.value_, b.value_)) return std::partial_ordering::unordered;
  const int c = mpfr_cmp(a.value_, b.value_);
  if (c < 0) return std::partial_ordering::less;
  if (c > 0) return std::partial_ordering::greater;
  return std::partial_ordering::equivalent;
}

bool BigReal::is_zero() const noexcept { return mpfr_zero_p(value_) != 0; }
bool BigReal::is_finite() const noexcept { return mpfr_number_p(value_) != 0; }
int BigReal::sign() const noexcept { return mpfr_sgn(value_); }
double BigReal::to_double() const noexcept { return mpfr_get_d(value_, kRnd); }

std::string BigReal::to_scientific(int digits) const {
  if (mpfr_nan_p(value_)) return "nan";
  if (mpfr_inf_p(value_)) return mpfr_sgn(value_) > 0 ? "inf" : "-inf";
  digits = std::max(digits, 1);
  char* raw = nullptr;
  if (mpfr_asprintf(&raw, "%.*Re", digits - 1, value_) < 0) throw std::bad_alloc();
  std::unique_ptr<char, decltype(&mpfr_free_str)> guard(raw, &mpfr_free_str);
  return std::string(raw);
}

std::string BigReal::to_exact_string() const {
  // bits * log10(2) + 2 digits always round-trips.
  const int digits = static_cast<int>(std::ceil(precision() * 0.30102999566398120)) + 2;
  return to_scientific(digits);
}

BigReal abs(BigReal x) {
  mpfr_abs(x.get(), x.get(), kRnd);
  return x;
}

#define MZV_UNARY_FN(name, fn)         \
  BigReal name(const BigReal& x) {     \
    BigReal out(x);                    \
    fn(out.get(), x.get(), kRnd);      \
    return out;                        \
  }

MZV_UNARY_FN(log, mpfr_log)
MZV_UNARY_FN(log1p, mpfr_log1p)
MZV_UNARY_FN(exp, mpfr_exp)
MZV_UNARY_FN(sqrt, mpfr_sqrt)
MZV_UNARY_FN(sinh, mpfr_sinh)
MZV_UNARY_FN(cosh, mpfr_cosh)
#undef MZV_UNARY_FN

BigReal pow(const BigReal& x, long n) {
  BigReal out(x);
  mpfr_pow_si(out.get(), x.get(), n, kRnd);
  return out;
}

BigReal ldexp(const BigReal& x, long e) {
  BigReal out(x);
  mpfr_mul_2si(out.get(), x.get(), e, kRnd);
  return out;
}

BigReal max(const BigReal& a, const BigReal& b) { return a < b ? b : a; }

BigReal pow2(long e) { return ldexp(BigReal(1L), e); }

BigReal mpfr_pi() {
  BigReal out;
  mpfr_const_pi(out.get(), kRnd);
  return out;
}

BigReal mpfr_log2() {
  BigReal out;
  mpfr_const_log2(out.get(), kRnd);
  return out;
}

BigReal mpfr_zeta(unsigned long k) {
  BigReal out;
  mpfr_zeta_ui(out.get(), k, kRnd);
  return out;
}

int trusted_digits(int bits) { return static_cast<int>(std::ceil(bits * 0.30102999566398120)) - 4; }

}  // namespace mzv
