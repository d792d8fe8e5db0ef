#include "mzv/nested_sums.hpp"

#include <algorithm>

namespace mzv::series {

template <class T>
NestedSums<T>::NestedSums(const SignedIndex& index) : star_(index.kind() == IndexKind::star) {
  for (const auto& e : index.entries()) {
    exponents_.push_back(e.magnitude);
    signs_.push_back(e.sign);
  }
  sums_.assign(exponents_.size() + 1, T(0L));
  sums_.back() = T(1L);
  const int max_exponent = exponents_.empty() ? 0 : *std::max_element(exponents_.begin(), exponents_.end());
  inverse_powers_.assign(static_cast<std::size_t>(max_exponent) + 1, T(1L));
  last_term_ = T(0L);
}

template <class T>
NestedSums<T>::NestedSums(const SignedIndex& index, T outer_base) : NestedSums(index) {
  outer_power_ = T(1L);
  outer_base_ = std::move(outer_base);
}

template <>
void NestedSums<BigReal>::advance() {
  ++n_;
  const std::size_t k = exponents_.size();
  if (k == 0) return;
  // 1/n^m for every exponent in use.
  mpfr_set_si(inverse_powers_[1].get(), 1, MPFR_RNDN);
  mpfr_div_si(inverse_powers_[1].get(), inverse_powers_[1].get(), n_, MPFR_RNDN);
  for (std::size_t m = 2; m < inverse_powers_.size(); ++m) {
    mpfr_mul(inverse_powers_[m].get(), inverse_powers_[m - 1].get(), inverse_powers_[1].get(), MPFR_RNDN);
  }
  if (outer_power_) mpfr_mul(outer_power_->get(), outer_power_->get(), outer_base_->get(), MPFR_RNDN);

  const auto update = [&](std::size_t j) {
    mpfr_ptr term = scratch_.get();
    mpfr_mul(term, inverse_powers_[static_cast<std::size_t>(exponents_[j])].get(), sums_[j + 1].get(), MPFR_RNDN);
    if (signs_[j] < 0 && (n_ & 1)) mpfr_neg(term, term, MPFR_RNDN);
    if (j == 0) {
      if (outer_power_) mpfr_mul(term, term, outer_power_->get(), MPFR_RNDN);
      mpfr_set(last_term_.get(), term, MPFR_RNDN);
    }
    mpfr_add(sums_[j].get(), sums_[j].get(), term, MPFR_RNDN);
  };
  // Strict sums read the inner suffix at n - 1, so update outside-in; star
  // sums read it at n, so update inside-out.
  if (star_) {
    for (std::size_t j = k; j-- > 0;) update(j);
  } else {
    for (std::size_t j = 0; j < k; ++j) update(j);
  }
}

template <>
void NestedSums<Rational>::advance() {
  ++n_;
  const std::size_t k = exponents_.size();
  if (k == 0) return;
  if (outer_power_) *outer_power_ *= *outer_base_;
  const auto update = [&](std::size_t j) {
    BigInt den = 1;
    mpz_pow_ui(den.get_mpz_t(), BigInt(n_).get_mpz_t(), static_cast<unsigned long>(exponents_[j]));
    const long sign = (signs_[j] < 0 && (n_ & 1)) ? -1 : 1;
    Rational term = Rational(BigInt(sign), den) * sums_[j + 1];
    if (j == 0) {
      if (outer_power_) term *= *outer_power_;
      last_term_ = term;
    }
    sums_[j] += term;
  };
  if (star_) {
    for (std::size_t j = k; j-- > 0;) update(j);
  } else {
    for (std::size_t j = 0; j < k; ++j) update(j);
  }
}

template class NestedSums<BigReal>;
template class NestedSums<Rational>;

}  // namespace mzv::series
