#pragma once

#include <optional>
#include <vector>

#include "mzv/big_real.hpp"
#include "mzv/index.hpp"
#include "mzv/rational.hpp"

namespace mzv::series {

/// Single forward pass over n = 1, 2, ... maintaining the partial sums of
/// every suffix (s_j, ..., s_k) of an index at the current outer bound n.
/// Cost per step is O(depth). Instantiated for BigReal and Rational.
///
/// For the strict kind suffix(j) is zeta_n(s_j, ..., s_k); for the star kind
/// it is zeta*_n(s_j, ..., s_k). suffix(depth) is always 1.
template <class T>
class NestedSums {
 public:
  explicit NestedSums(const SignedIndex& index);
  /// Multiplies the outermost term by base^{n_1}, turning the sum into a
  /// multiple polylogarithm at `base`.
  NestedSums(const SignedIndex& index, T outer_base);

  /// Moves the outer bound from n to n + 1.
  void advance();

  long n() const noexcept { return n_; }
  int depth() const noexcept { return static_cast<int>(exponents_.size()); }
  const T& value() const noexcept { return sums_.front(); }
  const T& suffix(int j) const { return sums_.at(static_cast<std::size_t>(j)); }
  /// The signed outermost term added by the last advance().
  const T& last_term() const noexcept { return last_term_; }

 private:
  std::vector<int> exponents_;
  std::vector<int> signs_;
  bool star_ = false;
  long n_ = 0;
  std::vector<T> sums_;
  std::vector<T> inverse_powers_;
  T last_term_;
  T scratch_;
  std::optional<T> outer_base_;
  std::optional<T> outer_power_;
};

template <>
void NestedSums<BigReal>::advance();
template <>
void NestedSums<Rational>::advance();

extern template class NestedSums<BigReal>;
extern template class NestedSums<Rational>;

}  // namespace mzv::series
