#include "mzv/lemma_sums.hpp"

#include <vector>

#include "mzv/errors.hpp"
#include "mzv/index.hpp"
#include "mzv/rational.hpp"
#include "mzv/series.hpp"

namespace mzv::series {
namespace {

BigReal from_int(const BigInt& v) { return BigReal(v); }

// sum_{1 <= k_i <= ... <= k_1 <= n} f(k_i) / (k_1 ... k_i) for every depth
// i = 1..depth at once; f is given on 1..n.
std::vector<BigReal> weakly_decreasing_sums(long n, int depth, const std::vector<BigReal>& f) {
  std::vector<BigReal> out(static_cast<std::size_t>(depth) + 1, BigReal(0L));
  if (depth == 0) return out;
  // level[k] = sum over chains whose outermost element is k.
  std::vector<BigReal> level(static_cast<std::size_t>(n) + 1, BigReal(0L));
  for (long k = 1; k <= n; ++k) level[static_cast<std::size_t>(k)] = f[static_cast<std::size_t>(k)] / k;
  for (int i = 1; i <= depth; ++i) {
    if (i > 1) {
      BigReal running(0L);
      for (long k = 1; k <= n; ++k) {
        running += level[static_cast<std::size_t>(k)];
        level[static_cast<std::size_t>(k)] = running / k;
      }
    }
    BigReal total(0L);
    for (long k = 1; k <= n; ++k) total += level[static_cast<std::size_t>(k)];
    out[static_cast<std::size_t>(i)] = std::move(total);
  }
  return out;
}

}  // namespace

BigReal J_closed(long n, int m, const BigReal& x) {
  if (n < 1 || m < 0) throw DomainError("J(n,m;x) needs n >= 1 and m >= 0");
  if (x < BigReal(-1L) || x >= BigReal(1L)) throw DomainError("J(n,m;x) needs -1 <= x < 1");

  const BigReal xn = pow(x, n);
  if (m == 0) return xn / n;

  const BigReal l = log1p(-x);
  std::vector<BigReal> ones(static_cast<std::size_t>(n) + 1, BigReal(1L));
  std::vector<BigReal> shifted(static_cast<std::size_t>(n) + 1, BigReal(0L));
  {
    BigReal p(1L);
    for (long k = 1; k <= n; ++k) {
      p *= x;
      shifted[static_cast<std::size_t>(k)] = p - BigReal(1L);
    }
  }
  const auto plain = weakly_decreasing_sums(n, m, ones);
  const auto with_x = weakly_decreasing_sums(n, m, shifted);

  BigReal acc = (xn - BigReal(1L)) * pow(l, m);
  BigReal head = from_int(factorial(static_cast<unsigned long>(m))) * plain[static_cast<std::size_t>(m)];
  acc += (m & 1) ? -head : head;
  for (int i = 1; i <= m; ++i) {
    BigReal term = from_int(factorial(static_cast<unsigned long>(i)) *
                            binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(i))) *
                   pow(l, m - i) * with_x[static_cast<std::size_t>(i)];
    acc += ((i - 1) & 1) ? term : -term;
  }
  return acc / n;
}

BigReal J_at_minus_one(long n, int m) {
  if (n < 1 || m < 1) throw DomainError("J(n,m;-1) star form needs n >= 1 and m >= 1");
  const BigReal l = mpfr_log2();
  const auto star = [n](std::vector<int> entries) {
    return partial_sum(SignedIndex(IndexKind::star, std::span<const int>(entries)), n);
  };

  BigReal acc = pow(l, m) * BigReal((n & 1) ? -2L : 0L);
  BigReal head = from_int(factorial(static_cast<unsigned long>(m))) * star(concat({repeat(1, m - 1), {-1}}));
  acc += (m & 1) ? -head : head;
  for (int i = 1; i <= m - 1; ++i) {
    const BigReal diff = star(concat({repeat(1, i - 1), {-1}})) - star(repeat(1, i));
    BigReal term = from_int(factorial(static_cast<unsigned long>(i)) *
                            binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(i))) *
                   pow(l, m - i) * diff;
    acc += ((i - 1) & 1) ? term : -term;
  }
  return acc / n;
}

BigReal powlog_closed(long n, int m, const BigReal& x) {
  if (n < 0 || m < 0) throw DomainError("powlog needs n >= 0 and m >= 0");
  if (x <= BigReal(0L) || x > BigReal(1L)) throw DomainError("powlog needs 0 < x <= 1");
  const BigReal lx = log(x);
  const BigReal n1(n + 1);
  const BigReal xn1 = pow(x, n + 1);
  BigReal acc(0L);
  for (int l = 0; l <= m; ++l) {
    BigReal term = from_int(factorial(static_cast<unsigned long>(l)) *
                            binomial(static_cast<unsigned long>(m), static_cast<unsigned long>(l))) *
                   xn1 * pow(lx, m - l) / pow(n1, l + 1);
    acc += (l & 1) ? -term : term;
  }
  return acc;
}

}  // namespace mzv::series
