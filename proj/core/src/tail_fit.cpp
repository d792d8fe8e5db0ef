#include "mzv/tail_fit.hpp"

#include <cmath>
#include <utility>

#include "mzv/errors.hpp"

namespace mzv::series {

int tail_fit_unknowns(int log_degree, int orders) { return 1 + orders * (log_degree + 1); }

std::vector<long> checkpoint_ladder(long cutoff, int count, long floor) {
  std::vector<long> out;
  double n = static_cast<double>(cutoff);
  while (static_cast<int>(out.size()) < count) {
    long even = static_cast<long>(n) & ~1L;
    if (!out.empty() && even >= out.back()) even = out.back() - 2;
    if (even < floor || even < 2) break;
    out.push_back(even);
    n /= 1.2;
  }
  return out;
}

std::vector<BigReal> solve_linear(std::vector<BigReal> a, std::vector<BigReal> b) {
  const std::size_t n = b.size();
  for (std::size_t col = 0; col < n; ++col) {
    std::size_t pivot = col;
    for (std::size_t r = col + 1; r < n; ++r) {
      if (abs(a[r * n + col]) > abs(a[pivot * n + col])) pivot = r;
    }
    if (a[pivot * n + col].is_zero()) throw ConvergenceError("singular tail-fit system");
    if (pivot != col) {
      for (std::size_t c = 0; c < n; ++c) std::swap(a[pivot * n + c], a[col * n + c]);
      std::swap(b[pivot], b[col]);
    }
    for (std::size_t r = col + 1; r < n; ++r) {
      const BigReal factor = a[r * n + col] / a[col * n + col];
      if (factor.is_zero()) continue;
      for (std::size_t c = col; c < n; ++c) a[r * n + c] -= factor * a[col * n + c];
      b[r] -= factor * b[col];
    }
  }
  std::vector<BigReal> x(n);
  for (std::size_t r = n; r-- > 0;) {
    BigReal acc = b[r];
    for (std::size_t c = r + 1; c < n; ++c) acc -= a[r * n + c] * x[c];
    x[r] = acc / a[r * n + r];
  }
  return x;
}

namespace {

BigReal fit_limit(std::span<const long> ns, std::span<const BigReal> sums, int log_degree, int orders) {
  const int unknowns = tail_fit_unknowns(log_degree, orders);
  const auto n = static_cast<std::size_t>(unknowns);
  // Columns are scaled to O(1) on the ladder: (ln N / ln N0)^b (N0 / N)^a.
  const BigReal n0(ns[0]);
  const BigReal log_n0 = log(n0);
  std::vector<BigReal> a(n * n);
  std::vector<BigReal> b(n);
  for (std::size_t r = 0; r < n; ++r) {
    const BigReal nr(ns[r]);
    const BigReal ratio = n0 / nr;
    const BigReal log_ratio = log(nr) / log_n0;
    std::size_t c = 0;
    a[r * n + c++] = BigReal(1L);
    BigReal inv_pow(1L);
    for (int order = 1; order <= orders; ++order) {
      inv_pow *= ratio;
      BigReal term = inv_pow;
      for (int deg = 0; deg <= log_degree; ++deg) {
        a[r * n + c++] = term;
        term *= log_ratio;
      }
    }
    b[r] = sums[r];
  }
  return solve_linear(std::move(a), std::move(b)).front();
}

}  // namespace

TailFit fit_log_polynomial(std::span<const long> ns, std::span<const BigReal> sums, int log_degree, int orders) {
  const int available = static_cast<int>(std::min(ns.size(), sums.size()));
  while (orders > 0 && tail_fit_unknowns(log_degree, orders) > available) --orders;
  TailFit out;
  out.orders = orders;
  if (orders == 0) {
    out.limit = sums[0];
    out.err = available > 1 ? abs(sums[0] - sums[1]) : abs(sums[0]);
    return out;
  }
  out.limit = fit_limit(ns, sums, log_degree, orders);
  const BigReal coarser = orders > 1 ? fit_limit(ns, sums, log_degree, orders - 1) : sums[0];
  out.err = abs(out.limit - coarser);
  return out;
}

}  // namespace mzv::series
