#include "mzv/stirling.hpp"

#include <algorithm>

#include "mzv/errors.hpp"
#include "mzv/index.hpp"
#include "mzv/series.hpp"

namespace mzv::series {

std::vector<std::vector<BigInt>> stirling1_rows(long n) {
  std::vector<std::vector<BigInt>> rows;
  if (n < 0) return rows;
  rows.push_back({BigInt(1)});
  for (long i = 1; i <= n; ++i) {
    const auto& prev = rows.back();
    std::vector<BigInt> row(static_cast<std::size_t>(i) + 1, BigInt(0));
    for (long k = 1; k <= i; ++k) {
      BigInt v = prev[static_cast<std::size_t>(k - 1)];
      if (k <= i - 1) v += (i - 1) * prev[static_cast<std::size_t>(k)];
      row[static_cast<std::size_t>(k)] = v;
    }
    rows.push_back(std::move(row));
  }
  return rows;
}

BigInt stirling1(long n, long k) {
  if (n < 0 || k < 0 || k > n) return 0;
  return stirling1_rows(n).back()[static_cast<std::size_t>(k)];
}

std::vector<StirlingCheck> stirling_identity_details(long n) {
  if (n < 1 || n > 100) throw DomainError("stirling identity check needs 1 <= n <= 100");
  const auto row = stirling1_rows(n).back();
  const Rational scale(factorial(static_cast<unsigned long>(n - 1)));
  std::vector<StirlingCheck> out;
  for (long k = 1; k <= n; ++k) {
    StirlingCheck c;
    c.n = n;
    c.k = k;
    c.stirling = row[static_cast<std::size_t>(k)];
    const auto entries = repeat(1, static_cast<int>(k - 1));
    const SignedIndex ones(IndexKind::strict, std::span<const int>(entries));
    c.harmonic_side = scale * partial_sum_exact(ones, n - 1);
    c.equal = (Rational(c.stirling) == c.harmonic_side);
    out.push_back(std::move(c));
  }
  return out;
}

bool check_stirling_identity(long n) {
  const auto details = stirling_identity_details(n);
  return std::all_of(details.begin(), details.end(), [](const StirlingCheck& c) { return c.equal; });
}

}  // namespace mzv::series
