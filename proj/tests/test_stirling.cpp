#include <gtest/gtest.h>

#include "mzv/errors.hpp"
#include "mzv/stirling.hpp"

namespace mzv::series {
namespace {

TEST(Stirling, KnownValues) {
  EXPECT_EQ(stirling1(5, 3), 35);
  EXPECT_EQ(stirling1(4, 2), 11);
  EXPECT_EQ(stirling1(6, 1), 120);
  EXPECT_EQ(stirling1(7, 7), 1);
  EXPECT_EQ(stirling1(3, 0), 0);
}

TEST(Stirling, RowsSumToFactorial) {
  const auto rows = stirling1_rows(12);
  BigInt fact = 1;
  for (long n = 1; n <= 12; ++n) {
    fact *= n;
    BigInt sum = 0;
    for (const auto& v : rows[static_cast<std::size_t>(n)]) sum += v;
    EXPECT_EQ(sum, fact) << n;
  }
}

TEST(Stirling, HarmonicIdentityHoldsExactly) {
  for (long n = 1; n <= 30; ++n) {
    const auto rows = stirling_identity_details(n);
    ASSERT_EQ(rows.size(), static_cast<std::size_t>(n));
    for (const auto& r : rows) {
      EXPECT_TRUE(r.equal) << n << "," << r.k;
      EXPECT_EQ(Rational(r.stirling), r.harmonic_side);
    }
  }
  EXPECT_TRUE(check_stirling_identity(40));
}

TEST(Stirling, Domain) {
  EXPECT_THROW(stirling_identity_details(0), DomainError);
  EXPECT_THROW(stirling_identity_details(101), DomainError);
}

}  // namespace
}  // namespace mzv::series
