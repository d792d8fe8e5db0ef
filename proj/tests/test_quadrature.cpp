#include "mzv/errors.hpp"
#include "mzv/lemma_sums.hpp"
#include "mzv/lemmas.hpp"
#include "mzv/quadrature.hpp"
#include "support.hpp"

namespace mzv::quadrature {
namespace {

using mzv::testing::near;

TEST(TanhSinh, PolynomialAndEndpointSingularities) {
  const auto square = [](const BigReal& t, const BigReal&, const BigReal&) { return t * t; };
  EXPECT_TRUE(near(integrate(square, BigReal(0L), BigReal(1L)).value, BigReal(make_rational(1, 3)), 1e-55));
  const auto logt = [](const BigReal&, const BigReal& t, const BigReal&) { return log(t); };
  EXPECT_TRUE(near(integrate(logt, BigReal(0L), BigReal(1L)).value, BigReal(-1L), 1e-50));
  const auto inv_sqrt = [](const BigReal&, const BigReal& t, const BigReal&) { return BigReal(1L) / sqrt(t); };
  const EvalResult r = integrate(inv_sqrt, BigReal(0L), BigReal(1L));
  EXPECT_TRUE(near(r.value, BigReal(2L), 1e-35));
  // The cut-off tail near t = 0 is part of the reported error.
  EXPECT_LE(abs(r.value - BigReal(2L)), r.err);
}

TEST(TanhSinh, LevelDifferencesShrink) {
  const auto h = integrate_with_history(IntegrandSpec::lemma2_3(2));
  ASSERT_GE(h.levels.size(), 5u);
  std::vector<BigReal> gaps;
  for (std::size_t i = 1; i < h.levels.size(); ++i) gaps.push_back(abs(h.levels[i] - h.levels[i - 1]));
  for (std::size_t i = 2; i < gaps.size(); ++i) EXPECT_LE(gaps[i], gaps[i - 1]) << "level " << i + 1;
  EXPECT_LT(gaps.back(), pow2(24 - working_precision()));
}

TEST(TanhSinh, DiscontinuityExhaustsLevels) {
  const auto step = [](const BigReal& t, const BigReal&, const BigReal&) {
    return t < BigReal(make_rational(1, 3)) ? BigReal(0L) : BigReal(1L);
  };
  EXPECT_THROW(integrate(step, BigReal(0L), BigReal(1L)), ConvergenceError);
}

TEST(Integrands, PowLogMatchesGammaFormula) {
  for (int n = 0; n <= 4; ++n) {
    for (int m = 0; m <= 4; ++m) {
      // int_0^1 t^n ln^m t dt = (-1)^m m! / (n+1)^(m+1)
      BigReal expected = BigReal(factorial(static_cast<unsigned long>(m))) / pow(BigReal(n + 1), m + 1);
      if (m % 2) expected = -expected;
      EXPECT_TRUE(near(integrate(IntegrandSpec::powlog(n, m, Rational(1))).value, expected, 1e-50));
      EXPECT_TRUE(near(series::powlog_closed(n, m, BigReal(1L)), expected, 1e-55));
    }
  }
}

TEST(Integrands, FiniteSumFormsAgreeWithQuadrature) {
  for (const Rational x : {make_rational(1, 4), make_rational(-1, 2), Rational(-1)}) {
    for (int n = 1; n <= 3; ++n) {
      for (int m = 0; m <= 3; ++m) {
        const BigReal closed = series::J_closed(n, m, BigReal(x));
        EXPECT_TRUE(near(integrate(IntegrandSpec::lemma2_1(n, m, x)).value, closed, 1e-45)) << n << m << to_string(x);
      }
    }
  }
  for (int n = 1; n <= 5; ++n) {
    for (int m = 1; m <= 4; ++m) {
      EXPECT_TRUE(near(series::J_at_minus_one(n, m), series::J_closed(n, m, BigReal(-1L)), 1e-50));
    }
  }
}

TEST(Integrands, ParsingAndValidation) {
  EXPECT_EQ(parse_integrand("lemma2_1", {"2", "2", "-1/2"}).to_string(), "lemma2_1(2,2,-1/2)");
  EXPECT_EQ(parse_integrand("lemma2_4", {"3"}).to_string(), "lemma2_4(3,1)");
  EXPECT_EQ(parse_integrand("thm3_3", {"0", "1"}).to_string(), "thm3_3(0,1)");
  EXPECT_THROW(parse_integrand("nosuch", {}), SyntaxError);
  EXPECT_THROW(parse_integrand("lemma2_3", {"x"}), SyntaxError);
  EXPECT_THROW(parse_integrand("lemma2_3", {"1", "2"}), SyntaxError);
  EXPECT_THROW(parse_integrand("lemma2_1", {"0", "1", "1/2"}), DomainError);
  EXPECT_THROW(parse_integrand("lemma2_1", {"1", "1", "1"}), DomainError);
  EXPECT_THROW(parse_integrand("powlog", {"1", "1", "0"}), DomainError);
}

TEST(Lemmas, CounterpartsAgree) {
  for (const auto& spec : {IntegrandSpec::lemma2_1(3, 2, make_rational(-1, 2)), IntegrandSpec::powlog(2, 3, make_rational(1, 3)),
                           IntegrandSpec::lemma2_3(3), IntegrandSpec::lemma2_4(4), IntegrandSpec::thm3_3(1, 2)}) {
    const VerdictRecord r = check_lemma(spec);
    EXPECT_TRUE(r.pass) << spec.to_string() << " diff " << r.diff.to_scientific(3);
    EXPECT_EQ(r.suite, "lemmas");
  }
  EXPECT_THROW(lemma_counterpart(IntegrandSpec::lemma2_4(2, make_rational(1, 2))), DomainError);
}

}  // namespace
}  // namespace mzv::quadrature
