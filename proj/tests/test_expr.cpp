#include <random>
#include <thread>

#include "mzv/canonicalize.hpp"
#include "mzv/errors.hpp"
#include "mzv/expr.hpp"
#include "support.hpp"

namespace mzv::symbolic {
namespace {

using mzv::testing::near;

ConstantExpr sym(const BasisSymbol& s, int p = 1) { return ConstantExpr(s, p); }
ConstantExpr q(long a, long b = 1) { return ConstantExpr(make_rational(a, b)); }

// Li_k(1/2) by its defining series, summed far past working precision.
BigReal li_half_oracle(int k) {
  BigReal sum(0L);
  BigReal p(1L);
  for (long n = 1; n <= 260; ++n) {
    p /= 2L;
    sum += p / pow(BigReal(n), k);
  }
  return sum;
}

TEST(Expr, CanonicalText) {
  const ConstantExpr e = q(1, 8) * sym(BasisSymbol::zeta(3)) + q(1, 2) * sym(BasisSymbol::zeta(2)) * sym(BasisSymbol::ln2()) -
                         q(1, 6) * sym(BasisSymbol::ln2(), 3);
  EXPECT_EQ(e.to_string(), "1/8*z3 + 1/2*z2*ln2 - 1/6*ln2^3");
  EXPECT_EQ(ConstantExpr().to_string(), "0");
  EXPECT_EQ((q(-3) + sym(BasisSymbol::li_half(4))).to_string(), "li4 - 3");
  EXPECT_EQ(sym(BasisSymbol::mli_half({2, 1})).to_string(), "mli(2,1)");
}

TEST(Expr, ParseRoundTrip) {
  for (const char* text : {"1/8*z3 + 1/2*z2*ln2 - 1/6*ln2^3", "3*li4 - 3*z4 + 7/8*z3*ln2 - 3/2*z2*ln2^2 + 1/8*ln2^4",
                           "-z2", "mli(2,1,1)*ln2 + 5", "0"}) {
    EXPECT_EQ(parse_expr(text).to_string(), text);
  }
  EXPECT_EQ(parse_expr(" z2 * z2 + ln2*ln2 ").to_string(), "z2^2 + ln2^2");
  EXPECT_THROW(parse_expr("z2 +"), SyntaxError);
  EXPECT_THROW(parse_expr("q7"), SyntaxError);
}

TEST(Expr, RingOperations) {
  const ConstantExpr a = sym(BasisSymbol::zeta(2)) + sym(BasisSymbol::ln2());
  const ConstantExpr b = sym(BasisSymbol::zeta(2)) - sym(BasisSymbol::ln2());
  EXPECT_EQ((a * b).to_string(), "z2^2 - ln2^2");
  EXPECT_TRUE((a - a).is_zero());
  EXPECT_EQ(pow(a, 2), a * a);
  EXPECT_EQ(expr_arith(a, b, ArithOp::add), a + b);
  EXPECT_EQ(expr_arith(a, a, ArithOp::scale, make_rational(2, 3)), make_rational(2, 3) * a);
  EXPECT_EQ(a.coefficient({{BasisSymbol::ln2(), 1}}), Rational(1));
}

TEST(Expr, EvaluationAgainstIndependentConstants) {
  const BigReal pi = mpfr_pi();
  EXPECT_TRUE(near(expr_eval(sym(BasisSymbol::zeta(2))).value, pi * pi / 6L, 1e-55));
  EXPECT_TRUE(near(expr_eval(sym(BasisSymbol::ln2(), 2)).value, mpfr_log2() * mpfr_log2(), 1e-55));
  EXPECT_TRUE(near(expr_eval(sym(BasisSymbol::zeta(5))).value, mpfr_zeta(5), 1e-55));
  EXPECT_TRUE(near(expr_eval(sym(BasisSymbol::li_half(4))).value, li_half_oracle(4), 1e-55));
  const EvalResult r = expr_eval(q(1, 3));
  EXPECT_TRUE(near(r.value, BigReal(make_rational(1, 3)), 1e-56));
}

TEST(Canonicalize, LowOrderPolylogRules) {
  EXPECT_EQ(canonicalize(sym(BasisSymbol::li_half(1))).to_string(), "ln2");
  EXPECT_EQ(canonicalize(sym(BasisSymbol::li_half(2))).to_string(), "1/2*z2 - 1/2*ln2^2");
  EXPECT_EQ(canonicalize(sym(BasisSymbol::li_half(3))).to_string(), "7/8*z3 - 1/2*z2*ln2 + 1/6*ln2^3");
  EXPECT_EQ(canonicalize(sym(BasisSymbol::li_half(2)), false).to_string(), "li2");
  EXPECT_EQ(canonicalize(sym(BasisSymbol::li_half(4))).to_string(), "li4");
  EXPECT_THROW(li_half_rule(4), DomainError);
  EXPECT_NO_THROW(validate_li_rules());
}

ConstantExpr random_expr(std::mt19937& rng) {
  const std::vector<BasisSymbol> basis{BasisSymbol::ln2(),        BasisSymbol::zeta(2),     BasisSymbol::zeta(3),
                                       BasisSymbol::li_half(1),   BasisSymbol::li_half(2),  BasisSymbol::li_half(3),
                                       BasisSymbol::li_half(4),   BasisSymbol::mli_half({2, 1})};
  std::uniform_int_distribution<int> terms(1, 4);
  std::uniform_int_distribution<int> factors(0, 3);
  std::uniform_int_distribution<std::size_t> pick(0, basis.size() - 1);
  std::uniform_int_distribution<long> num(-9, 9);
  std::uniform_int_distribution<long> den(1, 8);
  ConstantExpr e;
  for (int t = terms(rng); t > 0; --t) {
    ConstantExpr m = q(num(rng), den(rng));
    for (int f = factors(rng); f > 0; --f) m *= sym(basis[pick(rng)]);
    e += m;
  }
  return e;
}

TEST(Canonicalize, PreservesValueOnRandomExpressions) {
  std::mt19937 rng(20240607);
  for (int i = 0; i < 100; ++i) {
    const ConstantExpr e = random_expr(rng);
    const ConstantExpr c = canonicalize(e);
    EXPECT_TRUE(near(expr_eval(c).value, expr_eval(e).value, 1e-45)) << e.to_string() << " -> " << c.to_string();
    EXPECT_EQ(canonicalize(c), c) << "not idempotent: " << c.to_string();
    for (const auto& [mono, coef] : c.terms()) {
      for (const auto& [s, p] : mono) {
        EXPECT_FALSE(s.kind == SymbolKind::li_half && s.args.front() <= 3) << c.to_string();
      }
    }
  }
}

TEST(Canonicalize, CommutesWithMultiplication) {
  std::mt19937 rng(7);
  for (int i = 0; i < 40; ++i) {
    const ConstantExpr a = random_expr(rng);
    const ConstantExpr b = random_expr(rng);
    EXPECT_EQ(canonicalize(a * b), canonicalize(canonicalize(a) * canonicalize(b)));
    EXPECT_EQ(canonicalize(a + b), canonicalize(a) + canonicalize(b));
    EXPECT_TRUE(near(expr_eval(a * b).value, expr_eval(a).value * expr_eval(b).value, 1e-40));
  }
}

TEST(Expr, SymbolValuesAreThreadSafe) {
  std::vector<std::string> seen(4);
  std::vector<std::thread> pool;
  for (std::size_t i = 0; i < seen.size(); ++i) {
    pool.emplace_back([&, i] { seen[i] = symbol_value(BasisSymbol::li_half(5)).value.to_exact_string(); });
  }
  for (auto& t : pool) t.join();
  for (const auto& s : seen) EXPECT_EQ(s, seen.front());
}

}  // namespace
}  // namespace mzv::symbolic
