#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "mzv/eval_result.hpp"
#include "mzv/rational.hpp"

namespace mzv::symbolic {

enum class SymbolKind { ln2, zeta, li_half, mli_half };

/// ln 2, zeta(k), Li_k(1/2) or Li_{s1,...,sk}(1/2).
struct BasisSymbol {
  SymbolKind kind = SymbolKind::ln2;
  std::vector<int> args;

  static BasisSymbol ln2() { return {SymbolKind::ln2, {}}; }
  static BasisSymbol zeta(int k);
  static BasisSymbol li_half(int k);
  static BasisSymbol mli_half(std::vector<int> exponents);

  /// `ln2`, `z3`, `li4`, `mli(2,1)`.
  std::string to_string() const;

  friend auto operator<=>(const BasisSymbol&, const BasisSymbol&) = default;
  friend bool operator==(const BasisSymbol&, const BasisSymbol&) = default;
};

/// Symbol -> positive power.
using Monomial = std::map<BasisSymbol, int>;

/// Orders monomials so that larger symbols and higher degree come first;
/// the constant monomial sorts last.
struct MonomialOrder {
  bool operator()(const Monomial& a, const Monomial& b) const;
};

/// Rational linear combination of basis monomials. Zero coefficients are never
/// stored, so an empty term map is the value 0.
class ConstantExpr {
 public:
  using Terms = std::map<Monomial, Rational, MonomialOrder>;

  ConstantExpr() = default;
  explicit ConstantExpr(const Rational& constant);
  explicit ConstantExpr(const BasisSymbol& symbol, int power = 1);

  const Terms& terms() const noexcept { return terms_; }
  bool is_zero() const noexcept { return terms_.empty(); }
  /// Coefficient of `m`, zero if absent.
  Rational coefficient(const Monomial& m) const;

  void add_term(const Monomial& m, const Rational& c);

  ConstantExpr& operator+=(const ConstantExpr& other);
  ConstantExpr& operator-=(const ConstantExpr& other);
  ConstantExpr& operator*=(const ConstantExpr& other);
  ConstantExpr& operator*=(const Rational& r);

  friend ConstantExpr operator+(ConstantExpr a, const ConstantExpr& b) { return a += b; }
  friend ConstantExpr operator-(ConstantExpr a, const ConstantExpr& b) { return a -= b; }
  friend ConstantExpr operator*(ConstantExpr a, const ConstantExpr& b) { return a *= b; }
  friend ConstantExpr operator*(ConstantExpr a, const Rational& r) { return a *= r; }
  friend ConstantExpr operator*(const Rational& r, ConstantExpr a) { return a *= r; }
  friend ConstantExpr operator-(ConstantExpr a) { return a *= Rational(-1); }

  friend bool operator==(const ConstantExpr& a, const ConstantExpr& b) { return a.terms_ == b.terms_; }

  /// Canonical text, e.g. `1/8*z3 + 1/2*z2*ln2 - 1/6*ln2^3`; `0` when empty.
  std::string to_string() const;

 private:
  Terms terms_;
};

enum class ArithOp { add, mul, scale };

/// Single entry point for the three ring operations; `r` is used by scale only.
ConstantExpr expr_arith(const ConstantExpr& a, const ConstantExpr& b, ArithOp op, const Rational& r = Rational(1));

ConstantExpr pow(const ConstantExpr& e, int n);

/// Inverse of ConstantExpr::to_string; also accepts spaces anywhere and
/// repeated factors. Throws SyntaxError.
ConstantExpr parse_expr(std::string_view text);

/// Substitutes numeric values at the working precision. The error is
/// propagated to first order from each symbol's own error, plus rounding.
EvalResult expr_eval(const ConstantExpr& e);
EvalResult expr_eval(const ConstantExpr& e, int precision_bits);

/// Numeric value of one basis symbol, memoized per precision.
EvalResult symbol_value(const BasisSymbol& s);

}  // namespace mzv::symbolic
