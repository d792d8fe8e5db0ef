#include "mzv/canonicalize.hpp"

#include <mutex>
#include <set>

#include "mzv/errors.hpp"

namespace mzv::symbolic {
namespace {

ConstantExpr sym(const BasisSymbol& s, int power = 1) { return ConstantExpr(s, power); }

}  // namespace

ConstantExpr li_half_rule(int k) {
  const auto ln2 = BasisSymbol::ln2();
  switch (k) {
    case 1:
      return sym(ln2);
    case 2:
      return make_rational(1, 2) * sym(BasisSymbol::zeta(2)) - make_rational(1, 2) * sym(ln2, 2);
    case 3:
      return make_rational(7, 8) * sym(BasisSymbol::zeta(3)) -
             make_rational(1, 2) * sym(BasisSymbol::zeta(2)) * sym(ln2) + make_rational(1, 6) * sym(ln2, 3);
    default:
      throw DomainError("no reduction rule for Li_" + std::to_string(k) + "(1/2)");
  }
}

void validate_li_rules() {
  static std::mutex mutex;
  static std::set<int> validated;
  const int bits = working_precision();
  {
    std::lock_guard lock(mutex);
    if (validated.count(bits)) return;
  }
  const BigReal tolerance = pow2(32 - bits);
  for (int k = 1; k <= 3; ++k) {
    const EvalResult lhs = symbol_value(BasisSymbol::li_half(k));
    const EvalResult rhs = expr_eval(li_half_rule(k));
    if (abs(lhs.value - rhs.value) > tolerance) {
      throw ValidationError("reduction rule for Li_" + std::to_string(k) + "(1/2) failed its numeric check");
    }
  }
  std::lock_guard lock(mutex);
  validated.insert(bits);
}

ConstantExpr canonicalize(const ConstantExpr& e, bool reduce_low_li) {
  if (reduce_low_li) validate_li_rules();
  ConstantExpr out;
  for (const auto& [m, c] : e.terms()) {
    ConstantExpr term(c);
    Monomial kept;
    for (const auto& [s, p] : m) {
      const bool low_li = s.kind == SymbolKind::li_half && (s.args[0] == 1 || (reduce_low_li && s.args[0] <= 3));
      if (low_li) {
        term *= pow(li_half_rule(s.args[0]), p);
      } else {
        kept[s] += p;
      }
    }
    ConstantExpr rest(Rational(1));
    for (const auto& [s, p] : kept) rest *= sym(s, p);
    out += term * rest;
  }
  return out;
}

}  // namespace mzv::symbolic
