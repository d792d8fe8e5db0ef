#pragma once

#include <functional>
#include <string>
#include <vector>

#include "mzv/big_real.hpp"
#include "mzv/eval_result.hpp"
#include "mzv/rational.hpp"

namespace mzv::quadrature {

/// Integrand on [a, b]. Besides the abscissa t it receives t - a and b - t,
/// both computed without cancellation, so that factors such as ln(1 - t)
/// stay accurate next to an endpoint.
using Integrand = std::function<BigReal(const BigReal& t, const BigReal& from_a, const BigReal& to_b)>;

inline constexpr int kLevelCap = 12;

struct QuadResult {
  EvalResult result;
  /// Estimate after each level, coarsest first.
  std::vector<BigReal> levels;
};

/// Tanh-sinh rule with step 2^-L for L = 0, 1, ...; stops once two successive
/// levels differ by less than 2^(24-P) (and at least four levels ran) or at
/// kLevelCap. err is the last inter-level difference. Throws ConvergenceError
/// when the cap is reached with err above 2^-24.
QuadResult integrate_with_history(const Integrand& f, const BigReal& a, const BigReal& b);
EvalResult integrate(const Integrand& f, const BigReal& a, const BigReal& b);

enum class IntegrandKind { lemma2_1, powlog, lemma2_3, lemma2_4, thm3_3 };

/// One of the lemma integrands:
///   lemma2_1(n,m,x)  int_0^x t^{n-1} ln^m(1-t) dt,  n >= 1, m >= 0, -1 <= x < 1
///   powlog(n,m,x)    int_0^x t^n ln^m t dt,         n, m >= 0, 0 < x <= 1
///   lemma2_3(m)      int_0^1 ln^m(1+t) ln(1-t) / (1+t) dt, m >= 0
///   lemma2_4(m,x)    int_0^x ln^m(1+t) / t dt,      m >= 1, 0 < x <= 1
///   thm3_3(m,k)      int_0^1 ln^k(x) ln^{m+1}(1-x/2) / x dx, m, k >= 0
struct IntegrandSpec {
  IntegrandKind kind = IntegrandKind::powlog;
  int n = 0;
  int m = 0;
  int k = 0;
  Rational x = Rational(1);

  static IntegrandSpec lemma2_1(int n, int m, Rational x);
  static IntegrandSpec powlog(int n, int m, Rational x);
  static IntegrandSpec lemma2_3(int m);
  static IntegrandSpec lemma2_4(int m, Rational x = Rational(1));
  static IntegrandSpec thm3_3(int m, int k);

  /// Throws DomainError when the parameters are outside the stated ranges.
  void validate() const;

  /// `lemma2_1(2,2,-1)`, `thm3_3(0,1)`, ...
  std::string to_string() const;
};

/// Parses an id plus its parameters, e.g. ("lemma2_1", {"2","2","-1/2"}).
/// Throws SyntaxError or DomainError.
IntegrandSpec parse_integrand(const std::string& id, const std::vector<std::string>& params);

QuadResult integrate_with_history(const IntegrandSpec& spec);
EvalResult integrate(const IntegrandSpec& spec);
EvalResult integrate(const IntegrandSpec& spec, int precision_bits);

}  // namespace mzv::quadrature
