#include "mzv/lemmas.hpp"

#include <chrono>

#include "mzv/closed_form.hpp"
#include "mzv/errors.hpp"
#include "mzv/index.hpp"
#include "mzv/lemma_sums.hpp"
#include "mzv/series.hpp"

namespace mzv::quadrature {
namespace {

EvalResult finite_sum(BigReal value) {
  BigReal err = ldexp(abs(value) + 1L, 16 - working_precision());
  return {std::move(value), std::move(err), Method::symbolic, 0};
}

}  // namespace

EvalResult lemma_counterpart(const IntegrandSpec& spec) {
  spec.validate();
  switch (spec.kind) {
    case IntegrandKind::lemma2_1:
      return finite_sum(series::J_closed(spec.n, spec.m, BigReal(spec.x)));
    case IntegrandKind::powlog:
      return finite_sum(series::powlog_closed(spec.n, spec.m, BigReal(spec.x)));
    case IntegrandKind::lemma2_3:
      return symbolic::expr_eval(symbolic::closed_form(symbolic::Family::integral_i, {spec.m}));
    case IntegrandKind::lemma2_4:
      if (spec.x != 1) throw DomainError(spec.to_string() + ": closed form is only available at x = 1");
      return symbolic::expr_eval(symbolic::closed_form(symbolic::Family::integral_j, {spec.m}));
    case IntegrandKind::thm3_3: {
      const auto exps = concat({{spec.k + 2}, repeat(1, spec.m)});
      EvalResult li = series::eval_mpl_half(exps);
      const BigReal scale(BigInt(factorial(static_cast<unsigned long>(spec.m + 1)) *
                                 factorial(static_cast<unsigned long>(spec.k))));
      const bool negative = (spec.m + spec.k + 1) % 2 != 0;
      li.value *= negative ? -scale : scale;
      li.err *= scale;
      return li;
    }
  }
  throw DomainError("unknown integrand");
}

VerdictRecord check_lemma(const IntegrandSpec& spec) {
  const auto start = std::chrono::steady_clock::now();
  VerdictRecord r;
  r.id = spec.to_string();
  r.suite = "lemmas";
  r.tolerance = BigReal(kLemmaTolerance);
  const EvalResult quad = integrate(spec);
  const EvalResult closed = lemma_counterpart(spec);
  r.lhs = quad.value;
  r.lhs_err = quad.err;
  r.rhs = closed.value;
  r.rhs_err = closed.err;
  settle(r);
  r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
  return r;
}

}  // namespace mzv::quadrature
