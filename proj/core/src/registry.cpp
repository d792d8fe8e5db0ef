#include "mzv/registry.hpp"

#include <algorithm>
#include <array>
#include <set>

#include "mzv/errors.hpp"
#include "mzv/lemmas.hpp"
#include "mzv/nested_sums.hpp"
#include "mzv/stirling.hpp"

namespace mzv::verify {
namespace {

constexpr std::array<std::string_view, 15> kSuites{
    "euler",  "eq2_8",  "thm2_4", "thm2_5", "lemmas", "stirling", "genfun",    "thm3_2",
    "thm3_3", "cor3_4", "thm3_5", "thm4_1", "cor4_2", "thm4_3",   "eq4_11_14",
};

using symbolic::Family;

// ---------------------------------------------------------------------------
// Values with an absolute error, combined to first order.

struct Num {
  BigReal v;
  BigReal e;
};

Num num(const EvalResult& r) { return {r.value, r.err}; }
Num constant(const Rational& q) { return {BigReal(q), BigReal(0L)}; }

Num operator+(const Num& a, const Num& b) { return {a.v + b.v, a.e + b.e}; }
Num operator-(const Num& a, const Num& b) { return {a.v - b.v, a.e + b.e}; }
Num operator*(const Num& a, const Num& b) { return {a.v * b.v, abs(a.v) * b.e + abs(b.v) * a.e + a.e * b.e}; }
Num operator*(const Rational& q, const Num& a) {
  const BigReal c(q);
  return {c * a.v, abs(c) * a.e};
}
Num npow(const Num& a, int p) {
  Num out = constant(Rational(1));
  for (int i = 0; i < p; ++i) out = out * a;
  return out;
}

EvalResult result(const Num& n, Method method) {
  BigReal err = n.e + ldexp(abs(n.v) + 1L, 8 - working_precision());
  return {n.v, std::move(err), method, 0};
}

Rational sgn(int n) { return Rational(n % 2 == 0 ? 1 : -1); }
Rational fact(int n) { return Rational(factorial(static_cast<unsigned long>(n))); }
Rational inv_fact(int n) { return Rational(1) / fact(n); }

// ---------------------------------------------------------------------------
// Index and plan helpers.

using Ints = std::vector<int>;

Ints ones(int count) { return repeat(1, count); }
Ints cat(std::initializer_list<Ints> parts) { return concat(parts); }

SignedIndex strict(const Ints& e) { return SignedIndex(IndexKind::strict, std::span<const int>(e)); }
SignedIndex star(const Ints& e) { return SignedIndex(IndexKind::star, std::span<const int>(e)); }

PlanStep numeric_step(const SignedIndex& index) {
  return {index.leading_sign() < 0 ? Method::accelerated : Method::direct, index.to_string()};
}

std::string li_text(const Ints& exps) {
  std::string out = "li(";
  for (std::size_t i = 0; i < exps.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(exps[i]);
  }
  return out + ")";
}

PlanStep geometric_step(const Ints& exps) { return {Method::geometric, li_text(exps)}; }

std::string family_call(Family f, const Ints& params) {
  std::string out(symbolic::family_info(f).name);
  out += '(';
  for (std::size_t i = 0; i < params.size(); ++i) {
    if (i) out += ',';
    out += std::to_string(params[i]);
  }
  return out + ')';
}

PlanStep symbolic_step(Family f, const Ints& params) { return {Method::symbolic, family_call(f, params)}; }

const PlanStep kLn2Step{Method::geometric, "ln2"};

Side numeric_side(const SignedIndex& index, Rational scale = Rational(1)) {
  return {{numeric_step(index)}, [index, scale](EvalContext& ctx) {
            EvalResult r = ctx.series(index);
            return result(scale * num(r), r.method);
          }};
}

Side geometric_side(const Ints& exps, Rational scale = Rational(1)) {
  return {{geometric_step(exps)}, [exps, scale](EvalContext& ctx) {
            return result(scale * num(ctx.mpl_half(exps)), Method::geometric);
          }};
}

Side symbolic_side(Family f, const Ints& params) {
  return {{symbolic_step(f, params)}, [f, params](EvalContext& ctx) { return ctx.closed(f, params); }};
}

std::string tag(std::initializer_list<std::pair<const char*, int>> parts) {
  std::string out;
  for (const auto& [name, v] : parts) out += name + std::to_string(v);
  return out;
}

IdentityCase make_case(std::string suite, std::string id, std::map<std::string, int> params, Side lhs, Side rhs,
                       double tolerance) {
  IdentityCase c;
  c.id = suite + "/" + id;
  c.suite = std::move(suite);
  c.params = std::move(params);
  c.lhs = std::move(lhs);
  c.rhs = std::move(rhs);
  c.tolerance = tolerance;
  return c;
}

// ---------------------------------------------------------------------------
// Suites.

void add_euler(std::vector<IdentityCase>& out) {
  for (int k = 2; k <= 8; ++k) {
    out.push_back(make_case("euler", tag({{"k", k}}), {{"k", k}}, numeric_side(star({k, 1})),
                            symbolic_side(Family::euler_star, {k}), 1e-10));
  }
}

void add_eq2_8(std::vector<IdentityCase>& out) {
  for (int m = 0; m <= 6; ++m) {
    out.push_back(make_case("eq2_8", tag({{"m", m}}), {{"m", m}}, numeric_side(star(cat({{-1}, ones(m)}))),
                            geometric_side({m + 1}, Rational(-1)), 1e-10));
  }
}

void add_thm2_4_5(std::vector<IdentityCase>& out) {
  for (int m = 0; m <= 4; ++m) {
    out.push_back(make_case("thm2_4", tag({{"m", m}}), {{"m", m}}, numeric_side(star(cat({{-1}, ones(m), {-1}}))),
                            symbolic_side(Family::star_bar1_ones_bar1, {m}), 1e-10));
  }
  for (int m = 0; m <= 4; ++m) {
    out.push_back(make_case("thm2_5", tag({{"m", m}}), {{"m", m}}, numeric_side(star(cat({{2}, ones(m), {-1}}))),
                            symbolic_side(Family::star2_ones_bar1, {m}), 1e-10));
  }
}

IdentityCase lemma_case(const std::string& id, const quadrature::IntegrandSpec& spec,
                        std::map<std::string, int> params) {
  IdentityCase c;
  c.id = "lemmas/" + id;
  c.suite = "lemmas";
  c.params = std::move(params);
  c.tolerance = quadrature::kLemmaTolerance;
  Method counterpart = Method::symbolic;
  std::string object = "closed:" + spec.to_string();
  if (spec.kind == quadrature::IntegrandKind::thm3_3) {
    counterpart = Method::geometric;
    object = li_text(concat({{spec.k + 2}, repeat(1, spec.m)}));
  }
  c.lhs.plan = {{Method::quadrature, spec.to_string()}};
  c.rhs.plan = {{counterpart, object}};
  c.custom = [spec](EvalContext&, double tolerance) {
    VerdictRecord r = quadrature::check_lemma(spec);
    r.tolerance = BigReal(tolerance);
    settle(r);
    return r;
  };
  return c;
}

void add_lemmas(std::vector<IdentityCase>& out) {
  using quadrature::IntegrandSpec;
  const std::array<Rational, 4> xs{make_rational(1, 4), make_rational(1, 2), make_rational(-1, 2), Rational(-1)};
  for (int n = 1; n <= 5; ++n) {
    for (int m = 0; m <= 4; ++m) {
      for (const Rational& x : xs) {
        const auto spec = IntegrandSpec::lemma2_1(n, m, x);
        out.push_back(lemma_case(spec.to_string(), spec, {{"n", n}, {"m", m}}));
      }
    }
  }
  const std::array<Rational, 2> bxs{make_rational(1, 3), Rational(1)};
  for (int n = 0; n <= 4; ++n) {
    for (int m = 0; m <= 4; ++m) {
      for (const Rational& x : bxs) {
        const auto spec = IntegrandSpec::powlog(n, m, x);
        out.push_back(lemma_case(spec.to_string(), spec, {{"n", n}, {"m", m}}));
      }
    }
  }
  for (int m = 0; m <= 5; ++m) {
    const auto spec = IntegrandSpec::lemma2_3(m);
    out.push_back(lemma_case(spec.to_string(), spec, {{"m", m}}));
  }
  for (int m = 1; m <= 5; ++m) {
    const auto spec = IntegrandSpec::lemma2_4(m);
    out.push_back(lemma_case(spec.to_string(), spec, {{"m", m}}));
  }
  for (int m = 0; m <= 2; ++m) {
    for (int k = 0; k <= 2; ++k) {
      const auto spec = IntegrandSpec::thm3_3(m, k);
      out.push_back(lemma_case("integral/" + tag({{"m", m}, {"k", k}}), spec, {{"m", m}, {"k", k}}));
    }
  }
  // zeta(-1,{1}_m,-1,{1}_k) = (-1)^k / ((m+1)! k!) * integral.
  for (int m = 0; m <= 2; ++m) {
    for (int k = 0; k <= 2; ++k) {
      const auto spec = IntegrandSpec::thm3_3(m, k);
      const Rational scale = sgn(k) / (fact(m + 1) * fact(k));
      Side rhs{{{Method::quadrature, spec.to_string()}},
               [spec, scale](EvalContext& ctx) { return result(scale * num(ctx.quad(spec)), Method::quadrature); }};
      out.push_back(make_case("lemmas", "bar_ones_bar/" + tag({{"m", m}, {"k", k}}), {{"m", m}, {"k", k}},
                              numeric_side(strict(cat({{-1}, ones(m), {-1}, ones(k)}))), std::move(rhs),
                              quadrature::kLemmaTolerance));
    }
  }
}

void add_stirling(std::vector<IdentityCase>& out) {
  for (int n = 1; n <= 30; ++n) {
    IdentityCase c;
    c.id = "stirling/" + tag({{"n", n}});
    c.suite = "stirling";
    c.params = {{"n", n}};
    c.tolerance = 0.0;
    c.lhs.plan = {{Method::direct, "stirling1(" + std::to_string(n) + ",*)"}};
    c.rhs.plan = {{Method::symbolic, "harmonic_exact(" + std::to_string(n) + ",*)"}};
    c.custom = [n](EvalContext&, double) {
      VerdictRecord r;
      BigInt lhs = 0;
      Rational rhs = 0;
      Rational gap = 0;
      bool all_equal = true;
      for (const auto& row : series::stirling_identity_details(n)) {
        lhs += row.stirling;
        rhs += row.harmonic_side;
        const Rational d = Rational(row.stirling) - row.harmonic_side;
        gap += d < 0 ? Rational(-d) : d;
        all_equal = all_equal && row.equal;
      }
      r.lhs = BigReal(lhs);
      r.rhs = BigReal(rhs);
      r.lhs_err = BigReal(0L);
      r.rhs_err = BigReal(0L);
      r.tolerance = BigReal(0L);
      r.diff = BigReal(gap);
      r.pass = all_equal && gap == 0;
      return r;
    };
    out.push_back(std::move(c));
  }
}

// Truncated power series sum_{n=1}^{terms} coeff(n) x^n with a tail bound
// built from the last term and the ratio x.
constexpr int kGenfunTerms = 200;

EvalResult power_series(const std::function<BigReal(long, const BigReal&)>& term, const BigReal& x, int terms) {
  BigReal sum(0L);
  BigReal last(0L);
  for (long n = 1; n <= terms; ++n) {
    last = term(n, x);
    sum += last;
  }
  // Coefficients grow at most polylogarithmically, so beyond n = 200 the term
  // ratio stays below (1 + 1/16) x.
  const BigReal ratio = x * BigReal(17L) / 16;
  BigReal err = abs(last) * ratio / (BigReal(1L) - ratio) + ldexp(abs(sum) + 1L, 8 - working_precision());
  return {std::move(sum), std::move(err), Method::direct, terms};
}

void add_genfun(std::vector<IdentityCase>& out) {
  // ln^k(1-x) = (-1)^k k! sum_n x^n zeta_{n-1}({1}_{k-1}) / n at x = 1/2.
  for (int k = 1; k <= 4; ++k) {
    Side lhs{{{Method::direct, "genfun(log_power," + std::to_string(k) + ")"}}, [k](EvalContext&) {
               // inner sits at bound n - 1 when term n is formed
               series::NestedSums<BigReal> inner(strict(ones(k - 1)));
               const auto term = [&](long n, const BigReal& x) {
                 BigReal t = pow(x, n) * inner.value() / n;
                 inner.advance();
                 return t;
               };
               EvalResult r = power_series(term, BigReal(1L) / 2, kGenfunTerms);
               const Rational scale = sgn(k) * fact(k);
               return result(scale * num(r), Method::direct);
             }};
    Side rhs{{kLn2Step}, [k](EvalContext& ctx) { return result(npow(Rational(-1) * num(ctx.ln2()), k), Method::geometric); }};
    out.push_back(make_case("genfun", "log_power/" + tag({{"k", k}}), {{"k", k}}, std::move(lhs), std::move(rhs), 0.0));
  }
  // ln^k(1 +- x) / (1 -+ x) at x = 1/3 from zeta_{n-1}(-1,{1}_{k-1}).
  for (const bool plus : {true, false}) {
    for (int k = 1; k <= 3; ++k) {
      const std::string name = plus ? "c3" : "c4";
      Side lhs{{{Method::direct, "genfun(" + name + "," + std::to_string(k) + ")"}}, [k, plus](EvalContext&) {
                 series::NestedSums<BigReal> inner(strict(cat({{-1}, ones(k - 1)})));
                 const auto term = [&](long n, const BigReal& x) {
                   BigReal t = pow(x, n - 1) * inner.value();
                   if (!plus && (n - 1) % 2 != 0) t = -t;
                   inner.advance();
                   return t;
                 };
                 EvalResult r = power_series(term, BigReal(1L) / 3, kGenfunTerms);
                 return result(sgn(k) * fact(k) * num(r), Method::direct);
               }};
      Side rhs{{{Method::symbolic, "elementary(" + name + "," + std::to_string(k) + ")"}}, [k, plus](EvalContext&) {
                 const BigReal x = BigReal(1L) / 3;
                 const BigReal v = plus ? pow(log1p(x), k) / (BigReal(1L) - x) : pow(log1p(-x), k) / (BigReal(1L) + x);
                 return result({v, BigReal(0L)}, Method::symbolic);
               }};
      out.push_back(make_case("genfun", name + "/" + tag({{"k", k}}), {{"k", k}}, std::move(lhs), std::move(rhs), 0.0));
    }
  }
}

void add_thm3_2(std::vector<IdentityCase>& out) {
  for (int m = 0; m <= 3; ++m) {
    for (int k = 0; k <= 3; ++k) {
      out.push_back(make_case("thm3_2", tag({{"m", m}, {"k", k}}), {{"m", m}, {"k", k}},
                              numeric_side(strict(cat({{-1}, ones(m), {-1}, ones(k)}))),
                              geometric_side(cat({{k + 2}, ones(m)}), sgn(m + 1)), 1e-9));
    }
  }
}

void add_thm3_3(std::vector<IdentityCase>& out) {
  for (int m = 0; m <= 2; ++m) {
    for (int k = 0; k <= 2; ++k) {
      Side rhs;
      for (int j = 0; j <= k; ++j) {
        const auto mzv = strict(cat({{m + 2}, ones(j)}));
        rhs.plan.push_back({Method::direct, mzv.to_string()});
        for (int l = 0; l <= m + 1; ++l) rhs.plan.push_back(geometric_step(cat({{l + 1}, ones(j)})));
      }
      rhs.plan.push_back(kLn2Step);
      rhs.eval = [m, k](EvalContext& ctx) {
        const Num L = num(ctx.ln2());
        Num total = constant(Rational(0));
        for (int j = 0; j <= k; ++j) {
          Num brace = num(ctx.direct(strict(cat({{m + 2}, ones(j)}))));
          for (int l = 0; l <= m + 1; ++l) {
            brace = brace - inv_fact(m + 1 - l) * (npow(L, m + 1 - l) * num(ctx.mpl_half(cat({{l + 1}, ones(j)}))));
          }
          const Rational c = sgn(j) * fact(j) * Rational(binomial(static_cast<unsigned long>(k),
                                                                  static_cast<unsigned long>(j)));
          total = total + c * (npow(L, k - j) * brace);
        }
        return result(sgn(m + k + 1) * inv_fact(k) * total, Method::direct);
      };
      out.push_back(make_case("thm3_3", tag({{"m", m}, {"k", k}}), {{"m", m}, {"k", k}},
                              numeric_side(strict(cat({{-1}, ones(m), {-1}, ones(k)}))), std::move(rhs), 1e-6));
    }
  }
}

void add_cor3_4(std::vector<IdentityCase>& out) {
  for (int m = 0; m <= 5; ++m) {
    out.push_back(make_case("cor3_4", tag({{"m", m}}), {{"m", m}}, geometric_side(cat({{2}, ones(m)})),
                            symbolic_side(Family::li_two_ones, {m}), 1e-10));
  }
  for (int m = 0; m <= 5; ++m) {
    out.push_back(make_case("cor3_4", "mzv_" + tag({{"m", m}}), {{"m", m}},
                            numeric_side(strict(cat({{-1}, ones(m), {-1}}))),
                            symbolic_side(Family::mzv_bar1_ones_bar1, {m}), 1e-10));
  }
}

void add_thm3_5(std::vector<IdentityCase>& out) {
  for (int m = 0; m <= 2; ++m) {
    for (int k = 0; k <= 2; ++k) {
      out.push_back(make_case("thm3_5", tag({{"m", m}, {"k", k}}), {{"m", m}, {"k", k}},
                              numeric_side(strict(cat({{-1}, ones(m), {-1, -1}, ones(k)}))),
                              symbolic_side(Family::three_bar, {m, k}), 1e-9));
    }
  }
  struct Example {
    Ints index;
    Family family;
    Ints params;
  };
  const std::array<Example, 5> examples{{
      {{-1, 1, -1}, Family::mzv_bar1_ones_bar1, {1}},
      {{-1, -1, -1}, Family::three_bar, {0, 0}},
      {{-1, 1, 1, -1}, Family::mzv_bar1_ones_bar1, {2}},
      {{-1, -1, -1, 1}, Family::three_bar, {0, 1}},
      {{-1, 1, -1, -1}, Family::three_bar, {1, 0}},
  }};
  for (const auto& ex : examples) {
    const auto index = strict(ex.index);
    out.push_back(make_case("thm3_5", "example/" + index.to_string(), {}, numeric_side(index),
                            symbolic_side(ex.family, ex.params), 1e-9));
  }
}

// Both sides of the restricted sum identity with middle entry p + 3.
void add_restricted_sum(std::vector<IdentityCase>& out, const std::string& suite, int p, int m, int k) {
  const auto left_index = [p](int a, int b) { return strict(cat({{-1}, ones(a), {p + 3}, ones(b)})); };
  const auto bar_index = [](int s, int b) { return strict(cat({{-s}, ones(b)})); };

  Side lhs;
  for (int i = 0; i <= m; ++i) lhs.plan.push_back(numeric_step(left_index(m - i, k)));
  for (int i = 0; i <= k; ++i) lhs.plan.push_back(numeric_step(left_index(k - i, m)));
  lhs.plan.push_back(kLn2Step);
  lhs.eval = [=](EvalContext& ctx) {
    const Num L = num(ctx.ln2());
    Num a = constant(Rational(0));
    for (int i = 0; i <= m; ++i) a = a + inv_fact(i) * (npow(L, i) * num(ctx.series(left_index(m - i, k))));
    Num b = constant(Rational(0));
    for (int i = 0; i <= k; ++i) b = b + inv_fact(i) * (npow(L, i) * num(ctx.series(left_index(k - i, m))));
    return result(sgn(m + 1) * a + sgn(p + k + 1) * b, Method::accelerated);
  };

  Side rhs;
  rhs.plan.push_back(numeric_step(bar_index(p + 3, k)));
  rhs.plan.push_back(numeric_step(bar_index(p + 3, m)));
  for (int i = 0; i <= p; ++i) {
    rhs.plan.push_back(numeric_step(bar_index(2 + i, m)));
    rhs.plan.push_back(numeric_step(bar_index(p + 2 - i, k)));
  }
  rhs.plan.push_back(kLn2Step);
  rhs.eval = [=](EvalContext& ctx) {
    const Num L = num(ctx.ln2());
    Num total = (sgn(m) * inv_fact(m + 1)) * (npow(L, m + 1) * num(ctx.series(bar_index(p + 3, k))));
    total = total + (sgn(p + k) * inv_fact(k + 1)) * (npow(L, k + 1) * num(ctx.series(bar_index(p + 3, m))));
    for (int i = 0; i <= p; ++i) {
      total = total + sgn(i) * (num(ctx.series(bar_index(2 + i, m))) * num(ctx.series(bar_index(p + 2 - i, k))));
    }
    return result(total, Method::accelerated);
  };

  std::map<std::string, int> params{{"m", m}, {"k", k}};
  std::string id = tag({{"m", m}, {"k", k}});
  if (suite == "thm4_1") {
    params["p"] = p;
    id = tag({{"p", p}, {"m", m}, {"k", k}});
  }
  out.push_back(make_case(suite, id, std::move(params), std::move(lhs), std::move(rhs), 1e-6));
}

void add_thm4_1(std::vector<IdentityCase>& out) {
  for (int p = 0; p <= 2; ++p) {
    for (int m = 0; m <= 2; ++m) {
      for (int k = 0; k <= 2; ++k) add_restricted_sum(out, "thm4_1", p, m, k);
    }
  }
}

void add_cor4_2(std::vector<IdentityCase>& out) {
  for (int m = 0; m <= 3; ++m) {
    for (int k = 0; k <= 3; ++k) add_restricted_sum(out, "cor4_2", 0, m, k);
  }
}

void add_thm4_3_case(std::vector<IdentityCase>& out, int p, int m, int k) {
  // (-1, {1}_a, 2, {1}_p, 2, {1}_b), (-2, {1}_p, 2, {1}_b), (-1, {1}_a, 2, {1}_b), (-2, {1}_a)
  const auto a_index = [p](int a, int b) { return strict(cat({{-1}, ones(a), {2}, ones(p), {2}, ones(b)})); };
  const auto b_index = [p](int b) { return strict(cat({{-2}, ones(p), {2}, ones(b)})); };
  const auto c_index = [](int a, int b) { return strict(cat({{-1}, ones(a), {2}, ones(b)})); };
  const auto d_index = [](int a) { return strict(cat({{-2}, ones(a)})); };
  const Rational fm = fact(m + 1);
  const Rational fk = fact(k + 1);

  Side lhs;
  for (int i = 0; i <= m; ++i) lhs.plan.push_back(numeric_step(a_index(m - i, k)));
  for (int i = 0; i <= k; ++i) lhs.plan.push_back(numeric_step(a_index(k - i, m)));
  lhs.plan.push_back(numeric_step(b_index(k)));
  lhs.plan.push_back(numeric_step(b_index(m)));
  lhs.plan.push_back(kLn2Step);
  lhs.eval = [=](EvalContext& ctx) {
    const Num L = num(ctx.ln2());
    Num s1 = constant(Rational(0));
    for (int i = 0; i <= m; ++i) s1 = s1 + inv_fact(i) * (npow(L, i) * num(ctx.series(a_index(m - i, k))));
    Num s2 = constant(Rational(0));
    for (int i = 0; i <= k; ++i) s2 = s2 + inv_fact(i) * (npow(L, i) * num(ctx.series(a_index(k - i, m))));
    Num total = (sgn(k + p) * fm * fk) * s1 + (sgn(m + 1) * fk * fm) * s2;
    total = total + (sgn(k + p) * fk) * (npow(L, m + 1) * num(ctx.series(b_index(k))));
    total = total + (sgn(m + 1) * fm) * (npow(L, k + 1) * num(ctx.series(b_index(m))));
    return result(total, Method::accelerated);
  };

  Side rhs;
  rhs.plan.push_back(numeric_step(d_index(m)));
  rhs.plan.push_back(numeric_step(d_index(k)));
  rhs.plan.push_back(numeric_step(strict(cat({{-1}, ones(p), {2}, ones(k)}))));
  rhs.plan.push_back(numeric_step(strict(cat({{-1}, ones(p), {2}, ones(m)}))));
  for (int i = 1; i <= p; ++i) {
    rhs.plan.push_back(numeric_step(c_index(i - 1, m)));
    rhs.plan.push_back(numeric_step(c_index(p - i, k)));
  }
  rhs.eval = [=](EvalContext& ctx) {
    Num total = (sgn(m + k + p + 1) * fm * fk) * (num(ctx.series(d_index(m))) * num(ctx.series(c_index(p, k))));
    total = total + (sgn(m + k) * fk * fm) * (num(ctx.series(d_index(k))) * num(ctx.series(c_index(p, m))));
    Num s = constant(Rational(0));
    for (int i = 1; i <= p; ++i) {
      s = s + sgn(i) * (num(ctx.series(c_index(i - 1, m))) * num(ctx.series(c_index(p - i, k))));
    }
    total = total + (sgn(m + k + p + 1) * fk * fm) * s;
    return result(total, Method::accelerated);
  };
  out.push_back(make_case("thm4_3", "grid/" + tag({{"p", p}, {"m", m}, {"k", k}}), {{"p", p}, {"m", m}, {"k", k}},
                          std::move(lhs), std::move(rhs), 1e-6));
}

void add_thm4_3(std::vector<IdentityCase>& out) {
  for (int p = 0; p <= 1; ++p) {
    for (int m = 0; m <= 1; ++m) {
      for (int k = 0; k <= 1; ++k) add_thm4_3_case(out, p, m, k);
    }
  }
  // zeta(-1,2,1,2) + zeta(-2,1,2) ln2 + zeta(-2) zeta(-1,1,2) = zeta(-1,2)^2 / 2
  {
    const auto i1 = strict({-1, 2, 1, 2});
    const auto i2 = strict({-2, 1, 2});
    const auto i3 = strict({-2});
    const auto i4 = strict({-1, 1, 2});
    const auto i5 = strict({-1, 2});
    Side lhs{{numeric_step(i1), numeric_step(i2), numeric_step(i3), numeric_step(i4), kLn2Step},
             [=](EvalContext& ctx) {
               const Num total = num(ctx.series(i1)) + num(ctx.series(i2)) * num(ctx.ln2()) +
                                 num(ctx.series(i3)) * num(ctx.series(i4));
               return result(total, Method::accelerated);
             }};
    Side rhs{{numeric_step(i5)}, [=](EvalContext& ctx) {
               const Num z = num(ctx.series(i5));
               return result(make_rational(1, 2) * (z * z), Method::accelerated);
             }};
    out.push_back(make_case("thm4_3", "p1k0m0", {{"p", 1}, {"m", 0}, {"k", 0}}, std::move(lhs), std::move(rhs), 1e-6));
  }
  out.push_back(make_case("thm4_3", "weight4", {}, numeric_side(strict({-1, 1, 2})),
                          symbolic_side(Family::bar1_one_two, {}), 1e-9));
}

void add_eq4_11_14(std::vector<IdentityCase>& out) {
  for (int p = 1; p <= 2; ++p) {
    for (int k = 0; k <= 2; ++k) {
      out.push_back(make_case("eq4_11_14", "bars_ones/" + tag({{"p", p}, {"k", k}}), {{"p", p}, {"k", k}},
                              numeric_side(strict(cat({repeat(-1, 2 * p + 2), ones(k)}))),
                              geometric_side(cat({{k + 2}, repeat(2, p)}), sgn(p + 1)), 1e-9));
    }
  }
  for (int p = 1; p <= 2; ++p) {
    for (int k = 0; k <= 2; ++k) {
      for (int m = 0; m <= 1; ++m) {
        out.push_back(make_case("eq4_11_14", "bar_ones_bars_ones/" + tag({{"p", p}, {"k", k}, {"m", m}}),
                                {{"p", p}, {"k", k}, {"m", m}},
                                numeric_side(strict(cat({{-1}, ones(m), repeat(-1, 2 * p + 1), ones(k)}))),
                                geometric_side(cat({{k + 2}, repeat(2, p), ones(m)}), sgn(m + p + 1)), 1e-9));
      }
    }
  }
}

std::vector<IdentityCase> build_registry() {
  std::vector<IdentityCase> out;
  add_euler(out);
  add_eq2_8(out);
  add_thm2_4_5(out);
  add_lemmas(out);
  add_stirling(out);
  add_genfun(out);
  add_thm3_2(out);
  add_thm3_3(out);
  add_cor3_4(out);
  add_thm3_5(out);
  add_thm4_1(out);
  add_cor4_2(out);
  add_thm4_3(out);
  add_eq4_11_14(out);
  std::set<std::string> seen;
  for (const auto& c : out) {
    if (!seen.insert(c.id).second) throw ValidationError("duplicate case id " + c.id);
  }
  return out;
}

}  // namespace

std::span<const std::string_view> suite_names() { return kSuites; }

bool is_suite(std::string_view name) { return std::find(kSuites.begin(), kSuites.end(), name) != kSuites.end(); }

std::string describe(const Plan& plan) {
  std::string out;
  for (const auto& step : plan) {
    if (!out.empty()) out += "; ";
    out += std::string(to_string(step.method)) + " " + step.object;
  }
  return out;
}

EvalResult EvalMemo::get_or_compute(const std::string& key, const std::function<EvalResult()>& compute) {
  {
    std::lock_guard lock(mutex_);
    const auto it = values_.find(key);
    if (it != values_.end()) return it->second;
  }
  EvalResult r = compute();
  std::lock_guard lock(mutex_);
  return values_.emplace(key, std::move(r)).first->second;
}

std::size_t EvalMemo::size() const {
  std::lock_guard lock(mutex_);
  return values_.size();
}

EvalContext::EvalContext(series::TruncationOptions opts, int precision, std::shared_ptr<EvalMemo> memo)
    : opts_(opts), precision_(precision), memo_(memo ? std::move(memo) : std::make_shared<EvalMemo>()) {}

EvalResult EvalContext::memo(const std::string& object, std::string_view method,
                             const std::function<EvalResult()>& compute) {
  const std::string key = object + "|" + std::string(method) + "|" + std::to_string(precision_) + "|" +
                          std::to_string(opts_.cutoff);
  return memo_->get_or_compute(key, [&] {
    PrecisionScope scope(precision_);
    return compute();
  });
}

EvalResult EvalContext::series(const SignedIndex& index) {
  return memo(index.to_string(), "auto", [&] { return series::eval_auto(index, opts_); });
}

EvalResult EvalContext::series(std::string_view index_text) { return series(parse_index(index_text)); }

EvalResult EvalContext::direct(const SignedIndex& index) {
  return memo(index.to_string(), "direct", [&] { return series::eval_direct(index, opts_); });
}

EvalResult EvalContext::mpl_half(const std::vector<int>& exponents) {
  return memo(li_text(exponents), "geometric", [&] { return series::eval_mpl_half(exponents); });
}

EvalResult EvalContext::ln2() {
  return memo("ln2", "geometric", [] { return series::eval_ln2(); });
}

EvalResult EvalContext::closed(Family family, const std::vector<int>& params) {
  return memo(family_call(family, params), "symbolic",
              [&] { return symbolic::expr_eval(symbolic::closed_form(family, params)); });
}

EvalResult EvalContext::quad(const quadrature::IntegrandSpec& spec) {
  return memo(spec.to_string(), "quadrature", [&] { return quadrature::integrate(spec); });
}

const std::vector<IdentityCase>& registry() {
  static const std::vector<IdentityCase> cases = build_registry();
  return cases;
}

std::vector<const IdentityCase*> select_cases(std::string_view selector) {
  if (selector != "all" && !is_suite(selector)) throw UnknownSuiteError(std::string(selector));
  std::vector<const IdentityCase*> out;
  for (const auto& c : registry()) {
    if (selector == "all" || c.suite == selector) out.push_back(&c);
  }
  return out;
}

bool plans_independent(const IdentityCase& c) {
  for (const auto& a : c.lhs.plan) {
    for (const auto& b : c.rhs.plan) {
      // ln 2 is a shared coefficient in several identities, not a compared value.
      if (a == b && a != kLn2Step) return false;
    }
  }
  return true;
}

}  // namespace mzv::verify
