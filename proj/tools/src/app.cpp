#include "mzv_cli/app.hpp"

#include <fstream>
#include <memory>
#include <sstream>
#include <utility>

#include <CLI11.hpp>
#include <json.hpp>

#include "mzv/canonicalize.hpp"
#include "mzv/closed_form.hpp"
#include "mzv/errors.hpp"
#include "mzv/lemmas.hpp"
#include "mzv/quadrature.hpp"
#include "mzv/registry.hpp"
#include "mzv/report.hpp"
#include "mzv/series.hpp"
#include "mzv/stirling.hpp"
#include "mzv_cli/cache.hpp"
#include "mzv_cli/config.hpp"

namespace mzv::cli {
namespace {

using Fields = std::vector<std::pair<std::string, std::string>>;

void emit(std::ostream& out, const Fields& fields, const std::string& format) {
  if (format == "json") {
    nlohmann::ordered_json doc = nlohmann::ordered_json::object();
    for (const auto& [k, v] : fields) doc[k] = v;
    out << doc.dump(2) << '\n';
    return;
  }
  if (format == "csv") {
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << fields[i].first;
    out << '\n';
    for (std::size_t i = 0; i < fields.size(); ++i) out << (i ? "," : "") << '"' << fields[i].second << '"';
    out << '\n';
    return;
  }
  std::size_t width = 0;
  for (const auto& f : fields) width = std::max(width, f.first.size());
  for (const auto& [k, v] : fields) out << k << std::string(width + 2 - k.size(), ' ') << v << '\n';
}

std::string format_or(const Settings& s, const char* fallback) { return s.format.empty() ? fallback : s.format; }

std::string err_text(const BigReal& e) { return e.to_scientific(3); }

/// `li(s1,...,sk)`: multiple polylogarithm at 1/2.
std::optional<std::vector<int>> parse_li(std::string_view text) {
  if (!text.starts_with("li(")) return std::nullopt;
  if (!text.ends_with(")")) throw SyntaxError("expected li(s1,...,sk)");
  std::vector<int> out;
  std::string body(text.substr(3, text.size() - 4));
  std::stringstream ss(body);
  std::string item;
  while (std::getline(ss, item, ',')) {
    std::size_t used = 0;
    int v = 0;
    try {
      v = std::stoi(item, &used);
    } catch (const std::exception&) {
      used = 0;
    }
    if (item.empty() || used != item.size()) throw SyntaxError("bad exponent '" + item + "' in " + std::string(text));
    out.push_back(v);
  }
  if (out.empty()) throw SyntaxError("li() needs at least one exponent");
  return out;
}

std::string li_text(const std::vector<int>& s) {
  std::string out = "li(";
  for (std::size_t i = 0; i < s.size(); ++i) out += (i ? "," : "") + std::to_string(s[i]);
  return out + ")";
}

struct EvalArgs {
  std::string text;
  std::string method = "auto";
};

int cmd_eval(const EvalArgs& a, const Settings& s, std::ostream& out) {
  PrecisionScope scope(s.prec);
  series::TruncationOptions opts;
  opts.cutoff = s.cutoff;

  std::string kind;
  std::string object;
  std::string method = a.method;
  std::function<EvalResult()> compute;
  if (const auto li = parse_li(a.text)) {
    kind = "li";
    object = li_text(*li);
    method = "geometric";
    compute = [li] { return series::eval_mpl_half(*li); };
  } else {
    const SignedIndex index = parse_index(a.text);
    if (!index.admissible()) throw DivergentIndexError(index.to_string());
    kind = "zeta";
    object = index.to_string();
    compute = [index, opts, method] {
      if (method == "direct") return series::eval_direct(index, opts);
      if (method == "accel") return series::eval_accelerated(index, opts);
      return series::eval_auto(index, opts);
    };
  }

  std::string cache_state = "off";
  EvalResult r;
  if (!s.cache.empty()) {
    ResultCache cache(s.cache);
    const std::string key = cache_key(kind, object, method, s.prec, s.cutoff);
    if (auto hit = cache.lookup(key)) {
      r = std::move(*hit);
      cache_state = "hit";
    } else {
      r = compute();
      cache.store(key, r);
      cache_state = "miss";
    }
  } else {
    r = compute();
  }

  emit(out,
       {{"index", object},
        {"value", r.value.to_scientific(trusted_digits(s.prec))},
        {"err", err_text(r.err)},
        {"method", std::string(to_string(r.method))},
        {"terms", std::to_string(r.terms_used)},
        {"cache", cache_state}},
       format_or(s, "text"));
  return kExitOk;
}

struct ClosedFormArgs {
  std::string family;
  std::vector<int> params;
  bool raw = false;
};

int cmd_closed_form(const ClosedFormArgs& a, const Settings& s, std::ostream& out) {
  using namespace symbolic;
  PrecisionScope scope(s.prec);
  const Family f = parse_family(a.family);
  ConstantExpr e = closed_form(f, a.params);
  if (!a.raw) e = canonicalize(e);
  const EvalResult closed = expr_eval(e);

  // Independent value of the same quantity.
  series::TruncationOptions opts;
  opts.cutoff = s.cutoff;
  EvalResult numeric;
  std::string source;
  if (const auto index = family_index(f, a.params)) {
    numeric = series::eval_auto(*index, opts);
    source = index->to_string();
  } else if (f == Family::li_two_ones) {
    std::vector<int> exps = concat({{2}, repeat(1, a.params.at(0))});
    numeric = series::eval_mpl_half(exps);
    source = li_text(exps);
  } else {
    const auto spec = f == Family::integral_i ? quadrature::IntegrandSpec::lemma2_3(a.params.at(0))
                                              : quadrature::IntegrandSpec::lemma2_4(a.params.at(0));
    numeric = quadrature::integrate(spec);
    source = spec.to_string();
  }

  VerdictRecord v;
  v.lhs = closed.value;
  v.lhs_err = closed.err;
  v.rhs = numeric.value;
  v.rhs_err = numeric.err;
  v.tolerance = BigReal(1e-10);
  settle(v);

  std::string call(family_info(f).name);
  call += '(';
  for (std::size_t i = 0; i < a.params.size(); ++i) call += (i ? "," : "") + std::to_string(a.params[i]);
  call += ')';
  const int digits = trusted_digits(s.prec);
  emit(out,
       {{"family", call},
        {"expr", e.to_string()},
        {"closed", closed.value.to_scientific(digits)},
        {"numeric", numeric.value.to_scientific(digits)},
        {"source", source + " [" + std::string(to_string(numeric.method)) + "]"},
        {"numeric_err", err_text(numeric.err)},
        {"diff", err_text(v.diff)},
        {"check", v.pass ? "ok" : "MISMATCH"}},
       format_or(s, "text"));
  return v.pass ? kExitOk : kExitFailure;
}

struct VerifyArgs {
  std::string suite = "all";
  std::string out;
  double tolerance_scale = 1.0;
};

int cmd_verify(const VerifyArgs& a, const Settings& s, std::ostream& out, std::ostream& err) {
  if (a.suite != "all" && !verify::is_suite(a.suite)) throw UnknownSuiteError(a.suite);
  if (!(a.tolerance_scale > 0)) throw ConfigError("--tolerance-scale must be positive");
  const auto format = verify::parse_report_format(format_or(s, "json"));
  verify::RunOptions opts;
  opts.trunc.cutoff = s.cutoff;
  opts.precision = s.prec;
  opts.jobs = s.jobs;
  opts.tolerance_scale = a.tolerance_scale;
  const verify::Report report = verify::run_suite(a.suite, opts);
  const std::string text = verify::render(report, format);
  if (a.out.empty()) {
    out << text;
  } else {
    std::ofstream file(a.out);
    if (!file) throw ConfigError("cannot write " + a.out);
    file << text;
  }
  err << report.summary.passed << "/" << report.summary.total << " passed\n";
  return report.summary.failed == 0 ? kExitOk : kExitFailure;
}

int cmd_stirling(int max_n, const Settings& s, std::ostream& out) {
  if (max_n < 1 || max_n > 100) throw DomainError("--max must lie in [1, 100]");
  const std::string format = format_or(s, "text");
  bool all_equal = true;
  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::ostringstream text;
  for (long n = 1; n <= max_n; ++n) {
    for (const auto& row : series::stirling_identity_details(n)) {
      all_equal = all_equal && row.equal;
      const std::string st = to_string(row.stirling);
      const std::string h = to_string(row.harmonic_side);
      rows.push_back({{"n", row.n}, {"k", row.k}, {"stirling", st}, {"harmonic", h}, {"equal", row.equal}});
      text << "s(" << row.n << "," << row.k << ") = " << st << "  harmonic = " << h << "  "
           << (row.equal ? "ok" : "MISMATCH") << '\n';
    }
  }
  if (format == "json") {
    out << nlohmann::ordered_json{{"max", max_n}, {"rows", rows}, {"all_equal", all_equal}}.dump(2) << '\n';
  } else {
    out << text.str() << (all_equal ? "all equal" : "mismatch found") << '\n';
  }
  return all_equal ? kExitOk : kExitFailure;
}

struct QuadArgs {
  std::string id;
  std::vector<std::string> params;
};

int cmd_quad(const QuadArgs& a, const Settings& s, std::ostream& out) {
  PrecisionScope scope(s.prec);
  const auto spec = quadrature::parse_integrand(a.id, a.params);
  const auto q = quadrature::integrate_with_history(spec);
  const int digits = trusted_digits(s.prec);
  Fields fields{{"integrand", spec.to_string()},
                {"value", q.result.value.to_scientific(digits)},
                {"err", err_text(q.result.err)},
                {"levels", std::to_string(q.levels.size())},
                {"evaluations", std::to_string(q.result.terms_used)}};
  bool ok = true;
  try {
    const EvalResult c = quadrature::lemma_counterpart(spec);
    VerdictRecord v;
    v.lhs = q.result.value;
    v.lhs_err = q.result.err;
    v.rhs = c.value;
    v.rhs_err = c.err;
    v.tolerance = BigReal(quadrature::kLemmaTolerance);
    settle(v);
    ok = v.pass;
    fields.push_back({"closed", c.value.to_scientific(digits)});
    fields.push_back({"diff", err_text(v.diff)});
    fields.push_back({"check", ok ? "ok" : "MISMATCH"});
  } catch (const DomainError&) {
    fields.push_back({"closed", "n/a"});
  }
  emit(out, fields, format_or(s, "text"));
  return ok ? kExitOk : kExitFailure;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Multiple zeta values: evaluation, closed forms and identity checks", "mzv"};
  app.fallthrough();
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(verify::library_version()));

  FlagValues flags;
  app.add_option("--prec", flags.prec, "Working precision in bits");
  app.add_option("--cutoff", flags.cutoff, "Outer truncation N for series");
  app.add_option("--cache", flags.cache, "Result cache file (JSON lines)");
  app.add_option("--format", flags.format, "Output format: json, csv or text");
  app.add_option("--jobs", flags.jobs, "Worker threads (0 = hardware concurrency)");
  app.add_option("--config", flags.config, "Configuration file with key=value lines");

  EvalArgs eval_args;
  auto* eval = app.add_subcommand("eval", "Evaluate zeta(...), zetastar(...) or li(...) at 1/2");
  eval->add_option("index", eval_args.text, "Index text")->required();
  eval->add_option("--method", eval_args.method, "auto, direct or accel")
      ->check(CLI::IsMember({"auto", "direct", "accel"}));

  ClosedFormArgs cf_args;
  auto* cf = app.add_subcommand("closed-form", "Print a family's closed form with a numeric check");
  cf->add_option("family", cf_args.family, "Family name")->required();
  cf->add_option("params", cf_args.params, "Integer parameters");
  cf->add_flag("--raw", cf_args.raw, "Skip canonicalization");

  VerifyArgs verify_args;
  auto* ver = app.add_subcommand("verify", "Check registered identities");
  ver->add_option("--suite", verify_args.suite, "Suite name or all");
  ver->add_option("--out", verify_args.out, "Report file (default stdout)");
  ver->add_option("--tolerance-scale", verify_args.tolerance_scale, "Multiplies every tolerance");

  int stirling_max = 10;
  auto* st = app.add_subcommand("stirling", "Check the Stirling number identity for n <= max");
  st->add_option("--max", stirling_max, "Largest n (1..100)");

  QuadArgs quad_args;
  auto* quad = app.add_subcommand("quad", "Integrate a lemma integrand");
  quad->add_option("id", quad_args.id, "lemma2_1, powlog, lemma2_3, lemma2_4 or thm3_3")->required();
  quad->add_option("params", quad_args.params, "Parameters");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? kExitOk : kExitUsage;
  }

  try {
    const Settings settings = resolve_settings(flags);
    if (eval->parsed()) return cmd_eval(eval_args, settings, out);
    if (cf->parsed()) return cmd_closed_form(cf_args, settings, out);
    if (ver->parsed()) return cmd_verify(verify_args, settings, out, err);
    if (st->parsed()) return cmd_stirling(stirling_max, settings, out);
    if (quad->parsed()) return cmd_quad(quad_args, settings, out);
  } catch (const SyntaxError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const DomainError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const UnknownSuiteError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const ConfigError& e) {
    err << "error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << '\n';
    return kExitFailure;
  }
  return kExitUsage;
}

}  // namespace mzv::cli
