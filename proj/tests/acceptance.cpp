// Acceptance suite: one PASS/FAIL line per criterion.
//
// usage: mzv_acceptance <path-to-mzv> [--expect-fail N]...
// Exit status is 0 iff the failing criteria are exactly the expected ones.

#include <sys/wait.h>
#include <unistd.h>

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <json.hpp>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "mzv/canonicalize.hpp"
#include "mzv/closed_form.hpp"
#include "mzv/quadrature.hpp"
#include "mzv/series.hpp"
#include "mzv/stirling.hpp"

namespace {

using namespace mzv;
using symbolic::Family;
using Clock = std::chrono::steady_clock;

struct Verdict {
  bool pass = false;
  std::string detail;
};

double seconds_since(Clock::time_point t) { return std::chrono::duration<double>(Clock::now() - t).count(); }

std::string fmt(double v) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2e", v);
  return buf;
}

// ---------------------------------------------------------------------------
// Subprocess helpers.

struct Proc {
  int code = -1;
  std::string out;
  std::string err;
  double seconds = 0;
};

std::filesystem::path scratch_dir() {
  static const auto dir = [] {
    auto d = std::filesystem::temp_directory_path() / ("mzv_acceptance_" + std::to_string(::getpid()));
    std::filesystem::create_directories(d);
    return d;
  }();
  return dir;
}

std::string quote(const std::string& s) {
  std::string out = "'";
  for (char c : s) out += c == '\'' ? std::string("'\\''") : std::string(1, c);
  return out + "'";
}

std::string slurp(const std::filesystem::path& p) {
  std::ifstream in(p);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

Proc run_cli(const std::string& exe, const std::vector<std::string>& args) {
  static int counter = 0;
  const auto out = scratch_dir() / ("out" + std::to_string(counter));
  const auto err = scratch_dir() / ("err" + std::to_string(counter++));
  std::string cmd = quote(exe);
  for (const auto& a : args) cmd += " " + quote(a);
  cmd += " >" + quote(out.string()) + " 2>" + quote(err.string());
  Proc p;
  const auto start = Clock::now();
  const int status = std::system(cmd.c_str());
  p.seconds = seconds_since(start);
  p.code = WIFEXITED(status) ? WEXITSTATUS(status) : -1;
  p.out = slurp(out);
  p.err = slurp(err);
  return p;
}

std::string field(const std::string& text, const std::string& key) {
  std::istringstream in(text);
  std::string line;
  while (std::getline(in, line)) {
    if (line.rfind(key + " ", 0) == 0) return line.substr(line.find_first_not_of(' ', key.size()));
  }
  return {};
}

// ---------------------------------------------------------------------------
// Golden closed forms as printed.

struct Golden {
  const char* label;
  Family family;
  std::vector<int> params;
  SignedIndex index;
  const char* printed;
};

std::vector<Golden> goldens() {
  return {
      {"zeta*(-1,-1)", Family::star_bar1_ones_bar1, {0}, parse_index("zetastar(-1,-1)"), "1/2*z2 + 1/2*ln2^2"},
      {"zeta*(2,-1)", Family::star2_ones_bar1, {0}, parse_index("zetastar(2,-1)"), "1/4*z3 - 3/2*z2*ln2"},
      {"zeta*(-1,1,-1)", Family::star_bar1_ones_bar1, {1}, parse_index("zetastar(-1,1,-1)"),
       "1/8*z3 + 1/2*z2*ln2 - 1/6*ln2^3"},
      {"zeta*(2,1,-1)", Family::star2_ones_bar1, {1}, parse_index("zetastar(2,1,-1)"),
       "1/8*ln2^4 + 3*li4 - 3*z4 - 3/2*z2*ln2^2 + 7/8*z3*ln2"},
      {"zeta(-1,1,-1)", Family::mzv_bar1_ones_bar1, {1}, parse_index("zeta(-1,1,-1)"), "1/8*z3 - 1/6*ln2^3"},
      {"zeta(-1,-1,-1)", Family::three_bar, {0, 0}, parse_index("zeta(-1,-1,-1)"),
       "-1/4*z3 + 1/2*z2*ln2 - 1/6*ln2^3"},
      {"zeta(-1,1,1,-1)", Family::mzv_bar1_ones_bar1, {2}, parse_index("zeta(-1,1,1,-1)"),
       "li4 + 1/12*ln2^4 + 7/8*z3*ln2 - 1/2*z2*ln2^2 - z4"},
      {"zeta(-1,-1,-1,1)", Family::three_bar, {0, 1}, parse_index("zeta(-1,-1,-1,1)"),
       "3*li4 + 1/6*ln2^4 + 23/8*z3*ln2 - z2*ln2^2 - 3*z4"},
      {"zeta(-1,1,-1,-1)", Family::three_bar, {1, 0}, parse_index("zeta(-1,1,-1,-1)"),
       "-3*li4 - 1/12*ln2^4 - 11/4*z3*ln2 - 3/4*z2*ln2^2 + 3*z4"},
      {"zeta(-1,1,2)", Family::bar1_one_two, {}, parse_index("zeta(-1,1,2)"),
       "3*li4 + 1/8*ln2^4 + 23/8*z3*ln2 - z2*ln2^2 - 3*z4"},
  };
}

Verdict criterion1() {
  const auto start = Clock::now();
  int matched = 0;
  std::string mismatched;
  for (const auto& g : goldens()) {
    const auto engine = symbolic::canonicalize(symbolic::closed_form(g.family, g.params));
    const auto printed = symbolic::parse_expr(g.printed);
    // Coefficient-by-coefficient over the union of monomials.
    bool same = true;
    for (const auto& [mono, c] : engine.terms()) same = same && printed.coefficient(mono) == c;
    for (const auto& [mono, c] : printed.terms()) same = same && engine.coefficient(mono) == c;
    if (same) {
      ++matched;
    } else {
      mismatched += std::string(mismatched.empty() ? "" : "; ") + g.label + " engine " + engine.to_string();
    }
  }
  const double t = seconds_since(start);
  return {matched == 10 && t < 5.0,
          std::to_string(matched) + "/10 printed forms match in " + fmt(t) + " s" +
              (mismatched.empty() ? "" : "; mismatched: " + mismatched)};
}

Verdict criterion2() {
  const auto start = Clock::now();
  double worst = 0;
  std::string worst_label;
  bool ok = true;
  for (const auto& g : goldens()) {
    const auto closed = symbolic::expr_eval(symbolic::closed_form(g.family, g.params));
    const auto numeric = series::eval_auto(g.index);
    const double d = abs(closed.value - numeric.value).to_double();
    if (d > worst) {
      worst = d;
      worst_label = g.label;
    }
    ok = ok && d <= 1e-10;
  }
  const double t = seconds_since(start);
  return {ok && t < 30.0, "max |closed - numeric| = " + fmt(worst) + " (" + worst_label + ") in " + fmt(t) + " s"};
}

// ---------------------------------------------------------------------------
// Report-based criteria.

struct CaseRow {
  std::string id;
  std::string suite;
  double diff = 0;
  bool pass = false;
};

std::vector<CaseRow> g_report;

Verdict check_rows(const std::function<bool(const CaseRow&)>& select, double bound, std::size_t expected) {
  if (g_report.empty()) return {false, "no verify report available"};
  std::size_t n = 0;
  double worst = 0;
  bool ok = true;
  std::string bad;
  for (const auto& r : g_report) {
    if (!select(r)) continue;
    ++n;
    worst = std::max(worst, r.diff);
    if (!r.pass || !(r.diff <= bound)) {
      ok = false;
      if (bad.size() < 200) bad += " " + r.id;
    }
  }
  ok = ok && n == expected;
  std::string detail = std::to_string(n) + "/" + std::to_string(expected) + " cases, max diff " + fmt(worst) +
                       " (bound " + fmt(bound) + ")";
  if (!bad.empty()) detail += "; failing:" + bad;
  return {ok, detail};
}

auto in_suite(const std::string& suite) {
  return [suite](const CaseRow& r) { return r.suite == suite; };
}

auto id_prefix(const std::string& prefix) {
  return [prefix](const CaseRow& r) { return r.id.rfind(prefix, 0) == 0; };
}

Verdict criterion3() { return check_rows(in_suite("eq2_8"), 1e-10, 7); }

Verdict criterion4() {
  Verdict v = check_rows(in_suite("euler"), 1e-10, 7);
  const auto expr = symbolic::canonicalize(symbolic::closed_form(Family::euler_star, {2}));
  const bool two_zeta3 = expr.to_string() == "2*z3";
  const double d = abs(series::eval_direct(parse_index("zetastar(2,1)")).value - 2L * mpfr_zeta(3)).to_double();
  v.pass = v.pass && two_zeta3 && d <= 1e-10;
  v.detail += "; k=2 closed form " + expr.to_string() + ", |zeta*(2,1) - 2 zeta(3)| = " + fmt(d);
  return v;
}

Verdict criterion5() { return check_rows(in_suite("thm3_2"), 1e-9, 16); }
Verdict criterion6() { return check_rows(in_suite("thm3_3"), 1e-6, 9); }
Verdict criterion7() { return check_rows(in_suite("cor3_4"), 1e-10, 12); }
Verdict criterion8() {
  return check_rows([](const CaseRow& r) { return r.suite == "thm3_5" && r.id.find("/example/") == std::string::npos; },
                    1e-9, 9);
}

Verdict criterion9() {
  const Verdict a = check_rows(in_suite("thm4_1"), 1e-6, 27);
  const Verdict b = check_rows(in_suite("cor4_2"), 1e-6, 16);
  const Verdict c = check_rows(
      [](const CaseRow& r) { return r.id.rfind("thm4_3/grid/", 0) == 0 || r.id == "thm4_3/p1k0m0"; }, 1e-6, 9);
  return {a.pass && b.pass && c.pass, "thm4_1 " + a.detail + " | cor4_2 " + b.detail + " | thm4_3 " + c.detail};
}

Verdict criterion10() {
  const Verdict a = check_rows(id_prefix("eq4_11_14/bars_ones/"), 1e-9, 6);
  const Verdict b = check_rows(id_prefix("eq4_11_14/bar_ones_bars_ones/"), 1e-9, 12);
  return {a.pass && b.pass, "even bar run " + a.detail + " | odd bar run " + b.detail};
}

Verdict criterion11() {
  Verdict v = check_rows(in_suite("stirling"), 0.0, 30);
  bool exact = true;
  for (long n = 1; n <= 30; ++n) {
    for (const auto& row : series::stirling_identity_details(n)) exact = exact && row.equal;
  }
  const BigInt s53 = series::stirling1(5, 3);
  v.pass = v.pass && exact && s53 == 35;
  v.detail += "; every (n,k) exact: " + std::string(exact ? "yes" : "no") + "; s(5,3) = " + s53.get_str();
  return v;
}

Verdict criterion12() {
  const auto lemma_kind = [](const std::string& kind) {
    return [kind](const CaseRow& r) { return r.id.rfind("lemmas/" + kind + "(", 0) == 0; };
  };
  const Verdict a = check_rows(lemma_kind("lemma2_1"), 1e-8, 100);
  const Verdict b = check_rows(lemma_kind("powlog"), 1e-8, 50);
  const Verdict c = check_rows(lemma_kind("lemma2_3"), 1e-8, 6);
  const Verdict d = check_rows(lemma_kind("lemma2_4"), 1e-8, 5);
  const BigReal l = mpfr_log2();
  const BigReal pi = mpfr_pi();
  const BigReal i0 = quadrature::integrate(quadrature::IntegrandSpec::lemma2_3(0)).value;
  const double di0 = abs(i0 - (l * l - pi * pi / 6L) / 2L).to_double();
  return {a.pass && b.pass && c.pass && d.pass && di0 <= 1e-8,
          "lemma2_1 " + a.detail + " | powlog " + b.detail + " | lemma2_3 " + c.detail + " | lemma2_4 " + d.detail +
              " | I(0) diff " + fmt(di0)};
}

Verdict criterion13(const std::string& exe) {
  std::vector<std::string> problems;
  // Generating-function suite.
  const Verdict g = check_rows(in_suite("genfun"), 1.0, 10);
  if (!g.pass) problems.push_back("genfun: " + g.detail);

  // Star sums dominate strict sums for positive indices.
  for (const char* body : {"(2,1)", "(3,1,1)", "(2,2,1)"}) {
    const SignedIndex strict = parse_index(std::string("zeta") + body);
    const SignedIndex star = strict.with_kind(IndexKind::star);
    for (const long n : {5L, 50L, 500L}) {
      if (series::partial_sum_exact(star, n) < series::partial_sum_exact(strict, n)) {
        problems.push_back(std::string("domination at ") + body);
      }
    }
    if (!(series::eval_direct(star).value > series::eval_direct(strict).value)) {
      problems.push_back(std::string("domination of limits at ") + body);
    }
  }

  // Determinism of reports, ignoring timings.
  const auto strip = [](const std::string& text) {
    auto doc = nlohmann::json::parse(text, nullptr, false);
    if (doc.is_discarded()) return std::string("<invalid>");
    for (auto& c : doc["cases"]) c.erase("ms");
    return doc.dump();
  };
  const Proc r1 = run_cli(exe, {"verify", "--suite", "thm3_2"});
  const Proc r2 = run_cli(exe, {"verify", "--suite", "thm3_2", "--jobs", "2"});
  if (r1.code != 0 || r2.code != 0 || strip(r1.out) != strip(r2.out)) problems.push_back("reports differ");

  // Cache bit-identity.
  const std::string cache = (scratch_dir() / "cache.jsonl").string();
  const Proc c1 = run_cli(exe, {"eval", "zeta(-1,1,-1,1)", "--cache", cache});
  const Proc c2 = run_cli(exe, {"eval", "zeta(-1,1,-1,1)", "--cache", cache});
  if (c1.code != 0 || c2.code != 0 || field(c1.out, "value") != field(c2.out, "value") ||
      field(c1.out, "err") != field(c2.out, "err") || field(c2.out, "cache") != "hit" || field(c2.out, "terms") != "0") {
    problems.push_back("cache");
  }

  // Exit codes across the command families.
  const std::vector<std::pair<std::vector<std::string>, int>> contract{
      {{"eval", "zetastar(2,1)"}, 0},
      {{"eval", "zeta(1,2)"}, 2},
      {{"eval", "zeta(1,"}, 2},
      {{"closed-form", "euler-star", "2"}, 0},
      {{"closed-form", "nosuch"}, 2},
      {{"closed-form", "three-bar", "0"}, 2},
      {{"verify", "--suite", "euler"}, 0},
      {{"verify", "--suite", "nosuch"}, 2},
      {{"stirling", "--max", "30"}, 0},
      {{"quad", "lemma2_3", "2"}, 0},
      {{"quad", "lemma2_3"}, 2},
  };
  for (const auto& [args, code] : contract) {
    const Proc p = run_cli(exe, args);
    if (p.code != code) {
      std::string cmd;
      for (const auto& a : args) cmd += " " + a;
      problems.push_back("exit" + cmd + " = " + std::to_string(p.code));
    }
  }
  std::string detail = "genfun 10 cases, domination, determinism, cache, exit codes";
  for (const auto& p : problems) detail += "; " + p;
  return {problems.empty(), detail};
}

Verdict criterion14(const std::string& exe) {
  const auto report = scratch_dir() / "all.json";
  const Proc p = run_cli(exe, {"verify", "--suite", "all", "--prec", "192", "--out", report.string()});
  const auto doc = nlohmann::json::parse(slurp(report), nullptr, false);
  if (!doc.is_discarded()) {
    for (const auto& c : doc["cases"]) {
      g_report.push_back({c["id"].get<std::string>(), c["suite"].get<std::string>(),
                          std::strtod(c["diff"].get<std::string>().c_str(), nullptr), c["pass"].get<bool>()});
    }
  }
  std::string summary = "no report";
  if (!doc.is_discarded()) {
    summary = std::to_string(doc["summary"]["passed"].get<int>()) + "/" + std::to_string(doc["summary"]["total"].get<int>()) +
              " passed";
  }
  return {p.code == 0 && p.seconds < 300.0,
          summary + ", exit " + std::to_string(p.code) + ", " + fmt(p.seconds) + " s"};
}

}  // namespace

int main(int argc, char** argv) {
  if (argc < 2) {
    std::cerr << "usage: mzv_acceptance <path-to-mzv> [--expect-fail N]...\n";
    return 2;
  }
  const std::string exe = argv[1];
  std::set<int> expected_failures;
  for (int i = 2; i + 1 < argc; i += 2) {
    if (std::string(argv[i]) == "--expect-fail") expected_failures.insert(std::atoi(argv[i + 1]));
  }

  PrecisionScope scope(192);
  std::vector<Verdict> verdicts(15);
  // The full run comes first: criteria 3 to 12 read its report.
  verdicts[14] = criterion14(exe);
  verdicts[1] = criterion1();
  verdicts[2] = criterion2();
  verdicts[3] = criterion3();
  verdicts[4] = criterion4();
  verdicts[5] = criterion5();
  verdicts[6] = criterion6();
  verdicts[7] = criterion7();
  verdicts[8] = criterion8();
  verdicts[9] = criterion9();
  verdicts[10] = criterion10();
  verdicts[11] = criterion11();
  verdicts[12] = criterion12();
  verdicts[13] = criterion13(exe);

  std::set<int> failed;
  for (int i = 1; i <= 14; ++i) {
    std::cout << (verdicts[i].pass ? "PASS" : "FAIL") << " criterion " << i << ": " << verdicts[i].detail << '\n';
    if (!verdicts[i].pass) failed.insert(i);
  }
  std::filesystem::remove_all(scratch_dir());
  if (failed == expected_failures) {
    std::cout << "failing criteria match the documented expectation (" << failed.size() << " expected)\n";
    return 0;
  }
  std::cout << "failing criteria differ from the documented expectation\n";
  return 1;
}
