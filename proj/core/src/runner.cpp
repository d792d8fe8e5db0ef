#include "mzv/runner.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <memory>
#include <thread>

#include "mzv/registry.hpp"

namespace mzv::verify {
namespace {

VerdictRecord run_case(const IdentityCase& c, EvalContext& ctx, double tolerance) {
  if (c.custom) return c.custom(ctx, tolerance);
  VerdictRecord r;
  const EvalResult lhs = c.lhs.eval(ctx);
  const EvalResult rhs = c.rhs.eval(ctx);
  r.lhs = lhs.value;
  r.lhs_err = lhs.err;
  r.rhs = rhs.value;
  r.rhs_err = rhs.err;
  r.tolerance = BigReal(tolerance);
  settle(r);
  return r;
}

}  // namespace

Report run_suite(std::string_view selector, const RunOptions& options) {
  const auto cases = select_cases(selector);
  Report report;
  report.selector = std::string(selector);
  report.options = options;
  report.cases.resize(cases.size());

  auto memo = std::make_shared<EvalMemo>();
  std::atomic<std::size_t> next{0};
  const auto worker = [&] {
    PrecisionScope scope(options.precision);
    EvalContext ctx(options.trunc, options.precision, memo);
    for (std::size_t i = next++; i < cases.size(); i = next++) {
      const IdentityCase& c = *cases[i];
      const auto start = std::chrono::steady_clock::now();
      VerdictRecord r;
      try {
        r = run_case(c, ctx, c.tolerance * options.tolerance_scale);
      } catch (const std::exception& e) {
        r = VerdictRecord{};
        r.note = e.what();
        r.pass = false;
      }
      r.id = c.id;
      r.suite = c.suite;
      r.ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start).count();
      report.cases[i] = std::move(r);
    }
  };

  int jobs = options.jobs > 0 ? options.jobs : static_cast<int>(std::max(1u, std::thread::hardware_concurrency()));
  jobs = std::min<int>(jobs, static_cast<int>(std::max<std::size_t>(1, cases.size())));
  if (jobs == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (int j = 0; j < jobs; ++j) pool.emplace_back(worker);
  }

  for (const auto& r : report.cases) {
    ++report.summary.total;
    ++(r.pass ? report.summary.passed : report.summary.failed);
  }
  return report;
}

}  // namespace mzv::verify
