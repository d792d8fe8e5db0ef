#pragma once

#include <functional>
#include <map>
#include <memory>
#include <mutex>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "mzv/eval_result.hpp"
#include "mzv/closed_form.hpp"
#include "mzv/index.hpp"
#include "mzv/quadrature.hpp"
#include "mzv/series.hpp"

namespace mzv::verify {

/// Suite tags in registry order.
std::span<const std::string_view> suite_names();
bool is_suite(std::string_view name);

/// One top-level evaluation in a plan: a method applied to a named object
/// (an index text, a family call, an integrand id, ...).
struct PlanStep {
  Method method;
  std::string object;

  friend bool operator==(const PlanStep&, const PlanStep&) = default;
};

using Plan = std::vector<PlanStep>;

std::string describe(const Plan& plan);

/// Per-run memo of numeric evaluations, keyed by
/// "<object>|<method>|<precision>|<cutoff>". Thread-safe.
class EvalMemo {
 public:
  EvalResult get_or_compute(const std::string& key, const std::function<EvalResult()>& compute);
  std::size_t size() const;

 private:
  mutable std::mutex mutex_;
  std::map<std::string, EvalResult> values_;
};

/// What a case needs while evaluating: options, precision and the memo.
class EvalContext {
 public:
  EvalContext(series::TruncationOptions opts, int precision, std::shared_ptr<EvalMemo> memo);

  const series::TruncationOptions& options() const noexcept { return opts_; }
  int precision() const noexcept { return precision_; }

  /// eval_auto of an index (accelerated when the leading entry is barred).
  EvalResult series(const SignedIndex& index);
  /// Same, from a canonical or parseable index text.
  EvalResult series(std::string_view index_text);
  /// Forces the direct pass.
  EvalResult direct(const SignedIndex& index);
  /// Li_{s}(1/2) by geometric summation.
  EvalResult mpl_half(const std::vector<int>& exponents);
  EvalResult ln2();
  /// expr_eval of a family's closed form (not canonicalized).
  EvalResult closed(symbolic::Family family, const std::vector<int>& params);
  EvalResult quad(const quadrature::IntegrandSpec& spec);

 private:
  EvalResult memo(const std::string& object, std::string_view method, const std::function<EvalResult()>& compute);

  series::TruncationOptions opts_;
  int precision_;
  std::shared_ptr<EvalMemo> memo_;
};

struct Side {
  Plan plan;
  std::function<EvalResult(EvalContext&)> eval;
};

struct IdentityCase {
  std::string id;
  std::string suite;
  std::map<std::string, int> params;
  Side lhs;
  Side rhs;
  double tolerance = 1e-9;
  /// When set, replaces the generic lhs/rhs evaluation (exact and delegated
  /// checks); it must return a complete record apart from id, suite and ms.
  std::function<VerdictRecord(EvalContext&, double tolerance)> custom;
};

/// Deterministic list of every case; ids are unique.
const std::vector<IdentityCase>& registry();

/// Cases of one suite, or all of them for "all". Throws UnknownSuiteError.
std::vector<const IdentityCase*> select_cases(std::string_view selector);

/// True when no lhs step has the same method and object as an rhs step;
/// the ln 2 coefficient step is exempt.
bool plans_independent(const IdentityCase& c);

}  // namespace mzv::verify
