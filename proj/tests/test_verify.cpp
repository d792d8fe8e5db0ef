#include <json.hpp>
#include <set>
#include <sstream>

#include "mzv/errors.hpp"
#include "mzv/registry.hpp"
#include "mzv/report.hpp"
#include "mzv/runner.hpp"
#include "support.hpp"

namespace mzv::verify {
namespace {

TEST(Registry, ShapeAndUniqueIds) {
  const auto& cases = registry();
  EXPECT_GE(cases.size(), 150u);
  std::set<std::string> ids;
  for (const auto& c : cases) {
    EXPECT_TRUE(ids.insert(c.id).second) << c.id;
    EXPECT_TRUE(is_suite(c.suite)) << c.id;
    EXPECT_EQ(c.id.rfind(c.suite + "/", 0), 0u) << c.id;
    EXPECT_FALSE(c.lhs.plan.empty()) << c.id;
    EXPECT_FALSE(c.rhs.plan.empty()) << c.id;
    EXPECT_TRUE(c.custom || (c.lhs.eval && c.rhs.eval)) << c.id;
  }
}

TEST(Registry, SidesUseIndependentPaths) {
  for (const auto& c : registry()) EXPECT_TRUE(plans_independent(c)) << c.id << ": " << describe(c.lhs.plan) << " | " << describe(c.rhs.plan);
}

TEST(Registry, SuiteSelection) {
  EXPECT_EQ(select_cases("euler").size(), 7u);
  EXPECT_EQ(select_cases("stirling").size(), 30u);
  EXPECT_EQ(select_cases("thm3_3").size(), 9u);
  EXPECT_EQ(select_cases("all").size(), registry().size());
  EXPECT_THROW(select_cases("nosuch"), UnknownSuiteError);
}

TEST(Memo, ComputesOnce) {
  EvalMemo memo;
  int calls = 0;
  const auto f = [&] {
    ++calls;
    return EvalResult{BigReal(1L), BigReal(0L), Method::direct, 1};
  };
  memo.get_or_compute("k", f);
  memo.get_or_compute("k", f);
  EXPECT_EQ(calls, 1);
  EXPECT_EQ(memo.size(), 1u);
}

TEST(Settle, HonestyBoundCapsLargeErrorEstimates) {
  VerdictRecord r;
  r.lhs = BigReal(1L);
  r.rhs = BigReal(1L) + BigReal(1e-3);
  r.lhs_err = BigReal(1L);
  r.rhs_err = BigReal(1L);
  r.tolerance = BigReal(1e-9);
  settle(r);
  EXPECT_FALSE(r.pass);
  r.rhs = BigReal(1L) + BigReal(1e-12);
  settle(r);
  EXPECT_TRUE(r.pass);
  r.note = "raised";
  settle(r);
  EXPECT_FALSE(r.pass);
}

TEST(Runner, SuitePassesAndTalliesMatch) {
  const Report report = run_suite("eq2_8");
  EXPECT_EQ(report.summary.total, 7);
  EXPECT_EQ(report.summary.passed, 7);
  EXPECT_EQ(report.summary.failed, 0);
  for (const auto& r : report.cases) EXPECT_TRUE(r.pass) << r.id;
}

TEST(Runner, DeterministicAcrossJobCounts) {
  RunOptions one;
  RunOptions four;
  four.jobs = 4;
  const Report a = run_suite("thm2_4", one);
  const Report b = run_suite("thm2_4", four);
  ASSERT_EQ(a.cases.size(), b.cases.size());
  for (std::size_t i = 0; i < a.cases.size(); ++i) {
    EXPECT_EQ(a.cases[i].id, b.cases[i].id);
    EXPECT_EQ(a.cases[i].lhs.to_exact_string(), b.cases[i].lhs.to_exact_string());
    EXPECT_EQ(a.cases[i].rhs.to_exact_string(), b.cases[i].rhs.to_exact_string());
    EXPECT_EQ(a.cases[i].diff.to_exact_string(), b.cases[i].diff.to_exact_string());
  }
}

TEST(Report, JsonSchema) {
  const Report report = run_suite("stirling");
  const auto doc = nlohmann::json::parse(to_json(report));
  ASSERT_TRUE(doc.contains("config"));
  EXPECT_EQ(doc["config"]["precision"], 192);
  EXPECT_EQ(doc["config"]["cutoff"], 100000);
  ASSERT_EQ(doc["cases"].size(), 30u);
  int passed = 0;
  for (const auto& c : doc["cases"]) {
    for (const char* key : {"id", "suite", "lhs", "lhs_err", "rhs", "rhs_err", "diff", "ms", "note"}) {
      ASSERT_TRUE(c.contains(key)) << key;
      EXPECT_TRUE(c[key].is_string()) << key;
    }
    EXPECT_TRUE(c["pass"].is_boolean());
    passed += c["pass"].get<bool>();
  }
  EXPECT_EQ(doc["summary"]["total"], 30);
  EXPECT_EQ(doc["summary"]["passed"], passed);
  EXPECT_EQ(doc["summary"]["failed"], 30 - passed);
}

TEST(Report, CsvAndText) {
  const Report report = run_suite("euler");
  std::istringstream csv(to_csv(report));
  std::string line;
  std::getline(csv, line);
  EXPECT_EQ(line, "id,suite,lhs,lhs_err,rhs,rhs_err,diff,pass,ms,note");
  int rows = 0;
  while (std::getline(csv, line)) ++rows;
  EXPECT_EQ(rows, 7);
  EXPECT_NE(to_text(report).find("7/7 passed"), std::string::npos);
  EXPECT_THROW(parse_report_format("xml"), SyntaxError);
}

}  // namespace
}  // namespace mzv::verify
