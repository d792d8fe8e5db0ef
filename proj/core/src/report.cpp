#include "mzv/report.hpp"

#include <cstdio>
#include <sstream>

#include <json.hpp>

#include "mzv/errors.hpp"

#ifndef MZV_VERSION
#define MZV_VERSION "0.0.0"
#endif

namespace mzv::verify {
namespace {

constexpr int kErrDigits = 3;

struct Row {
  std::string lhs, lhs_err, rhs, rhs_err, diff, ms;
};

Row format_row(const VerdictRecord& r, int digits) {
  char ms[32];
  std::snprintf(ms, sizeof ms, "%.3f", r.ms);
  return {r.lhs.to_scientific(digits),      r.lhs_err.to_scientific(kErrDigits), r.rhs.to_scientific(digits),
          r.rhs_err.to_scientific(kErrDigits), r.diff.to_scientific(kErrDigits),    ms};
}

std::string csv_field(const std::string& s) {
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + "\"";
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  if (name == "text") return ReportFormat::text;
  throw SyntaxError("unknown report format: " + std::string(name));
}

std::string_view library_version() noexcept { return MZV_VERSION; }

std::string to_json(const Report& report) {
  const int digits = trusted_digits(report.options.precision);
  nlohmann::ordered_json doc;
  doc["config"] = {
      {"suite", report.selector},
      {"precision", report.options.precision},
      {"cutoff", report.options.trunc.cutoff},
      {"richardson_levels", report.options.trunc.richardson_levels},
      {"accel_terms", report.options.trunc.accel_terms},
      {"tolerance_scale", report.options.tolerance_scale},
      {"version", std::string(library_version())},
  };
  auto cases = nlohmann::ordered_json::array();
  for (const auto& r : report.cases) {
    const Row row = format_row(r, digits);
    cases.push_back({{"id", r.id},
                     {"suite", r.suite},
                     {"lhs", row.lhs},
                     {"lhs_err", row.lhs_err},
                     {"rhs", row.rhs},
                     {"rhs_err", row.rhs_err},
                     {"diff", row.diff},
                     {"pass", r.pass},
                     {"ms", row.ms},
                     {"note", r.note}});
  }
  doc["cases"] = std::move(cases);
  doc["summary"] = {{"total", report.summary.total},
                    {"passed", report.summary.passed},
                    {"failed", report.summary.failed}};
  return doc.dump(2) + "\n";
}

std::string to_csv(const Report& report) {
  const int digits = trusted_digits(report.options.precision);
  std::ostringstream out;
  out << "id,suite,lhs,lhs_err,rhs,rhs_err,diff,pass,ms,note\n";
  for (const auto& r : report.cases) {
    const Row row = format_row(r, digits);
    out << csv_field(r.id) << ',' << r.suite << ',' << row.lhs << ',' << row.lhs_err << ',' << row.rhs << ','
        << row.rhs_err << ',' << row.diff << ',' << (r.pass ? "true" : "false") << ',' << row.ms << ','
        << csv_field(r.note) << '\n';
  }
  return out.str();
}

std::string to_text(const Report& report) {
  std::ostringstream out;
  for (const auto& r : report.cases) {
    char line[256];
    std::snprintf(line, sizeof line, "%-4s %-44s diff %-10s err %-10s %9.1f ms", r.pass ? "ok" : "FAIL",
                  r.id.c_str(), r.diff.to_scientific(kErrDigits).c_str(),
                  (r.lhs_err + r.rhs_err).to_scientific(kErrDigits).c_str(), r.ms);
    out << line;
    if (!r.note.empty()) out << "  (" << r.note << ")";
    out << '\n';
  }
  out << report.summary.passed << "/" << report.summary.total << " passed, " << report.summary.failed
      << " failed\n";
  return out.str();
}

std::string render(const Report& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::json:
      return to_json(report);
    case ReportFormat::csv:
      return to_csv(report);
    case ReportFormat::text:
      return to_text(report);
  }
  return {};
}

}  // namespace mzv::verify
