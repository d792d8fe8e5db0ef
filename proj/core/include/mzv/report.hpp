#pragma once

#include <string>
#include <string_view>

#include "mzv/runner.hpp"

namespace mzv::verify {

enum class ReportFormat { json, csv, text };

/// Throws SyntaxError for anything but json, csv or text.
ReportFormat parse_report_format(std::string_view name);

std::string_view library_version() noexcept;

/// {config, cases:[{id, suite, lhs, lhs_err, rhs, rhs_err, diff, pass, ms, note}],
///  summary:{total, passed, failed}}. Numerics are decimal strings.
std::string to_json(const Report& report);
/// Header row plus one row per case, same columns as the JSON cases.
std::string to_csv(const Report& report);
/// Aligned table with a summary line.
std::string to_text(const Report& report);

std::string render(const Report& report, ReportFormat format);

}  // namespace mzv::verify
