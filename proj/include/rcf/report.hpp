#pragma once

#include <iosfwd>
#include <string>

#include "rcf/verifier.hpp"

namespace rcf {

enum class ReportFormat { text, json, csv };

/// DomainError for anything but "text", "json" or "csv".
ReportFormat parse_report_format(std::string_view name);

/// {"results": [{"id", "params", "residual", "tolerance", "status", "lhs", "rhs"[, "error"]}],
///  "summary": {"total", "pass", "fail", "known_discrepancy", "surprise_pass", "precision_bits"}}.
/// Reals are decimal strings.
std::string to_json(const SuiteReport& report);
/// Header row, then one row per result with the same columns as the JSON records.
std::string to_csv(const SuiteReport& report);
/// One aligned line per result followed by the summary line.
std::string to_text(const SuiteReport& report);

void write_report(std::ostream& out, const SuiteReport& report, ReportFormat format);

}  // namespace rcf
