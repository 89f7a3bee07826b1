#include "rcf/report.hpp"

#include <algorithm>
#include <ostream>
#include <sstream>

#include <json.hpp>

namespace rcf {

namespace {

constexpr int value_digits = 20;

std::string csv_field(const std::string& s) {
  if (s.find_first_of(",\"\n") == std::string::npos) return s;
  std::string out = "\"";
  for (char c : s) {
    if (c == '"') out += '"';
    out += c;
  }
  return out + '"';
}

}  // namespace

ReportFormat parse_report_format(std::string_view name) {
  if (name == "text") return ReportFormat::text;
  if (name == "json") return ReportFormat::json;
  if (name == "csv") return ReportFormat::csv;
  throw DomainError("unknown report format '" + std::string(name) + "'");
}

std::string to_json(const SuiteReport& report) {
  nlohmann::ordered_json results = nlohmann::ordered_json::array();
  for (const CheckResult& r : report.results) {
    nlohmann::ordered_json params = nlohmann::ordered_json::object();
    for (const Binding& b : r.params) params[b.name] = to_string(b.value);
    nlohmann::ordered_json rec{{"id", r.id},
                               {"params", params},
                               {"residual", to_sci(r.residual)},
                               {"tolerance", to_sci(r.tolerance)},
                               {"status", std::string(to_string(r.status))},
                               {"lhs", to_sci(r.lhs, value_digits)},
                               {"rhs", to_sci(r.rhs, value_digits)}};
    if (!r.error.empty()) rec["error"] = r.error;
    results.push_back(std::move(rec));
  }
  const SuiteSummary& s = report.summary;
  nlohmann::ordered_json doc{{"results", results},
                             {"summary",
                              {{"total", s.total},
                               {"pass", s.pass},
                               {"fail", s.fail},
                               {"known_discrepancy", s.known_discrepancy},
                               {"surprise_pass", s.surprise_pass},
                               {"precision_bits", report.precision_bits}}}};
  return doc.dump(2) + "\n";
}

std::string to_csv(const SuiteReport& report) {
  std::ostringstream out;
  out << "id,params,residual,tolerance,status,lhs,rhs,error\n";
  for (const CheckResult& r : report.results) {
    out << csv_field(r.id) << ',' << csv_field(to_string(r.params)) << ',' << to_sci(r.residual) << ','
        << to_sci(r.tolerance) << ',' << to_string(r.status) << ',' << to_sci(r.lhs, value_digits) << ','
        << to_sci(r.rhs, value_digits) << ',' << csv_field(r.error) << '\n';
  }
  return out.str();
}

std::string to_text(const SuiteReport& report) {
  std::size_t id_width = 2, param_width = 6;
  for (const CheckResult& r : report.results) {
    id_width = std::max(id_width, r.id.size());
    param_width = std::max(param_width, to_string(r.params).size());
  }
  std::ostringstream out;
  for (const CheckResult& r : report.results) {
    std::string status(to_string(r.status));
    status.resize(std::max<std::size_t>(status.size(), 27), ' ');
    std::string id = r.id, params = to_string(r.params);
    id.resize(id_width, ' ');
    params.resize(param_width, ' ');
    out << status << ' ' << id << "  " << params << "  residual " << to_sci(r.residual, 3) << "  tol "
        << to_sci(r.tolerance, 3);
    if (r.status == Status::known_discrepancy_confirmed || r.status == Status::surprise_pass)
      out << "  lhs " << to_sci(r.lhs, 10) << "  rhs " << to_sci(r.rhs, 10);
    if (!r.error.empty()) out << "  error: " << r.error;
    out << '\n';
  }
  const SuiteSummary& s = report.summary;
  out << "total " << s.total << ", pass " << s.pass << ", fail " << s.fail << ", known discrepancy "
      << s.known_discrepancy << ", surprise pass " << s.surprise_pass << " at " << report.precision_bits
      << " bits\n";
  return out.str();
}

void write_report(std::ostream& out, const SuiteReport& report, ReportFormat format) {
  switch (format) {
    case ReportFormat::text: out << to_text(report); break;
    case ReportFormat::json: out << to_json(report); break;
    case ReportFormat::csv: out << to_csv(report); break;
  }
}

}  // namespace rcf
