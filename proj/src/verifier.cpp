#include "rcf/verifier.hpp"

#include <algorithm>

namespace rcf {

std::string to_string(const Params& params) {
  std::string out;
  for (const Binding& b : params) {
    if (!out.empty()) out += ' ';
    out += b.name + '=' + to_string(b.value);
  }
  return out;
}

Real residual_of(const Evaluation& e) {
  const Real denom = std::max({Real(1), abs(e.rhs), abs(e.scale)});
  return abs(e.lhs - e.rhs) / denom;
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::pass: return "PASS";
    case Status::fail: return "FAIL";
    case Status::known_discrepancy_confirmed: return "KNOWN_DISCREPANCY_CONFIRMED";
    case Status::surprise_pass: return "SURPRISE_PASS";
  }
  return "FAIL";
}

// ---------------------------------------------------------------------------

void Catalog::add(IdentityCheck check) {
  if (check.id.empty()) throw CatalogError("check with empty id");
  if (index_.count(check.id)) throw CatalogError("duplicate check id " + check.id);
  if (check.grid.empty()) throw CatalogError("check " + check.id + " has an empty grid");
  if (check.anchor.empty()) throw CatalogError("check " + check.id + " has no anchor");
  if (!check.evaluate) throw CatalogError("check " + check.id + " has no evaluator");
  if (check.tolerance_factor <= 0) throw CatalogError("check " + check.id + " has a non-positive tolerance");
  index_[check.id] = checks_.size();
  checks_.push_back(std::move(check));
}

void Catalog::alias(const std::string& alias, const std::string& target) {
  if (index_.count(alias)) throw CatalogError("alias " + alias + " collides with an existing id");
  const auto it = index_.find(target);
  if (it == index_.end()) throw CatalogError("alias target " + target + " is not in the catalog");
  index_[alias] = it->second;
}

const IdentityCheck& Catalog::find(const std::string& id) const {
  const auto it = index_.find(id);
  if (it == index_.end()) throw UnknownCheck("no check named " + id);
  return checks_[it->second];
}

bool Catalog::contains(const std::string& id) const { return index_.count(id) != 0; }

// ---------------------------------------------------------------------------

std::vector<CheckResult> run_check(const IdentityCheck& check, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real tolerance = check.tolerance_factor * ctx.eps();
  std::vector<CheckResult> out;
  for (const Params& params : check.grid) {
    CheckResult res{check.id, params, Real(0), tolerance, Status::fail, Real(0), Real(0), {}};
    try {
      const std::vector<Evaluation> sides = check.evaluate(params, ctx);
      if (sides.empty()) throw CatalogError("check " + check.id + " produced no comparison");
      bool first = true;
      for (const Evaluation& e : sides) {
        const Real r = residual_of(e);
        // NaN never compares, so force it to the front
        if (first || !(r <= res.residual)) {
          res.residual = r;
          res.lhs = e.lhs;
          res.rhs = e.rhs;
          first = false;
        }
      }
      const bool within = res.residual <= tolerance;
      if (check.expected == Expectation::pass)
        res.status = within ? Status::pass : Status::fail;
      else
        res.status = within ? Status::surprise_pass : Status::known_discrepancy_confirmed;
    } catch (const Error& e) {
      res.status = Status::fail;
      res.error = e.what();
    }
    out.push_back(std::move(res));
  }
  return out;
}

std::vector<CheckResult> run_check(const std::string& id, const PrecisionContext& ctx, const Catalog& catalog) {
  return run_check(catalog.find(id), ctx);
}

bool matches(const IdentityCheck& check, const std::string& filter) {
  if (filter.empty() || filter == "all" || filter == check.id) return true;
  return std::find(check.tags.begin(), check.tags.end(), filter) != check.tags.end();
}

SuiteReport run_suite(const std::string& filter, const PrecisionContext& ctx, const Catalog& catalog) {
  std::vector<const IdentityCheck*> selected;
  for (const IdentityCheck& c : catalog.checks())
    if (matches(c, filter)) selected.push_back(&c);
  if (filter != "all" && !filter.empty() && catalog.contains(filter) && selected.empty())
    selected.push_back(&catalog.find(filter));
  std::sort(selected.begin(), selected.end(),
            [](const IdentityCheck* a, const IdentityCheck* b) { return a->id < b->id; });

  SuiteReport report;
  report.precision_bits = ctx.working_bits();
  for (const IdentityCheck* c : selected) {
    for (CheckResult& r : run_check(*c, ctx)) {
      ++report.summary.total;
      switch (r.status) {
        case Status::pass: ++report.summary.pass; break;
        case Status::fail: ++report.summary.fail; break;
        case Status::known_discrepancy_confirmed: ++report.summary.known_discrepancy; break;
        case Status::surprise_pass: ++report.summary.surprise_pass; break;
      }
      report.results.push_back(std::move(r));
    }
  }
  return report;
}

}  // namespace rcf
