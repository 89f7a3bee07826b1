#pragma once

#include <functional>
#include <map>
#include <string>
#include <vector>

#include "rcf/numerics.hpp"

namespace rcf {

/// One named exact parameter, e.g. r = 1/4 or a/pi = 2.
struct Binding {
  std::string name;
  Ratio value;
};
using Params = std::vector<Binding>;

std::string to_string(const Params& params);

/// One side-by-side comparison. `scale` is the magnitude of the largest term
/// that cancels inside the expression (0 when nothing cancels); the residual
/// is |lhs - rhs| / max(1, |rhs|, scale).
struct Evaluation {
  Real lhs;
  Real rhs;
  Real scale = 0;
};

Real residual_of(const Evaluation& e);

/// A check may compare several displays at once; its residual is the worst one.
using Evaluator = std::function<std::vector<Evaluation>(const Params&, const PrecisionContext&)>;

enum class Expectation { pass, known_discrepancy };
enum class Status { pass, fail, known_discrepancy_confirmed, surprise_pass };

std::string_view to_string(Status s);

struct IdentityCheck {
  std::string id;
  std::string description;
  std::string anchor;  ///< LaTeX fragment of the display being checked
  std::vector<std::string> tags;
  std::vector<Params> grid;
  int tolerance_factor = 100;  ///< tolerance = factor * eps
  Expectation expected = Expectation::pass;
  Evaluator evaluate;
};

struct CheckResult {
  std::string id;
  Params params;
  Real residual;
  Real tolerance;
  Status status;
  Real lhs;
  Real rhs;
  std::string error;  ///< set when evaluation threw; status is then FAIL
};

class Catalog {
 public:
  /// CatalogError on duplicate id, empty grid, empty anchor or missing evaluator.
  void add(IdentityCheck check);
  /// `alias` resolves to the existing check `target`.
  void alias(const std::string& alias, const std::string& target);

  /// UnknownCheck if absent.
  const IdentityCheck& find(const std::string& id) const;
  bool contains(const std::string& id) const;

  const std::vector<IdentityCheck>& checks() const noexcept { return checks_; }

  /// Every identity of the fraction family, sorted by id.
  static const Catalog& standard();

 private:
  std::vector<IdentityCheck> checks_;
  std::map<std::string, std::size_t> index_;
};

/// One result per grid binding, in grid order.
std::vector<CheckResult> run_check(const std::string& id, const PrecisionContext& ctx,
                                   const Catalog& catalog = Catalog::standard());
std::vector<CheckResult> run_check(const IdentityCheck& check, const PrecisionContext& ctx);

struct SuiteSummary {
  std::size_t total = 0;
  std::size_t pass = 0;
  std::size_t fail = 0;
  std::size_t known_discrepancy = 0;
  std::size_t surprise_pass = 0;
};

struct SuiteReport {
  int precision_bits = 0;
  std::vector<CheckResult> results;  ///< ordered by check id, then grid order
  SuiteSummary summary;
  bool success() const noexcept { return summary.fail == 0; }
};

/// `filter` is "all" (or empty), a tag, or an exact check id.
bool matches(const IdentityCheck& check, const std::string& filter);

SuiteReport run_suite(const std::string& filter, const PrecisionContext& ctx,
                      const Catalog& catalog = Catalog::standard());

}  // namespace rcf
