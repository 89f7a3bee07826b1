#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include <json.hpp>

#include "rcf/report.hpp"
#include "rcf/verifier.hpp"

using namespace rcf;

namespace {

const PrecisionContext ctx;

IdentityCheck constant_check(std::string id, Real lhs, Real rhs, Expectation expected) {
  return IdentityCheck{std::move(id),
                       "constant comparison",
                       "x=y",
                       {"toy"},
                       {{{"r", Ratio(1)}}},
                       100,
                       expected,
                       [lhs, rhs](const Params&, const PrecisionContext&) {
                         return std::vector<Evaluation>{{lhs, rhs, Real(0)}};
                       }};
}

Catalog toy_catalog() {
  PrecisionScope scope(ctx);
  Catalog c;
  c.add(constant_check("b_holds", Real(1), Real(1), Expectation::pass));
  c.add(constant_check("a_breaks", Real(1), Real(2), Expectation::pass));
  c.add(constant_check("c_misprint", Real(1), Real(2), Expectation::known_discrepancy));
  c.add(constant_check("d_misprint_that_holds", Real(3), Real(3), Expectation::known_discrepancy));
  IdentityCheck throwing = constant_check("e_throws", Real(0), Real(0), Expectation::pass);
  throwing.evaluate = [](const Params&, const PrecisionContext&) -> std::vector<Evaluation> {
    throw DomainError("radicand went negative");
  };
  c.add(std::move(throwing));
  return c;
}

}  // namespace

TEST(Residual, RelativeBeyondUnitScale) {
  PrecisionScope scope(ctx);
  EXPECT_EQ(residual_of({Real(3), Real(2), Real(0)}), Real(1) / 2);
  EXPECT_EQ(residual_of({Real("0.5"), Real("0.25"), Real(0)}), Real("0.25"));
  // a cancelling term of size 8 widens the denominator
  EXPECT_EQ(residual_of({Real(1), Real(0), Real(8)}), Real(1) / 8);
}

TEST(Catalog, RejectsDuplicateIdsAndEmptyGrids) {
  PrecisionScope scope(ctx);
  Catalog c;
  c.add(constant_check("x", Real(1), Real(1), Expectation::pass));
  EXPECT_THROW(c.add(constant_check("x", Real(1), Real(1), Expectation::pass)), CatalogError);
  IdentityCheck empty = constant_check("y", Real(1), Real(1), Expectation::pass);
  empty.grid.clear();
  EXPECT_THROW(c.add(std::move(empty)), CatalogError);
  EXPECT_FALSE(c.contains("y"));
  EXPECT_THROW(c.alias("z", "missing"), CatalogError);
}

TEST(RunCheck, UnknownIdThrows) { EXPECT_THROW(run_check("no_such_check", ctx), UnknownCheck); }

TEST(RunCheck, StatusRules) {
  const Catalog c = toy_catalog();
  EXPECT_EQ(run_check("b_holds", ctx, c).at(0).status, Status::pass);
  EXPECT_EQ(run_check("a_breaks", ctx, c).at(0).status, Status::fail);
  EXPECT_EQ(run_check("c_misprint", ctx, c).at(0).status, Status::known_discrepancy_confirmed);
  EXPECT_EQ(run_check("d_misprint_that_holds", ctx, c).at(0).status, Status::surprise_pass);
  const CheckResult thrown = run_check("e_throws", ctx, c).at(0);
  EXPECT_EQ(thrown.status, Status::fail);
  EXPECT_NE(thrown.error.find("radicand"), std::string::npos);
}

TEST(RunSuite, OrderedByIdAndCounted) {
  const Catalog c = toy_catalog();
  const SuiteReport rep = run_suite("all", ctx, c);
  ASSERT_EQ(rep.results.size(), 5u);
  EXPECT_TRUE(std::is_sorted(rep.results.begin(), rep.results.end(),
                             [](const CheckResult& a, const CheckResult& b) { return a.id < b.id; }));
  EXPECT_EQ(rep.summary.pass, 1u);
  EXPECT_EQ(rep.summary.fail, 2u);
  EXPECT_EQ(rep.summary.known_discrepancy, 1u);
  EXPECT_EQ(rep.summary.surprise_pass, 1u);
  EXPECT_FALSE(rep.success());
}

TEST(RunSuite, KnownDiscrepancyAloneDoesNotFail) {
  const Catalog c = toy_catalog();
  const SuiteReport rep = run_suite("c_misprint", ctx, c);
  EXPECT_EQ(rep.summary.total, 1u);
  EXPECT_TRUE(rep.success());
}

TEST(RunSuite, FilterMatchingNothingIsEmptySuccess) {
  const SuiteReport rep = run_suite("no-such-tag", ctx);
  EXPECT_EQ(rep.summary.total, 0u);
  EXPECT_TRUE(rep.success());
}

TEST(StandardCatalog, ContainsEveryNamedCheck) {
  const Catalog& c = Catalog::standard();
  for (const char* id :
       {"rr_rel_5", "rr_rel_6", "bridge_10", "bridge_11", "bridge_12", "k_product_9", "rr_thm21", "rr_thm22_L13",
        "m5_poly_17", "k25_modular_18", "w_param_20_21", "LM_inverse_27_28", "t_defs_29_30", "ML_ratio_31",
        "p_param_32_35", "p_poly_36", "x_poly_37", "G_sextic_39a", "w_sextic_39b", "corollary_40",
        "rr_deriv_13_41", "rr_evals", "h_thm31", "h_eq43", "m_theta_50", "h_thm32", "h_corollary_58",
        "h_thm33_59", "h_eq60", "psi_transforms_54_56", "k_reflection_57_58", "h_evals", "k9_modular_61",
        "v_lemma41", "v_W_67_69", "v_thm41", "corollary41_73", "duplication_74", "w3_prop42_75",
        "cubic_modular_76", "k81_prop43_77", "corollary42_78", "cubic_eval_a", "cubic_eval_b_5832", "s_thm51",
        "q_thm52", "q_eval_gamma", "q_modular_thm53_87", "euler_cf_49", "h_reflection_thm32"})
    EXPECT_TRUE(c.contains(id)) << id;
}

TEST(StandardCatalog, ReflectionAtSelfDualPoint) {
  const std::vector<CheckResult> res = run_check("h_reflection_thm32", ctx);
  const auto at_pi = std::find_if(res.begin(), res.end(), [](const CheckResult& r) {
    return r.params.at(0).value == Ratio(1);
  });
  ASSERT_NE(at_pi, res.end());
  EXPECT_EQ(at_pi->status, Status::pass);
  EXPECT_EQ(at_pi->rhs, 8);
}

TEST(StandardCatalog, CubicEvaluationIsKnownDiscrepancy) {
  PrecisionScope scope(ctx);
  const CheckResult r = run_check("cubic_eval_a", ctx).at(0);
  EXPECT_EQ(r.status, Status::known_discrepancy_confirmed);
  EXPECT_LT(abs(r.lhs - Real("0.3358093337")), Real("1e-9"));
  EXPECT_LT(abs(r.rhs - Real("0.0954226815")), Real("1e-9"));
}

TEST(StandardCatalog, FullSuiteHasNoFailures) {
  const SuiteReport rep = run_suite("all", ctx);
  for (const CheckResult& r : rep.results)
    EXPECT_NE(r.status, Status::fail) << r.id << " " << to_string(r.params) << " " << r.error;
  EXPECT_EQ(rep.summary.surprise_pass, 0u);
  std::set<std::string> discrepancies;
  for (const CheckResult& r : rep.results)
    if (r.status == Status::known_discrepancy_confirmed) discrepancies.insert(r.id);
  EXPECT_EQ(discrepancies, (std::set<std::string>{"bridge_10_printed", "cubic_eval_a", "h_eq60",
                                                  "m_theta_50_printed", "r_from_k25_printed",
                                                  "x_poly_37_printed"}));
  EXPECT_TRUE(rep.success());
}

TEST(StandardCatalog, HSuite) {
  const SuiteReport rep = run_suite("h", ctx);
  std::set<std::string> ids;
  for (const CheckResult& r : rep.results) ids.insert(r.id);
  for (const char* id : {"h_thm31", "h_thm32", "h_thm33_59", "h_corollary_58", "h_eq43", "h_evals"})
    EXPECT_TRUE(ids.count(id)) << id;
  EXPECT_EQ(rep.summary.fail, 0u);
  EXPECT_TRUE(rep.success());
}

TEST(StandardCatalog, EveryEntryHasAnchorAndTags) {
  for (const IdentityCheck& c : Catalog::standard().checks()) {
    EXPECT_FALSE(c.anchor.empty()) << c.id;
    EXPECT_FALSE(c.tags.empty()) << c.id;
    EXPECT_FALSE(c.grid.empty()) << c.id;
  }
}

TEST(Report, JsonShapeAndSummary) {
  const SuiteReport rep = run_suite("v", ctx);
  const auto doc = nlohmann::json::parse(to_json(rep));
  ASSERT_TRUE(doc.contains("results"));
  ASSERT_EQ(doc["results"].size(), rep.results.size());
  for (const auto& rec : doc["results"]) {
    for (const char* key : {"id", "params", "residual", "tolerance", "status"}) EXPECT_TRUE(rec.contains(key)) << key;
    EXPECT_TRUE(rec["residual"].is_string());
  }
  const auto& s = doc["summary"];
  EXPECT_EQ(s["total"].get<std::size_t>(), rep.summary.total);
  EXPECT_EQ(s["pass"].get<std::size_t>() + s["fail"].get<std::size_t>() +
                s["known_discrepancy"].get<std::size_t>() + s["surprise_pass"].get<std::size_t>(),
            rep.summary.total);
  EXPECT_EQ(s["precision_bits"].get<int>(), 256);
  EXPECT_EQ(s["fail"].get<int>() == 0, rep.success());
}

TEST(Report, DeterministicAcrossRuns) {
  EXPECT_EQ(to_json(run_suite("q", ctx)), to_json(run_suite("q", ctx)));
}

TEST(Report, CsvHasHeaderAndOneRowPerResult) {
  const SuiteReport rep = run_suite("s", ctx);
  const std::string csv = to_csv(rep);
  EXPECT_EQ(csv.rfind("id,params,residual,tolerance,status", 0), 0u);
  EXPECT_EQ(static_cast<std::size_t>(std::count(csv.begin(), csv.end(), '\n')), rep.results.size() + 1);
}

TEST(Report, FormatNames) {
  EXPECT_EQ(parse_report_format("csv"), ReportFormat::csv);
  EXPECT_THROW(parse_report_format("xml"), DomainError);
}
