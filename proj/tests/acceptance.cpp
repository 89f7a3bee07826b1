// Acceptance criteria 1-9: one PASS/FAIL line each, exit status 1 if any fails.

#include <cstdio>
#include <functional>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include "rcf/cfrac.hpp"
#include "rcf/closed_forms.hpp"
#include "rcf/elliptic.hpp"
#include "rcf/verifier.hpp"

using namespace rcf;

namespace {

const PrecisionContext ctx;
const std::vector<Ratio> grid{Ratio(1, 4), Ratio(1, 2), Ratio(1), Ratio(2), Ratio(3), Ratio(4)};

Real rel(const Real& a, const Real& b) { return abs(a - b) / std::max(Real(1), abs(b)); }

/// Collects the worst residual and any notes of one criterion.
struct Tally {
  Real worst = 0;
  bool ok = true;
  std::vector<std::string> notes;

  void bound(const std::string& what, const Real& residual, const Real& limit) {
    if (residual > worst) worst = residual;
    if (!(residual <= limit)) {
      ok = false;
      notes.push_back(what + " residual " + to_sci(residual, 3) + " > " + to_sci(limit, 1));
    }
  }
  void require(const std::string& what, bool cond) {
    if (!cond) {
      ok = false;
      notes.push_back(what);
    }
  }
};

int failures = 0;

void report(int n, const std::string& title, const std::function<void(Tally&)>& body) {
  Tally t;
  try {
    PrecisionScope scope(ctx);
    body(t);
  } catch (const std::exception& e) {
    t.ok = false;
    t.notes.push_back(std::string("exception: ") + e.what());
  }
  if (!t.ok) ++failures;
  std::printf("criterion %d: %s  %s (worst residual %s)\n", n, t.ok ? "PASS" : "FAIL", title.c_str(),
              to_sci(t.worst, 3).c_str());
  for (const std::string& note : t.notes) std::printf("    %s\n", note.c_str());
}

Real poly_residual(const RealPoly& p, const Real& x) { return abs(p(x)) / std::max(Real(1), p.scale(x)); }

}  // namespace

int main() {
  report(1, "golden evaluations", [](Tally& t) {
    const Real s2 = sqrt(Real(2)), s5 = sqrt(Real(5));
    const Real R = fraction_direct(FractionKind::RR, nome_from_r(Ratio(4), ctx), ctx);
    t.bound("R(e^-2pi)", abs(R - (Real(-1) / 2 - s5 / 2 + sqrt((5 + s5) / 2))), Real("1e-60"));
    const Real h1 = fraction_direct(FractionKind::H, nome_from_r(Ratio(1, 4), ctx), ctx);
    t.bound("H(e^-pi/2)", abs(h1 - sqrt(1 + 2 * s2 - 2 * sqrt(2 + s2))), Real("1e-60"));
    const Real h2 = fraction_direct(FractionKind::H, nome_from_r(Ratio(1, 2), ctx), ctx);
    t.bound("H(e^-pi sqrt2/2)", abs(h2 - sqrt(3 + 2 * s2 - 2 * sqrt(4 + 3 * s2))), Real("1e-60"));
    const Real Q = fraction_direct(FractionKind::Q, nome_from_r(Ratio(2), ctx), ctx);
    const Real Qg = (s2 - 1) / sqrt(2 * pi()) * gamma(Real(9) / 8, ctx) / gamma(Real(5) / 8, ctx);
    t.bound("Q(e^-pi sqrt2)", abs(Q - Qg), Real("1e-40"));
    const Real dR = rr_deriv_closed(Ratio(4), ctx).eta;
    const Real dRg = 8 * sqrt(Real(2) / 5 * (9 + 5 * s5 - 2 * sqrt(50 + 22 * s5))) * exp(2 * pi()) / pow(pi(), 3) *
                     pow(gamma(Real(5) / 4, ctx), 4);
    t.bound("R'(e^-2pi)", rel(dR, dRg), Real("1e-40"));
    const Real V = fraction_direct(FractionKind::V, nome_from_r(Ratio(2), ctx), ctx);
    const Real T = sqrt(1 - 8 * V * V * V);
    t.bound("cubic product 5832", rel(pow(3 - T, 3) * pow(3 + T, 3) / ((1 - T) * (1 + T)), Real(5832)),
            Real("1e-40"));
  });

  report(2, "route agreement (direct, oracle, closed) on r in {1/4,...,4}", [](Tally& t) {
    for (FractionKind kind : all_fraction_kinds) {
      for (const Ratio& r : grid) {
        const Nome q = nome_from_r(r, ctx);
        const Real a = fraction_direct(kind, q, ctx), b = fraction_oracle(kind, q, ctx),
                   c = fraction_closed(kind, r, ctx);
        const std::string what = std::string(to_string(kind)) + " r=" + to_string(r);
        t.bound(what, std::max({rel(a, b), rel(a, c), rel(b, c)}), Real("1e-50"));
      }
    }
  });

  report(3, "polynomial residuals at r in {1, 2} (x-polynomial as printed, x = 1/sqrt(k_25r))", [](Tally& t) {
    for (const Ratio& r : {Ratio(1), Ratio(2)}) {
      const std::string at = " r=" + to_string(r);
      const Modulus m = modulus_from_r(r, ctx).modulus;
      const Modulus m25 = modulus_from_r(r * Ratio(25), ctx).modulus;
      const Real kp2 = m.kprime * m.kprime;
      const RRParam rp = rr_param(r, ctx);
      t.bound("multiplier quintic" + at, poly_residual(m5_polynomial(m), ellK(m25, ctx) / ellK(m, ctx)), Real("1e-45"));
      t.bound("p-polynomial" + at, poly_residual(p_polynomial(m.k, kp2), rp.p), Real("1e-45"));
      t.bound("x-polynomial" + at, poly_residual(x_polynomial(m.k, kp2, true), 1 / sqrt(m25.k)), Real("1e-45"));
      const Residual g = g_sextic_residual(r, ctx);
      t.bound("G-sextic" + at, abs(g.value) / std::max(Real(1), g.scale), Real("1e-45"));
      t.bound("w-sextic" + at, poly_residual(w_sextic(m.k), sqrt(m.k * m25.k)), Real("1e-45"));
      // informational: the x-polynomial with 15 k^2 at x^4, at x = sqrt(k/w)
      const Real corrected = poly_residual(x_polynomial(m.k, kp2, false), rp.x);
      t.notes.push_back("x-polynomial with 15k^2 at x^4, at x = sqrt(k/w)" + at + ": residual " +
                        to_sci(corrected, 3));
    }
  });

  report(4, "L = 1/3 end to end", [](Tally& t) {
    const Theorem22 th = theorem22_chain(Real(1) / 3, ctx);
    const Real w = sqrt(Real(11) / 78) / 3;
    const Real z = -4 * root(Real(11) / 13, 6) + root(Real(13) / 11, 6);
    const Real rho = z / sqrt(Real(6)) + sqrt(4 + 2 * z * z / 3) / 2;
    t.bound("w", rel(th.w, w), Real("1e-50"));
    t.bound("k_25r", rel(th.k25, w * rho * rho), Real("1e-50"));
    t.bound("k_r", rel(th.k, w / (rho * rho)), Real("1e-50"));
    const Real R_literal = rr_from_invariant_literal(th.A_L, ctx);
    t.bound("R from A_L", rel(R_literal, th.R_direct), Real("1e-40"));
    t.notes.push_back("induced r = " + to_sci(th.r, 20));
  });

  report(5, "derivative: eta form vs elliptic form, both vs central difference", [](Tally& t) {
    for (const Ratio& r : {Ratio(1), Ratio(4)}) {
      const std::string at = " r=" + to_string(r);
      const RRDerivative d = rr_deriv_closed(r, ctx);
      t.bound("eta vs elliptic" + at, rel(d.eta, d.elliptic), Real("1e-50"));
      const FdDerivative fd = rr_derivative_fd(nome_from_r(r, ctx).value(), ctx);
      t.bound("eta vs central difference" + at, abs(d.eta - fd.value) / abs(d.eta), Real("1e-8"));
      t.bound("elliptic vs central difference" + at, abs(d.elliptic - fd.value) / abs(d.elliptic), Real("1e-8"));
    }
  });

  report(6, "modular-equation suite", [](Tally& t) {
    for (const char* id : {"k25_modular_18", "h_thm33_59", "k9_modular_61", "corollary41_73", "duplication_74",
                           "cubic_modular_76", "k81_prop43_77", "corollary42_78", "q_modular_thm53_87", "h_thm32",
                           "h_corollary_58", "k_reflection_57_58"}) {
      for (const CheckResult& r : run_check(id, ctx)) {
        const std::string what = std::string(id) + " " + to_string(r.params);
        t.require(what + " status " + std::string(to_string(r.status)) + " " + r.error, r.status == Status::pass);
        t.bound(what, r.residual, Real("1e-50"));
      }
    }
  });

  report(7, "known discrepancies reported without failing the suite", [](Tally& t) {
    const CheckResult a = run_check("cubic_eval_a", ctx).at(0);
    t.require("cubic evaluation a status " + std::string(to_string(a.status)),
              a.status == Status::known_discrepancy_confirmed);
    t.notes.push_back("cubic evaluation a: printed " + to_fixed(a.rhs, 7) + ", computed V(e^-pi) " + to_fixed(a.lhs, 7));
    for (const char* id : {"h_eq60", "h_eq60_squared"}) {
      std::map<Status, int> counts;
      for (const CheckResult& r : run_check(id, ctx)) ++counts[r.status];
      std::string line = std::string(id) + ":";
      for (const auto& [s, n] : counts) line += " " + std::string(to_string(s)) + " x" + std::to_string(n);
      t.notes.push_back(line);
    }
    t.require("printed sqrt(k') reading not confirmed as a discrepancy",
              run_check("h_eq60", ctx).at(0).status == Status::known_discrepancy_confirmed);
    t.require("squared sqrt(k') reading does not pass", run_check("h_eq60_squared", ctx).at(0).status == Status::pass);
    const SuiteReport all = run_suite("all", ctx);
    t.require("full suite reports a failure", all.success());
    t.notes.push_back("full suite: " + std::to_string(all.summary.pass) + " pass, " +
                      std::to_string(all.summary.known_discrepancy) + " known discrepancy, " +
                      std::to_string(all.summary.fail) + " fail");
  });

  report(8, "precision ladder 128 -> 256 bits", [](Tally& t) {
    const SuiteReport lo = run_suite("all", ctx.with_bits(128));
    const SuiteReport hi = run_suite("all", ctx);
    t.require("result counts differ", lo.results.size() == hi.results.size());
    const Real floor = pow2(-128), factor = pow2(-60);
    for (std::size_t i = 0; i < std::min(lo.results.size(), hi.results.size()); ++i) {
      const CheckResult& a = lo.results[i];
      const CheckResult& b = hi.results[i];
      const std::string what = b.id + " " + to_string(b.params);
      t.require(what + " status changed", a.status == b.status);
      if (Catalog::standard().find(b.id).expected != Expectation::pass) continue;
      const Real limit = factor * std::max(a.residual, floor);
      t.require(what + " residual " + to_sci(b.residual, 3) + " did not shrink below " + to_sci(limit, 3),
                b.residual <= limit);
      if (b.residual > t.worst) t.worst = b.residual;
    }
  });

  report(9, "property suite", [](Tally& t) {
    for (const Ratio& r : grid) {
      const std::string at = " r=" + to_string(r);
      const Modulus m = modulus_from_r(r, ctx).modulus;
      t.bound("k^2 + k'^2 - 1" + at, abs(m.k * m.k + m.kprime * m.kprime - 1), ctx.eps());
      const Modulus d = modulus_from_r(r * Ratio(4), ctx).modulus;
      t.bound("Landen" + at, rel(landen_4r(m, ctx).k, d.k), ctx.eps());
    }
    for (const char* s : {"0.05", "0.1", "0.3", "0.5", "0.7", "0.9"}) {
      const Nome q = Nome::from_value(Real(s));
      t.bound(std::string("Euler q=") + s, abs(phi_cap(q, ctx) * qpoch_inf(q.value(), q.pow(2), ctx) - 1), ctx.eps());
      const Real t2 = pow(theta(2, q, ctx), 4), t3 = pow(theta(3, q, ctx), 4), t4 = pow(theta(4, q, ctx), 4);
      t.bound(std::string("Jacobi q=") + s, rel(t3, t2 + t4), ctx.eps());
    }
    for (const char* s : {"1e-6", "1e-10", "1e-20"}) {
      const Nome q = Nome::from_value(Real(s));
      const Real x = q.value();
      t.require(std::string("R ~ q^(1/5) at ") + s,
                abs(fraction_direct(FractionKind::RR, q, ctx) / q.power(Ratio(1, 5)) - 1) <= 2 * x);
      t.require(std::string("H ~ q^(1/2) at ") + s,
                abs(fraction_direct(FractionKind::H, q, ctx) / q.power(Ratio(1, 2)) - 1) <= 2 * x);
      t.require(std::string("V ~ q^(1/3) at ") + s,
                abs(fraction_direct(FractionKind::V, q, ctx) / q.power(Ratio(1, 3)) - 1) <= 2 * x);
    }
  });

  std::printf("%d of 9 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
