// Randomised invariants. The generator is seeded so failures reproduce.

#include <gtest/gtest.h>

#include <random>

#include "rcf/cfrac.hpp"
#include "rcf/closed_forms.hpp"
#include "rcf/elliptic.hpp"
#include "rcf/verifier.hpp"

using namespace rcf;

namespace {

const PrecisionContext ctx;

Real rel(const Real& a, const Real& b) { return abs(a - b) / std::max(Real(1), abs(b)); }

std::vector<Ratio> random_ratios(std::uint32_t seed, int count) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<int> num(1, 40), den(1, 12);
  std::vector<Ratio> out;
  while (static_cast<int>(out.size()) < count) {
    const Ratio r(num(gen), den(gen));
    if (r <= Ratio(8)) out.push_back(r);
  }
  return out;
}

std::vector<Real> random_nomes(std::uint32_t seed, int count, double lo, double hi) {
  std::mt19937 gen(seed);
  std::uniform_int_distribution<int> bits(0, 1 << 20);
  std::vector<Real> out;
  for (int i = 0; i < count; ++i) out.push_back(Real(lo) + (Real(hi) - Real(lo)) * bits(gen) / (1 << 20));
  return out;
}

}  // namespace

TEST(Property, ModulusComplementsSquareToOne) {
  PrecisionScope scope(ctx);
  for (const Ratio& r : random_ratios(11, 25)) {
    const Modulus m = modulus_from_r(r, ctx).modulus;
    EXPECT_LE(abs(m.k * m.k + m.kprime * m.kprime - 1), ctx.eps()) << to_string(r);
  }
}

TEST(Property, LandenStepMatchesDirectModulus) {
  PrecisionScope scope(ctx);
  for (const Ratio& r : random_ratios(12, 20)) {
    const Modulus direct = modulus_from_r(r * Ratio(4), ctx).modulus;
    const Modulus landen = landen_4r(modulus_from_r(r, ctx).modulus, ctx);
    EXPECT_LE(rel(landen.k, direct.k), ctx.eps()) << to_string(r);
    EXPECT_LE(rel(landen.kprime, direct.kprime), ctx.eps()) << to_string(r);
  }
}

TEST(Property, ReflectionSwapsModulusAndComplement) {
  PrecisionScope scope(ctx);
  for (const Ratio& r : random_ratios(13, 15))
    EXPECT_LE(rel(modulus_from_r(r, ctx).modulus.k, modulus_from_r(Ratio(1) / r, ctx).modulus.kprime), ctx.eps())
        << to_string(r);
}

TEST(Property, EulerProductIdentity) {
  PrecisionScope scope(ctx);
  for (const Real& x : random_nomes(14, 20, 0.01, 0.9)) {
    const Nome q = Nome::from_value(x);
    EXPECT_LE(abs(phi_cap(q, ctx) * qpoch_inf(x, q.pow(2), ctx) - 1), ctx.eps()) << x;
  }
}

TEST(Property, JacobiQuarticIdentity) {
  PrecisionScope scope(ctx);
  for (const Real& x : random_nomes(15, 20, 0.01, 0.9)) {
    const Nome q = Nome::from_value(x);
    const Real t2 = pow(theta(2, q, ctx), 4), t3 = pow(theta(3, q, ctx), 4), t4 = pow(theta(4, q, ctx), 4);
    EXPECT_LE(rel(t3, t2 + t4), ctx.eps()) << x;
  }
}

TEST(Property, SmallNomeAsymptotics) {
  PrecisionScope scope(ctx);
  for (const char* s : {"1e-6", "1e-10", "1e-20", "3e-15"}) {
    const Nome q = Nome::from_value(Real(s));
    const Real x = q.value();
    EXPECT_LE(abs(fraction_direct(FractionKind::RR, q, ctx) / q.power(Ratio(1, 5)) - 1), 2 * x) << s;
    EXPECT_LE(abs(fraction_direct(FractionKind::H, q, ctx) / q.power(Ratio(1, 2)) - 1), 2 * x) << s;
    EXPECT_LE(abs(fraction_direct(FractionKind::V, q, ctx) / q.power(Ratio(1, 3)) - 1), 2 * x) << s;
  }
}

TEST(Property, RoutesAgreeOffGrid) {
  PrecisionScope scope(ctx);
  for (const Ratio& r : random_ratios(16, 6)) {
    const Nome q = nome_from_r(r, ctx);
    for (FractionKind kind : all_fraction_kinds) {
      const Real d = fraction_direct(kind, q, ctx);
      EXPECT_LE(rel(d, fraction_oracle(kind, q, ctx)), ctx.eps()) << to_string(kind) << " " << to_string(r);
      EXPECT_LE(rel(d, fraction_closed(kind, r, ctx)), 100 * ctx.eps()) << to_string(kind) << " " << to_string(r);
    }
  }
}

TEST(Property, DirectAndOracleAgreeAtRandomNomes) {
  PrecisionScope scope(ctx);
  for (const Real& x : random_nomes(17, 10, 0.001, 0.6)) {
    const Nome q = Nome::from_value(x);
    for (FractionKind kind : all_fraction_kinds)
      EXPECT_LE(rel(fraction_direct(kind, q, ctx), fraction_oracle(kind, q, ctx)), ctx.eps())
          << to_string(kind) << " q = " << x;
  }
}

TEST(Property, HigherPrecisionRefinesLower) {
  const PrecisionContext lo(128), hi(256);
  PrecisionScope scope(hi);
  for (const Ratio& r : random_ratios(18, 6)) {
    const Nome q_hi = nome_from_r(r, hi);
    for (FractionKind kind : all_fraction_kinds) {
      Real a;
      {
        PrecisionScope s(lo);
        a = fraction_direct(kind, nome_from_r(r, lo), lo);
      }
      EXPECT_LE(rel(a, fraction_direct(kind, q_hi, hi)), lo.eps()) << to_string(kind) << " " << to_string(r);
    }
  }
}

TEST(Property, PParametrisationIsAlgebraicInP) {
  PrecisionScope scope(ctx);
  // the p-relations hold for any p > 0, physical or not
  for (const Real& p : random_nomes(19, 10, 0.2, 3.0)) {
    const PParam pp = p_param_roundtrip(p, ctx);
    EXPECT_LE(rel(p_from_kstar(pp.kstar, ctx), p), 10 * ctx.eps()) << p;
    const RealPoly poly = p_polynomial(pp.k, pp.kprime2);
    EXPECT_LE(abs(poly(p)) / poly.scale(p), 10 * ctx.eps()) << p;
  }
}

TEST(Property, SuiteStatusesStableAcrossPrecision) {
  const SuiteReport lo = run_suite("all", ctx.with_bits(128));
  const SuiteReport hi = run_suite("all", ctx);
  ASSERT_EQ(lo.results.size(), hi.results.size());
  for (std::size_t i = 0; i < lo.results.size(); ++i)
    EXPECT_EQ(lo.results[i].status, hi.results[i].status) << hi.results[i].id << " " << to_string(hi.results[i].params);
}
