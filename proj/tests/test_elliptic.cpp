#include <gtest/gtest.h>

#include "rcf/elliptic.hpp"

using namespace rcf;

namespace {

const PrecisionContext ctx;

Real rel(const Real& a, const Real& b) { return abs(a - b) / std::max(Real(1), abs(b)); }

// Trapezoidal rule on the periodic integrand of K; converges geometrically.
Real quadrature_K(const Real& k, int n) {
  const Real h = pi() / (2 * n);
  Real acc = 0;
  for (int i = 0; i <= n; ++i) {
    const Real s = sin(h * i);
    const Real f = 1 / sqrt(1 - k * k * s * s);
    acc += (i == 0 || i == n) ? f / 2 : f;
  }
  return acc * h;
}

}  // namespace

TEST(Agm, FixedPointAndHomogeneity) {
  PrecisionScope scope(ctx);
  EXPECT_EQ(agm(Real(1), Real(1), ctx), 1);
  const Real r2 = sqrt(Real(2));
  EXPECT_LE(rel(agm(Real(2), 2 * r2, ctx), 2 * agm(Real(1), r2, ctx)), ctx.eps());
  EXPECT_THROW(agm(Real(0), Real(1), ctx), DomainError);
}

TEST(Agm, OneAndRootTwo) {
  PrecisionScope scope(ctx);
  const Real frozen("1.1981402347355922074399224922803238782272126632156515582636749529464052141439157");
  EXPECT_LE(abs(agm(Real(1), sqrt(Real(2)), ctx) - frozen), ctx.eps());
  // agm(1, sqrt2) = pi / (2 K(1/sqrt2)) up to the homogeneity factor sqrt2
  EXPECT_LE(rel(agm(Real(1), sqrt(Real(2)), ctx), sqrt(Real(2)) * pi() / (2 * quadrature_K(sqrt(Real(2)) / 2, 400))),
            ctx.eps());
}

TEST(EllK, KnownValuesAndQuadrature) {
  PrecisionScope scope(ctx);
  EXPECT_LE(abs(ellK(Real(0), ctx) - pi() / 2), ctx.eps());
  const Real k1 = sqrt(Real(2)) / 2;
  EXPECT_LE(abs(ellK(k1, ctx) - Real("1.85407467730137191843385034719526004621759882352176690558592804505602177683812")),
            ctx.eps());
  EXPECT_LE(abs(ellK(Real("0.5"), ctx) -
                Real("1.6857503548125960428712036577990769895008008941410890441199482978934337028823468")),
            ctx.eps());
  EXPECT_LE(rel(ellK(k1, ctx), quadrature_K(k1, 400)), ctx.eps());
  EXPECT_LE(rel(ellK(Real("0.5"), ctx), quadrature_K(Real("0.5"), 400)), ctx.eps());
}

TEST(EllK, DomainErrors) {
  PrecisionScope scope(ctx);
  EXPECT_THROW(ellK(Real(1), ctx), DomainError);
  EXPECT_THROW(ellK(Real(-1) / 10, ctx), DomainError);
}

TEST(ModulusFromR, SelfDualPoint) {
  PrecisionScope scope(ctx);
  const SingularPoint sp = modulus_from_r(Ratio(1), ctx);
  EXPECT_LE(abs(sp.modulus.k - sqrt(Real(2)) / 2), ctx.eps());
  EXPECT_LE(abs(sp.modulus.kprime - sqrt(Real(2)) / 2), ctx.eps());
  EXPECT_EQ(sp.r, Ratio(1));
}

TEST(ModulusFromR, RFourFromLandenAndRTwo) {
  PrecisionScope scope(ctx);
  EXPECT_LE(abs(modulus_from_r(Ratio(4), ctx).modulus.k - (3 - 2 * sqrt(Real(2)))), ctx.eps());
  EXPECT_LE(abs(modulus_from_r(Ratio(2), ctx).modulus.k - (sqrt(Real(2)) - 1)), ctx.eps());
}

TEST(ModulusFromR, DefiningPeriodRatio) {
  PrecisionScope scope(ctx);
  for (Ratio r : {Ratio(1, 4), Ratio(1, 2), Ratio(1), Ratio(2), Ratio(3), Ratio(4), Ratio(25)}) {
    const SingularPoint sp = modulus_from_r(r, ctx);
    const Real ratio = ellK_prime(sp.modulus, ctx) / ellK(sp.modulus, ctx);
    EXPECT_LE(abs(ratio - sqrt(to_real(r))), ctx.eps() * sqrt(to_real(r))) << "r = " << to_string(r);
    EXPECT_LE(rel(r_from_modulus(sp.modulus, ctx), to_real(r)), ctx.eps());
  }
}

TEST(ModulusFromR, UnderflowIsPrecisionExhausted) {
  PrecisionScope scope(ctx);
  EXPECT_THROW(modulus_from_r(Ratio(4000), ctx), PrecisionExhausted);
  EXPECT_NO_THROW(modulus_from_r(Ratio(4000), ctx.with_bits(512)));
  EXPECT_THROW(modulus_from_r(Ratio(0), ctx), DomainError);
}

TEST(ModulusFromR, ProductFormAgrees) {
  PrecisionScope scope(ctx);
  for (int r : {1, 2, 3, 5}) {
    const SingularPoint sp = modulus_from_r(Ratio(r), ctx);
    EXPECT_LE(rel(k_product_form(sp.nome, ctx), sp.modulus.k), ctx.eps()) << "r = " << r;
  }
}

TEST(Multiplier, TrivialAndLandenValues) {
  PrecisionScope scope(ctx);
  EXPECT_EQ(multiplier(1, Ratio(3), ctx).value, 1);
  EXPECT_LE(abs(multiplier(2, Ratio(1), ctx).value - (1 + sqrt(Real(2)) / 2) / 2), ctx.eps());
  EXPECT_THROW(multiplier(0, Ratio(1), ctx), DomainError);
}

TEST(Multiplier, DegreeFiveSatisfiesModularPolynomial) {
  PrecisionScope scope(ctx);
  const MultiplierValue m = multiplier(5, Ratio(1), ctx);
  EXPECT_LE(abs(m.value - Real("0.84721359549995793928183473374625524708812367192230514485417944908210418512756098")),
            ctx.eps());
  const Modulus mod = modulus_from_r(Ratio(1), ctx).modulus;
  const Real x = m.value;
  const Real lhs = pow(5 * x - 1, 5) * (1 - x);
  const Real rhs = 256 * mod.k * mod.k * mod.kprime * mod.kprime * x;
  EXPECT_LE(abs(lhs - rhs), ctx.eps());
  EXPECT_GE(m.value, Real(1) / 5);
  EXPECT_LE(m.value, 1);
}

TEST(Landen, OneStepAndTwoSteps) {
  PrecisionScope scope(ctx);
  const Modulus m1 = modulus_from_r(Ratio(1), ctx).modulus;
  const Modulus m4 = landen_4r(m1, ctx);
  EXPECT_LE(abs(m4.k - (3 - 2 * sqrt(Real(2)))), ctx.eps());
  EXPECT_LT(m4.k, m1.k);
  const Modulus m16 = landen_4r(m4, ctx);
  EXPECT_LE(abs(m16.k - modulus_from_r(Ratio(16), ctx).modulus.k), ctx.eps());
}

TEST(Gamma, ElementaryValues) {
  PrecisionScope scope(ctx);
  EXPECT_LE(abs(gamma(Real(1), ctx) - 1), ctx.eps());
  EXPECT_LE(abs(gamma(Real(1) / 2, ctx) - sqrt(pi())), ctx.eps());
  EXPECT_THROW(gamma(Real(0), ctx), DomainError);
  EXPECT_THROW(gamma(Real(-1) / 2, ctx), DomainError);
}

TEST(Gamma, FiveQuartersAgainstEllipticOracle) {
  PrecisionScope scope(ctx);
  const Real g4 = pow(gamma(Real(5) / 4, ctx), 4);
  const Real K = ellK(sqrt(Real(2)) / 2, ctx);
  EXPECT_LE(rel(g4, pi() * K * K / 16), ctx.eps());
  EXPECT_LE(abs(g4 - Real("0.67496978931117301211894984373549853565705200477226547874604854339626096265982997")),
            ctx.eps());
}

TEST(Bridges, CorrectedMBuildingForm) {
  PrecisionScope scope(ctx);
  EXPECT_LE(abs(m_building_elliptic(Ratio(1), ctx) -
                Real("0.70446581836561006399662766561115515503550560002943363620697075069345175734628064")),
            ctx.eps());
}
