#include "rcf/elliptic.hpp"

#include <cmath>

#include <mpfr.h>

namespace rcf {

Real agm(const Real& a_in, const Real& b_in, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (!(a_in > 0) || !(b_in > 0)) throw DomainError("agm needs positive arguments");
  Real a = a_in, b = b_in;
  const Real unit = ctx.unit_roundoff();
  for (int i = 0; i < 4 * ctx.working_bits(); ++i) {
    if (abs(a - b) <= 4 * unit * a) break;
    Real next = (a + b) / 2;
    b = sqrt(a * b);
    a = std::move(next);
  }
  return (a + b) / 2;
}

Real ellK(const Real& k, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (k < 0 || k >= 1) throw DomainError("K(k) needs 0 <= k < 1, got " + to_sci(k));
  return pi() / (2 * agm(Real(1), sqrt((1 - k) * (1 + k)), ctx));
}

Real ellK(const Modulus& m, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (!(m.kprime > 0) || m.kprime > 1) throw DomainError("K needs 0 < k' <= 1");
  return pi() / (2 * agm(Real(1), m.kprime, ctx));
}

Real ellK_prime(const Modulus& m, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (!(m.k > 0) || m.k > 1) throw DomainError("K' needs 0 < k <= 1");
  return pi() / (2 * agm(Real(1), m.k, ctx));
}

Modulus modulus_from_nome(const Nome& q, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (q.is_zero()) throw DomainError("modulus is undefined at q = 0");
  const Real t2 = theta(2, q, ctx);
  const Real t3 = theta(3, q, ctx);
  const Real t4 = theta(4, q, ctx);
  return Modulus{(t2 * t2) / (t3 * t3), (t4 * t4) / (t3 * t3)};
}

SingularPoint modulus_from_r(const Real& r, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (!(r > 0)) throw DomainError("r must be positive");
  const Real log_q = -pi() * sqrt(r);
  if (log_q < -ctx.working_bits() * log(Real(2)))
    throw PrecisionExhausted("q = e^{-pi sqrt r} is below 2^-" + std::to_string(ctx.working_bits()) +
                             "; raise the precision");
  Nome nome = Nome::from_log(log_q);
  Modulus m = modulus_from_nome(nome, ctx);
  return SingularPoint{Ratio(0), r, std::move(nome), std::move(m)};
}

SingularPoint modulus_from_r(const Ratio& r, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (r <= 0) throw DomainError("r must be positive, got " + to_string(r));
  SingularPoint sp = modulus_from_r(to_real(r), ctx);
  sp.r = r;
  return sp;
}

Real r_from_modulus(const Modulus& m, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real ratio = ellK_prime(m, ctx) / ellK(m, ctx);
  return ratio * ratio;
}

Real k_product_form(const Nome& q, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (q.is_zero()) return Real(0);
  const Real p12 = pow(phi_cap(q, ctx), 12);
  return 8 * q.power(Ratio(1, 2)) * p12 / (1 + sqrt(1 + 64 * q.value() * p12 * p12));
}

MultiplierValue multiplier(int n, const Ratio& r, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (n < 1) throw DomainError("multiplier degree must be a positive integer");
  if (n == 1) return MultiplierValue{n, r, Real(1)};
  const SingularPoint base = modulus_from_r(r, ctx);
  const SingularPoint scaled = modulus_from_r(r * Ratio(n * n), ctx);
  return MultiplierValue{n, r, ellK(scaled.modulus, ctx) / ellK(base.modulus, ctx)};
}

Modulus landen_4r(const Modulus& m, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real s = 1 + m.kprime;
  // 1 - k' = k^2 / (1 + k') keeps full relative accuracy when k' is near 1.
  return Modulus{(m.k * m.k) / (s * s), 2 * sqrt(m.kprime) / s};
}

Real gamma(const Real& x, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (!(x > 0)) throw DomainError("gamma is only provided for x > 0");
  Real out;
  mpfr_gamma(out.backend().data(), x.backend().data(), MPFR_RNDN);
  return out;
}

Real phi_cap_elliptic(const SingularPoint& sp, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Modulus& m = sp.modulus;
  return pow(Real(2), Real(-1) / 6) / sp.nome.power(Ratio(1, 24)) * root(m.k, 12) / root(m.kprime, 6);
}

Real f_minus_elliptic(const SingularPoint& sp, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Modulus& m = sp.modulus;
  const Real K = ellK(m, ctx);
  const Real p = pi();
  // eighth root of 2^{8/3} pi^-4 q^{-1/3} k^{2/3} k'^{8/3} K^4
  return root(Real(2), 3) / sqrt(p) / sp.nome.power(Ratio(1, 24)) * root(m.k, 12) * root(m.kprime, 3) * sqrt(K);
}

Real f_minus_sq_elliptic(const SingularPoint& sp, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Modulus& m = sp.modulus;
  const Real K = ellK(m, ctx);
  const Real p = pi();
  return root(2 * m.k * m.kprime * K * K * K / (p * p * p), 6) / sp.nome.power(Ratio(1, 12));
}

Real m_building_elliptic(const Ratio& r, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const SingularPoint quarter = modulus_from_r(r / Ratio(4), ctx);
  return sqrt(quarter.modulus.k * ellK(quarter.modulus, ctx) / (2 * pi()));
}

}  // namespace rcf
