#include "rcf/closed_forms.hpp"

#include <string>

namespace rcf {

namespace {

Real rel_diff(const Real& a, const Real& b) { return abs(a - b) / std::max(Real(1), abs(b)); }

void require_agreement(const Real& a, const Real& b, const PrecisionContext& ctx, const std::string& what) {
  const Real d = rel_diff(a, b);
  if (d > 1000 * ctx.eps())
    throw ChainInconsistent(what + " disagree (relative difference " + to_sci(d) + ")");
}

std::vector<Real> poly_mul(const std::vector<Real>& a, const std::vector<Real>& b) {
  std::vector<Real> out(a.size() + b.size() - 1, Real(0));
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  return out;
}

Residual residual_of(const std::vector<Real>& terms) {
  Residual res{Real(0), Real(0)};
  for (const Real& t : terms) {
    res.value += t;
    res.scale = std::max(res.scale, abs(t));
  }
  return res;
}

}  // namespace

// ---------------------------------------------------------------------------

Real rr_invariant(const Modulus& m, const Modulus& m25, const Real& M5, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real ratio = m.kprime / m25.kprime;
  return ratio * ratio * sqrt(m.k / m25.k) / (M5 * M5 * M5);
}

Real rr_from_invariant(const Real& a, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (!(a > 0)) throw DomainError("the R invariant must be positive");
  return root(2 / ((11 + a) + sqrt(a * a + 22 * a + 125)), 5);
}

Real rr_from_invariant_literal(const Real& a, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  return root(Real(-11) / 2 - a / 2 + sqrt(125 + 22 * a + a * a) / 2, 5);
}

RRChain rr_chain(const Ratio& r, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const SingularPoint sp = modulus_from_r(r, ctx);
  const SingularPoint sp25 = modulus_from_r(r * Ratio(25), ctx);
  const Real M5 = ellK(sp25.modulus, ctx) / ellK(sp.modulus, ctx);
  m5_polyroot(sp.modulus, M5, ctx);
  const Real a = rr_invariant(sp.modulus, sp25.modulus, M5, ctx);
  RRChain chain{r, sp.modulus, sp25.modulus, M5, a, rr_from_invariant(a, ctx)};
  require_agreement(chain.R, fraction_direct(FractionKind::RR, sp.nome, ctx), ctx,
                    "closed-form and continued-fraction R at r = " + to_string(r));
  return chain;
}

RealPoly m5_polynomial(const Modulus& m) {
  // (5x - 1)^5
  std::vector<Real> p{Real(1)};
  for (int i = 0; i < 5; ++i) p = poly_mul(p, {Real(-1), Real(5)});
  p = poly_mul(p, {Real(1), Real(-1)});
  p[1] -= 256 * m.k * m.k * m.kprime * m.kprime;
  return RealPoly(std::move(p));
}

Real m5_polyroot(const Modulus& m, const Real& oracle, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const RealPoly p = m5_polynomial(m);
  const Real lo = Real(1) / 5, hi = Real(1);
  auto close_enough = [&](const Real& x) { return abs(x - oracle) <= Real("1e-3"); };
  try {
    const RootSet roots = real_roots(p, lo, hi, ctx);
    if (!roots.empty() && close_enough(roots.nearest(oracle).value)) return roots.nearest(oracle).value;
  } catch (const PrecisionExhausted&) {
    // fall through: the root may be a tangency
  }
  // At self-dual points (r = 1) the polynomial touches zero without changing
  // sign. Such a root is a simple root of P' with P itself at rounding level.
  const RootSet critical = real_roots(p.derivative(), lo, hi, ctx);
  if (!critical.empty()) {
    const Real& x = critical.nearest(oracle).value;
    if (close_enough(x) && abs(p(x)) <= ctx.eps() * p.scale(x)) return x;
  }
  throw NoMatchingRoot("no multiplier root within 1e-3 of the K-ratio " + to_sci(oracle));
}

// ---------------------------------------------------------------------------

Real L_from_w(const Real& w, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real w2 = w * w;
  return 384 * w2 / (sqrt(81 + 222 * w2 + 81 * w2 * w2) + 9 - 9 * w2);
}

Real M_from_w(const Real& w, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real w2 = w * w;
  return (9 - 9 * w2 + sqrt(81 + 222 * w2 + 81 * w2 * w2)) / 64;
}

Real w_from_L(const Real& L, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (!(L > 0)) throw DomainError("L must be positive");
  return sqrt(L * (18 + L) / (6 * (64 + 3 * L)));
}

Real sqrt_w_over_k(const Real& L, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real M = (18 + L) / (64 + 3 * L);
  const Real z = root(L / M, 6) - 4 * root(M / L, 6);
  return sqrt(4 + 2 * z * z / 3) / 2 + sqrt(Real(2) / 3) * z / 2;
}

Real p_from_kstar(const Real& kstar, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (!(kstar > 0)) throw DomainError("k* must be positive");
  const Real s2 = 6 * kstar;
  const Real s = sqrt(s2);
  return ((s2 - 6) + sqrt((6 - s2) * (6 - s2) + 64 * s2)) / (16 * s);
}

RRParam rr_param(const Ratio& r, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const SingularPoint sp = modulus_from_r(r, ctx);
  const Modulus m25 = modulus_from_r(r * Ratio(25), ctx).modulus;
  const Real& k = sp.modulus.k;
  RRParam out;
  out.w = sqrt(k * m25.k);
  out.L = L_from_w(out.w, ctx);
  out.M = M_from_w(out.w, ctx);
  out.t = (out.w - k) / sqrt(k * out.w);
  out.y = out.M / out.L;
  out.kstar = k / out.w;
  out.x = sqrt(out.kstar);
  out.p = p_from_kstar(out.kstar, ctx);
  const Real p2 = out.p * out.p, p6 = p2 * p2 * p2;
  out.W = -1 + 4 * p2 + sqrt(1 - 2 * p2 + 16 * p2 * p2);
  out.T = -1 + 64 * p6 + sqrt(1 + 88 * p6 + 4096 * p6 * p6);
  const Real kp2 = sp.modulus.kprime * sp.modulus.kprime;
  const Real ks4 = pow(out.kstar, 4);
  out.c = kp2 * ks4 * out.kstar / (ks4 - k * k);
  const Real R = fraction_direct(FractionKind::RR, sp.nome, ctx);
  const Real R5 = pow(R, 5);
  out.G = cbrt(1 / R5 - 11 - R5);
  return out;
}

Theorem22 theorem22_chain(const Real& L, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  Theorem22 t;
  t.L = L;
  t.M = (18 + L) / (64 + 3 * L);
  t.w = w_from_L(L, ctx);
  const Real rho = sqrt_w_over_k(L, ctx);
  t.k = t.w / (rho * rho);
  t.k25 = t.w * rho * rho;
  if (!(t.k < 1) || !(t.k25 > 0)) throw DomainError("L does not produce a modulus in (0, 1)");
  const Modulus m{t.k, sqrt((1 - t.k) * (1 + t.k))};
  const Modulus m25{t.k25, sqrt((1 - t.k25) * (1 + t.k25))};
  t.r = r_from_modulus(m, ctx);
  t.M5 = ellK(m25, ctx) / ellK(m, ctx);
  const Real w4 = pow(t.w, 4);
  t.A_L = pow(t.k, 3) * (1 - t.k * t.k) / (t.M5 * t.M5 * t.M5) / (t.w * (t.k * t.k - w4));
  t.R = rr_from_invariant(t.A_L, ctx);
  t.R_direct = fraction_direct(FractionKind::RR, nome_from_r(t.r, ctx), ctx);
  require_agreement(t.R, t.R_direct, ctx, "parametrised and continued-fraction R");
  return t;
}

PParam p_param_roundtrip(const Real& p, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (!(p > 0)) throw DomainError("p must be positive");
  PParam out;
  out.p = p;
  const Real p2 = p * p, p6 = p2 * p2 * p2;
  out.W = -1 + 4 * p2 + sqrt(1 - 2 * p2 + 16 * p2 * p2);
  out.T = -1 + 64 * p6 + sqrt(1 + 88 * p6 + 4096 * p6 * p6);
  if (!(out.W > 0) || !(out.T > 0)) throw DomainError("W and T must be positive");
  const Real ks = out.W / (sqrt(Real(6)) * p);
  out.kstar = ks * ks;
  const Real wroot = pow(Real(6), Real(3) / 4) * sqrt(p2 * p) / sqrt(out.T);
  out.w = wroot * wroot;
  out.k = out.kstar * out.w;
  out.kprime2 = 1 - out.k * out.k;
  require_agreement(root(out.T * (2 + out.T) / (216 + 128 * out.T), 6), p, ctx, "p from T and p");
  require_agreement(sqrt(out.W * (2 + out.W) / (6 + 8 * out.W)), p, ctx, "p from W and p");
  return out;
}

RealPoly p_polynomial(const Real& k, const Real& kprime2) {
  const Real s6 = sqrt(Real(6));
  const Real k2 = k * k, a = s6 * k * kprime2;
  return RealPoly({k2, 2 * a, -24 * k2, -10 * a, 240 * k2, 32 * a, 54 - 1388 * k2 + 54 * k2 * k2, -128 * a,
                   3840 * k2, 640 * a, -6144 * k2, -2048 * a, 4096 * k2});
}

RealPoly x_polynomial(const Real& k, const Real& kprime2, bool printed) {
  const Real k2 = k * k, a = kprime2 * k;
  return RealPoly({k2, 4 * a, -6 * k2, 20 * a, printed ? Real(15) : Real(15 * k2), -16 * a,
                   16 - 52 * k2 + 16 * k2 * k2, 16 * a, 15 * k2, -20 * a, -6 * k2, -4 * a, k2});
}

RealPoly w_sextic(const Real& k) {
  const Real k2 = k * k, k3 = k2 * k;
  return RealPoly({k3 * k3, k3 * (-16 + 10 * k2), 15 * k2 * k2, -20 * k3, 15 * k2, k * (10 - 16 * k2), Real(1)});
}

Residual g_sextic(const Real& c, const Real& G, const Modulus& m, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real c13 = cbrt(c);
  const Real c23 = c13 * c13;
  const Real k2kp2 = m.k * m.k * m.kprime * m.kprime;
  const Real G2 = G * G, G3 = G2 * G;
  return residual_of({3125 * c * c, -6250 * c * c23 * G, 4375 * c * c13 * G2, -1500 * c * G3, 275 * c23 * G2 * G2,
                      2 * c13 * (-13 + 128 * k2kp2) * G3 * G2, G3 * G3});
}

Residual g_sextic_residual(const Ratio& r, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const RRParam param = rr_param(r, ctx);
  return g_sextic(param.c, param.G, modulus_from_r(r, ctx).modulus, ctx);
}

Real w_sextic_solve(const Ratio& r, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real k = modulus_from_r(r, ctx).modulus.k;
  const Real k25 = modulus_from_r(r * Ratio(25), ctx).modulus.k;
  const RootSet roots = real_roots(w_sextic(k), Real(0), Real(1), ctx);
  if (roots.empty()) throw NoMatchingRoot("w-sextic has no root in (0, 1)");
  const Real w = roots.nearest(sqrt(k * k25)).value;
  if (abs(w * w / k - k25) > Real("1e-3"))
    throw NoMatchingRoot("no w-sextic root reproduces k_25r = " + to_sci(k25));
  return w;
}

// ---------------------------------------------------------------------------

RRDerivative rr_deriv_closed(const Ratio& r, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const RRChain c = rr_chain(r, ctx);
  const SingularPoint sp = modulus_from_r(r, ctx);
  const Real K = ellK(c.m, ctx);
  const Real p = pi();
  RRDerivative d;
  d.elliptic = pow(Real(2), Real(4) / 3) * pow(c.m.k, Real(5) / 12) * pow(c.m.kprime, Real(5) / 3) /
               (5 * root(c.m25.k, 12) * cbrt(c.m25.kprime) * sqrt(c.M5)) * c.R * K * K / (p * p * sp.nome.value());
  const Real R = fraction_direct(FractionKind::RR, sp.nome, ctx);
  const Real R5 = pow(R, 5);
  d.eta = pow(f_minus(sp.nome, ctx), 4) * R * root(1 / R5 - 11 - R5, 6) / (5 * sp.nome.power(Ratio(5, 6)));
  require_agreement(d.elliptic, d.eta, ctx, "elliptic and eta forms of R'");
  return d;
}

// ---------------------------------------------------------------------------

HChain h_closed(const Ratio& r, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const SingularPoint sp = modulus_from_r(r, ctx);
  // k / (1 - k') = (1 + k') / k
  const Real P = (1 + sp.modulus.kprime) / sp.modulus.k;
  HChain h{r, P, 1 / (P + sqrt(P * P + 1))};
  require_agreement(h.H, fraction_direct(FractionKind::H, sp.nome, ctx), ctx,
                    "closed-form and continued-fraction H at r = " + to_string(r));
  require_agreement(k_from_h(h.H, ctx), sp.modulus.k, ctx, "k from H and k_r");
  return h;
}

Real k_from_h(const Real& H, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real d = 1 + H * H;
  return 4 * (H - H * H * H) / (d * d);
}

// ---------------------------------------------------------------------------

CubicChain cubic_closed(const Ratio& r, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const SingularPoint sp = modulus_from_r(r, ctx);
  const Modulus m9 = modulus_from_r(r * Ratio(9), ctx).modulus;
  CubicChain c;
  c.r = r;
  c.m = sp.modulus;
  c.m9 = m9;
  c.V = root(m9.k, 4) * root(c.m.kprime, 6) / (cbrt(Real(2)) * root(c.m.k, 12) * sqrt(m9.kprime));
  const Real V3 = c.V * c.V * c.V;
  c.T = sqrt(1 - 8 * V3);
  c.X = (1 - c.T) / (1 + c.T);
  c.W3 = c.X * c.X;
  c.w3 = c.m.k * m9.k;
  c.Z = root(c.X, 6);
  c.s = sqrt(2 * V3);
  require_agreement(c.V, fraction_direct(FractionKind::V, sp.nome, ctx), ctx,
                    "closed-form and continued-fraction V at r = " + to_string(r));
  return c;
}

Real k81_from_v3(const Ratio& r, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const SingularPoint sp = modulus_from_r(r, ctx);
  const Real V = fraction_direct(FractionKind::V, sp.nome.pow(3), ctx);
  const Real T = sqrt(1 - 8 * V * V * V);
  const Real f = (1 + 2 * V * V - T) / (1 + 2 * V * V + T);
  return f * f * sp.modulus.k;
}

// ---------------------------------------------------------------------------

Real s_closed(const Ratio& r, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  return root(modulus_from_r(r, ctx).modulus.k, 4) / sqrt(Real(2));
}

QClosed q_closed_forms(const Ratio& r, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Modulus m = modulus_from_r(r, ctx).modulus;
  const Modulus m4 = modulus_from_r(r * Ratio(4), ctx).modulus;
  return QClosed{ellK(m4, ctx) * sqrt(m4.k) / pi(), ellK(m, ctx) * m.k / (2 * pi())};
}

Real q_closed(const Ratio& r, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const QClosed q = q_closed_forms(r, ctx);
  require_agreement(q.from_4r, q.from_r, ctx, "the two elliptic forms of Q");
  return q.from_r;
}

Real fraction_closed(FractionKind kind, const Ratio& r, const PrecisionContext& ctx) {
  switch (kind) {
    case FractionKind::RR: return rr_chain(r, ctx).R;
    case FractionKind::H: return h_closed(r, ctx).H;
    case FractionKind::V: return cubic_closed(r, ctx).V;
    case FractionKind::S: return s_closed(r, ctx);
    case FractionKind::Q: return q_closed(r, ctx);
    case FractionKind::M: return m_building_elliptic(r, ctx);
  }
  throw DomainError("unknown fraction kind");
}

}  // namespace rcf
