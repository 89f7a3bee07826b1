// The standard catalog. Every evaluator computes both sides of one printed
// display from independent routes; where the printed form cancels, the
// comparison is made with cleared denominators and the cancelling term
// magnitude is passed as `scale`.

#include <algorithm>

#include "rcf/cfrac.hpp"
#include "rcf/closed_forms.hpp"
#include "rcf/elliptic.hpp"
#include "rcf/qseries.hpp"
#include "rcf/verifier.hpp"

namespace rcf {

namespace {

using Sides = std::vector<Evaluation>;

const std::vector<Ratio> default_r{Ratio(1, 4), Ratio(1, 2), Ratio(1), Ratio(2), Ratio(3), Ratio(4)};

std::vector<Params> grid_of(const std::string& name, const std::vector<Ratio>& values) {
  std::vector<Params> g;
  for (const Ratio& v : values) g.push_back({{name, v}});
  return g;
}

std::vector<Params> r_grid(const std::vector<Ratio>& values = default_r) { return grid_of("r", values); }

Ratio get(const Params& p, const std::string& name) {
  for (const Binding& b : p)
    if (b.name == name) return b.value;
  throw CatalogError("binding " + name + " missing");
}

Evaluation same(Real lhs, Real rhs, Real scale = 0) { return {std::move(lhs), std::move(rhs), std::move(scale)}; }

/// sum(terms) = 0, judged against the largest term.
Evaluation vanishes(std::initializer_list<Real> terms) {
  Real sum = 0, scale = 0;
  for (const Real& t : terms) {
    sum += t;
    scale = std::max(scale, abs(t));
  }
  return {sum, Real(0), scale};
}

Evaluation poly_at(const RealPoly& p, const Real& x) { return {p(x), Real(0), p.scale(x)}; }

Real direct(FractionKind kind, const Nome& q, const PrecisionContext& ctx) { return fraction_direct(kind, q, ctx); }

Real R_at(const Nome& q, const PrecisionContext& ctx) { return direct(FractionKind::RR, q, ctx); }
Real H_at(const Nome& q, const PrecisionContext& ctx) { return direct(FractionKind::H, q, ctx); }
Real V_at(const Nome& q, const PrecisionContext& ctx) { return direct(FractionKind::V, q, ctx); }
Real Q_at(const Nome& q, const PrecisionContext& ctx) { return direct(FractionKind::Q, q, ctx); }

/// H(e^{-a}) + 2 - 1/H(e^{-a}).
Real h_reflect(const Real& a, const PrecisionContext& ctx) {
  const Real h = H_at(Nome::from_log(-a), ctx);
  return h + 2 - 1 / h;
}

Real cube(const Real& x) { return x * x * x; }
Real sq(const Real& x) { return x * x; }

/// Printed rho(L) = (1/2) sqrt(4 + (2/3) z^2) + (1/2) sqrt(2/3) z, z = (L/M)^{1/6} - 4 (M/L)^{1/6}.
Real rho_printed(const Real& L, const Real& M) {
  const Real z = root(L / M, 6) - 4 * root(M / L, 6);
  return sqrt(4 + 2 * z * z / 3) / 2 + sqrt(Real(2) / 3) * z / 2;
}

/// T = sqrt(1 - 8 V^3) and X = (1 - T) / (1 + T) from the direct cubic fraction.
struct CubicT {
  Real V, T, X;
};

CubicT cubic_t(const Nome& q, const PrecisionContext& ctx) {
  const Real V = V_at(q, ctx);
  const Real T = sqrt(1 - 8 * cube(V));
  return {V, T, (1 - T) / (1 + T)};
}

Real literal_rr(const Real& a) { return Real(-11) / 2 - a / 2 + sqrt(125 + 22 * a + a * a) / 2; }

/// R^5 from the direct fraction against the printed radical in a; the
/// radical subtracts terms of size (11 + a) / 2.
Evaluation rr_fifth_power(const Real& R, const Real& a) { return same(pow(R, 5), literal_rr(a), (11 + a) / 2); }

// ---------------------------------------------------------------------------

void add_rogers_ramanujan(Catalog& c) {
  c.add({"rr_rel_5", "1/R - 1 - R against the eta quotient at q^(1/5) and q^5",
         "\\frac{1}{R(q)}-1-R(q)=\\frac{f(-q^{1/5})}{q^{1/5}f(-q^5)}", {"rr", "product"}, r_grid(), 100,
         Expectation::pass, [](const Params& p, const PrecisionContext& ctx) {
           const Nome q = nome_from_r(get(p, "r"), ctx);
           const Real R = R_at(q, ctx);
           const Real rhs = f_minus(q.pow(Ratio(1, 5)), ctx) / (q.power(Ratio(1, 5)) * f_minus(q.pow(5), ctx));
           return Sides{same(1 / R - 1 - R, rhs)};
         }});

  c.add({"rr_rel_6", "R^-5 - 11 - R^5 against f(-q)^6 / (q f(-q^5)^6)",
         "\\frac{1}{R^5(q)}-11-R^5(q)=\\frac{f^6(-q)}{q f^6(-q^5)}", {"rr", "product"}, r_grid(), 100,
         Expectation::pass, [](const Params& p, const PrecisionContext& ctx) {
           const Nome q = nome_from_r(get(p, "r"), ctx);
           const Real R5 = pow(R_at(q, ctx), 5);
           const Real rhs = pow(f_minus(q, ctx) / f_minus(q.pow(5), ctx), 6) / q.value();
           return Sides{same(1 / R5 - 11 - R5, rhs)};
         }});

  c.add({"k_product_9", "k_r from the Phi(-q) product against the theta quotient",
         "k_r=\\frac{8q^{1/2}\\Phi(-q)^{12}}{1+\\sqrt{1+64q\\Phi(-q)^{24}}}", {"elliptic", "product"}, r_grid(),
         100, Expectation::pass, [](const Params& p, const PrecisionContext& ctx) {
           const SingularPoint sp = modulus_from_r(get(p, "r"), ctx);
           const Real P = phi_cap(sp.nome, ctx);
           const Real q = sp.nome.value();
           const Real rhs = 8 * sqrt(q) * pow(P, 12) / (1 + sqrt(1 + 64 * q * pow(P, 24)));
           return Sides{same(sp.modulus.k, rhs)};
         }});

  c.add({"bridge_10", "Phi(-q) = 2^(-1/6) q^(-1/24) k^(1/12) / k'^(1/6)",
         "\\frac{2^{-1/6}q^{-1/24}(k_r)^{1/12}}{(k'_r)^{1/6}}", {"elliptic", "product", "bridge"}, r_grid(), 100,
         Expectation::pass, [](const Params& p, const PrecisionContext& ctx) {
           const SingularPoint sp = modulus_from_r(get(p, "r"), ctx);
           return Sides{same(phi_cap(sp.nome, ctx), phi_cap_elliptic(sp, ctx))};
         }});

  c.add({"bridge_10_printed", "Phi(-q) with the printed leading factor 2",
         "\\Phi(-q)=2\\frac{2^{-1/6}q^{-1/24}(k_r)^{1/12}}{(k'_r)^{1/6}}",
         {"elliptic", "product", "bridge", "known_discrepancy"}, r_grid(), 100, Expectation::known_discrepancy,
         [](const Params& p, const PrecisionContext& ctx) {
           const SingularPoint sp = modulus_from_r(get(p, "r"), ctx);
           return Sides{same(phi_cap(sp.nome, ctx), 2 * phi_cap_elliptic(sp, ctx))};
         }});

  c.add({"bridge_11", "f(-q)^8 from k, k' and K",
         "f(-q)^8=\\frac{2^{8/3}}{\\pi^4}q^{-1/3}(k_r)^{2/3}(k'_r)^{8/3}K(k_r)^4",
         {"elliptic", "product", "bridge"}, r_grid(), 100, Expectation::pass,
         [](const Params& p, const PrecisionContext& ctx) {
           const SingularPoint sp = modulus_from_r(get(p, "r"), ctx);
           const Modulus& m = sp.modulus;
           const Real rhs = pow(Real(2), Real(8) / 3) / pow(pi(), 4) / cbrt(sp.nome.value()) *
                            rpow(m.k, Ratio(2, 3)) * rpow(m.kprime, Ratio(8, 3)) * pow(ellK(m, ctx), 4);
           return Sides{same(pow(f_minus(sp.nome, ctx), 8), rhs)};
         }});

  c.add({"bridge_12", "f(-q^2)^6 from k, k' and K", "f(-q^2)^6=\\frac{2k_r k'_r K(k_r)^3}{\\pi^3 q^{1/2}}",
         {"elliptic", "product", "bridge"}, r_grid(), 100, Expectation::pass,
         [](const Params& p, const PrecisionContext& ctx) {
           const SingularPoint sp = modulus_from_r(get(p, "r"), ctx);
           const Modulus& m = sp.modulus;
           const Real rhs = 2 * m.k * m.kprime * pow(ellK(m, ctx), 3) / (pow(pi(), 3) * sqrt(sp.nome.value()));
           return Sides{same(pow(f_minus(sp.nome.pow(2), ctx), 6), rhs)};
         }});

  c.add({"rr_thm21", "R from the invariant a_r built on k_r, k_25r and the multiplier root",
         "R(q)=\\left(-\\frac{11}{2}-\\frac{a_r}{2}+\\frac{1}{2}\\sqrt{125+22a_r+a^2_r}\\right)^{1/5}",
         {"rr", "elliptic"}, r_grid(), 100, Expectation::pass, [](const Params& p, const PrecisionContext& ctx) {
           const Ratio r = get(p, "r");
           const SingularPoint sp = modulus_from_r(r, ctx);
           const Modulus m25 = modulus_from_r(r * Ratio(25), ctx).modulus;
           const Real K_ratio = ellK(m25, ctx) / ellK(sp.modulus, ctx);
           const Real M5 = m5_polyroot(sp.modulus, K_ratio, ctx);
           const Real a = rr_invariant(sp.modulus, m25, M5, ctx);
           const Real R = R_at(sp.nome, ctx);
           return Sides{rr_fifth_power(R, a), same(M5, K_ratio)};
         }});

  c.add({"m5_poly_17", "degree-5 multiplier equation at M5 = K(k_25r) / K(k_r)",
         "(5M_5(r)-1)^5(1-M_5(r))=256(k_r)^2 (k'_r)^2M_5(r)", {"rr", "modular", "poly"}, r_grid(), 100,
         Expectation::pass, [](const Params& p, const PrecisionContext& ctx) {
           const Ratio r = get(p, "r");
           const Modulus m = modulus_from_r(r, ctx).modulus;
           const Real x = ellK(modulus_from_r(r * Ratio(25), ctx).modulus, ctx) / ellK(m, ctx);
           return Sides{poly_at(m5_polynomial(m), x)};
         }});

  c.add({"k25_modular_18", "degree-5 modular equation between k_r and k_25r",
         "k_rk_{25r}+k'_rk'_{25r}+2\\cdot4^{1/3} (k_rk_{25r}k'_rk'_{25r})^{1/3}=1", {"rr", "modular"}, r_grid(),
         100, Expectation::pass, [](const Params& p, const PrecisionContext& ctx) {
           const Ratio r = get(p, "r");
           const Modulus m = modulus_from_r(r, ctx).modulus;
           const Modulus n = modulus_from_r(r * Ratio(25), ctx).modulus;
           const Real lhs =
               m.k * n.k + m.kprime * n.kprime + 2 * cbrt(Real(4)) * cbrt(m.k * n.k * m.kprime * n.kprime);
           return Sides{same(lhs, Real(1))};
         }});

  c.add({"w_param_20_21", "w(L) and the two square-root ratios sqrt(k_25/w) = sqrt(w/k) in L",
         "\\frac{(k_{25r})^{1/2}}{w^{1/2}}=\\frac{w^{1/2}}{(k_r)^{1/2}}", {"rr", "param"}, r_grid(), 100,
         Expectation::pass, [](const Params& p, const PrecisionContext& ctx) {
           const Ratio r = get(p, "r");
           const Real k = modulus_from_r(r, ctx).modulus.k;
           const Real k25 = modulus_from_r(r * Ratio(25), ctx).modulus.k;
           const Real w = sqrt(k * k25);
           const Real L = L_from_w(w, ctx);
           const Real M = (18 + L) / (64 + 3 * L);
           const Real rho = rho_printed(L, M);
           const Real z = sqrt(Real(2) / 3) * (root(L / M, 6) - 4 * root(M / L, 6));
           return Sides{same(sqrt(L * (18 + L) / (6 * (64 + 3 * L))), w), same(sqrt(k25 / w), rho),
                        same(sqrt(w / k), rho), same(-(k - w) / sqrt(k * w), z, abs(k) / sqrt(k * w)),
                        same((k25 - w) / sqrt(k25 * w), z, abs(w) / sqrt(k25 * w))};
         }});

  c.add({"r_from_k25_printed", "r recovered from k_25r with the printed factor 1/5 (1/25 is exact)",
         "r=r_{k_{25}}=r[25L]=\\frac{1}{5}\\frac{K^2(k'_{25r})}{K^2(k_{25r})}", {"rr", "known_discrepancy"},
         r_grid(), 100, Expectation::known_discrepancy, [](const Params& p, const PrecisionContext& ctx) {
           const Ratio r = get(p, "r");
           const Modulus m25 = modulus_from_r(r * Ratio(25), ctx).modulus;
           return Sides{same(to_real(r), r_from_modulus(m25, ctx) / 5)};
         }});

  c.add({"rr_thm22_L13", "L = 1/3: printed w, k_r, k_25r radicals and R at the induced r",
         "Set $L=1/3$", {"rr", "param", "eval"}, grid_of("L", {Ratio(1, 3)}), 100, Expectation::pass,
         [](const Params& p, const PrecisionContext& ctx) {
           const Real L = to_real(get(p, "L"));
           const Theorem22 t = theorem22_chain(L, ctx);
           const Real w = sqrt(Real(11) / 78) / 3;
           const Real z = -4 * root(Real(11) / 13, 6) + root(Real(13) / 11, 6);
           const Real rho = z / sqrt(Real(6)) + sqrt(4 + 2 * z * z / 3) / 2;
           const Real k25 = w * rho * rho, k = w / (rho * rho);
           const Modulus m25{t.k25, sqrt((1 - t.k25) * (1 + t.k25))};
           const Real k2 = t.k * t.k;
           const Real A = pow(t.k, 3) * (1 - k2) / cube(t.M5) / (k2 * t.w - pow(t.w, 5));
           return Sides{same(w, t.w), same(k25, t.k25), same(k, t.k),
                        same(r_from_modulus(m25, ctx) / 25, t.r), rr_fifth_power(t.R_direct, A)};
         }});

  c.add({"LM_inverse_27_28", "L and M recovered from w",
         "M=\\frac{1}{64}\\left(9-9w^2+\\sqrt{81+222w^2+81w^4}\\right)", {"rr", "param"}, r_grid(), 100,
         Expectation::pass, [](const Params& p, const PrecisionContext& ctx) {
           const Ratio r = get(p, "r");
           const Real w = sqrt(modulus_from_r(r, ctx).modulus.k * modulus_from_r(r * Ratio(25), ctx).modulus.k);
           const Real w2 = w * w;
           const Real L_lit = -9 + 9 * w2 + sqrt(Real(3)) * sqrt(27 + 74 * w2 + 27 * w2 * w2);
           const Real L = L_from_w(w, ctx);
           const Real M_lit = (9 - 9 * w2 + sqrt(81 + 222 * w2 + 81 * w2 * w2)) / 64;
           return Sides{same(L_lit, L, Real(9)), same(M_lit, (18 + L) / (64 + 3 * L)), same(w_from_L(L, ctx), w)};
         }});

  c.add({"t_defs_29_30", "t = (w - k) / sqrt(k w) against its expression in y = M / L",
         "t=\\sqrt{\\frac{2}{3}}\\left(\\frac{1}{y^{1/6}}-4y^{1/6}\\right)", {"rr", "param"}, r_grid(), 100,
         Expectation::pass, [](const Params& p, const PrecisionContext& ctx) {
           const RRParam q = rr_param(get(p, "r"), ctx);
           const Real k = q.kstar * q.w;
           const Real rhs = sqrt(Real(2) / 3) * (1 / root(q.y, 6) - 4 * root(q.y, 6));
           return Sides{same((q.w - k) / sqrt(k * q.w), rhs, q.w / sqrt(k * q.w))};
         }});

  c.add({"ML_ratio_31", "M / L in k and w, and its cube-root form",
         "\\frac{M}{L}=\\left(\\frac{\\sqrt{3}(k-w)+\\sqrt{3k^2+26kw+3w^2}}{8\\sqrt{2kw}}\\right)^6", {"rr", "param"},
         r_grid(), 100, Expectation::pass, [](const Params& p, const PrecisionContext& ctx) {
           const Ratio r = get(p, "r");
           const Real k = modulus_from_r(r, ctx).modulus.k;
           const Real w = sqrt(k * modulus_from_r(r * Ratio(25), ctx).modulus.k);
           const Real Y = (sqrt(Real(3)) * (k - w) + sqrt(3 * k * k + 26 * k * w + 3 * w * w)) / (8 * sqrt(2 * k * w));
           const Real w2 = w * w;
           const Real D = -9 + 9 * w2 + sqrt(81 + 222 * w2 + 81 * w2 * w2);
           const Real L = L_from_w(w, ctx), M = M_from_w(w, ctx);
           // cube form with its denominator cleared: sqrt6 w = D Y^3
           return Sides{same(M / L, pow(Y, 6)), same(sqrt(Real(6)) * w, D * cube(Y), 9 * cube(Y))};
         }});

  c.add({"p_param_32_35", "k*, w, W, T from the physical p and the relations tying them to k_r",
         "w=6k_r\\left(\\frac{W+2}{(6+8W)W}\\right)", {"rr", "param"}, r_grid(), 100, Expectation::pass,
         [](const Params& p, const PrecisionContext& ctx) {
           const Ratio r = get(p, "r");
           const Real k = modulus_from_r(r, ctx).modulus.k;
           const Real k25 = modulus_from_r(r * Ratio(25), ctx).modulus.k;
           const RRParam rp = rr_param(r, ctx);
           const PParam pp = p_param_roundtrip(rp.p, ctx);
           const Real& W = pp.W;
           const Real& T = pp.T;
           const Real U = sqrt(W * (W + 2) / (8 * W + 6));
           const Real s6 = sqrt(Real(6));
           return Sides{same(pp.k, k),
                        same(pp.w, sqrt(k * k25)),
                        same(root(T * (2 + T) / (216 + 128 * T), 6), rp.p),
                        same(sqrt(W * (2 + W) / (6 + 8 * W)), rp.p),
                        same(pp.w, 6 * k * (W + 2) / ((6 + 8 * W) * W)),
                        same(T, s6 * W * W / k * U),
                        vanishes({-108 * k * k * pow(U, 5), s6 * k * W * W, -64 * s6 * k * W * W * pow(U, 6),
                                  3 * pow(W, 4) * U})};
         }});

  c.add({"p_poly_36", "degree-12 polynomial in p at the physical p", "(54-1388k^2_r+54k^4_r)p^6",
         {"rr", "poly"}, r_grid(), 100, Expectation::pass, [](const Params& p, const PrecisionContext& ctx) {
           const Ratio r = get(p, "r");
           const Modulus m = modulus_from_r(r, ctx).modulus;
           return Sides{poly_at(p_polynomial(m.k, sq(m.kprime)), rr_param(r, ctx).p)};
         }});

  c.add({"x_poly_37", "degree-12 polynomial in x = sqrt(k / w), with 15 k^2 at x^4", "(16-52k^2_r+16k^4_r)x^6",
         {"rr", "poly"}, r_grid(), 100, Expectation::pass, [](const Params& p, const PrecisionContext& ctx) {
           const Ratio r = get(p, "r");
           const Modulus m = modulus_from_r(r, ctx).modulus;
           return Sides{poly_at(x_polynomial(m.k, sq(m.kprime), false), rr_param(r, ctx).x)};
         }});

  c.add({"x_poly_37_printed", "printed degree-12 polynomial in x at x = 1/sqrt(k_25r)",
         "x=\\sqrt{k^{*}_r}=1/\\sqrt{k_{25r}}", {"rr", "poly", "known_discrepancy"}, r_grid(), 100,
         Expectation::known_discrepancy, [](const Params& p, const PrecisionContext& ctx) {
           const Ratio r = get(p, "r");
           const Modulus m = modulus_from_r(r, ctx).modulus;
           const Real x = 1 / sqrt(modulus_from_r(r * Ratio(25), ctx).modulus.k);
           return Sides{poly_at(x_polynomial(m.k, sq(m.kprime), true), x)};
         }});

  c.add({"G_sextic_39a", "sextic in G = (R^-5 - 11 - R^5)^(1/3) with coefficients in c_r",
         "+2c^{1/3}_r(-13+128k'^2_rk^2_r)G^5(q)+G^6(q)=0", {"rr", "poly"}, r_grid(), 100, Expectation::pass,
         [](const Params& p, const PrecisionContext& ctx) {
           const Residual res = g_sextic_residual(get(p, "r"), ctx);
           return Sides{same(res.value, Real(0), res.scale)};
         }});

  c.add({"w_sextic_39b", "sextic in w = sqrt(k_r k_25r) with coefficients in k_r",
         "k^6_r+k^3_r(-16+10k^2_r)w+15k^4_rw^2-20k^3_rw^3+15k^2_rw^4+k_r(10-16k^2_r)w^5+w^6=0", {"rr", "poly"},
         r_grid(), 100, Expectation::pass, [](const Params& p, const PrecisionContext& ctx) {
           const Ratio r = get(p, "r");
           const Real k = modulus_from_r(r, ctx).modulus.k;
           const Real w = sqrt(k * modulus_from_r(r * Ratio(25), ctx).modulus.k);
           return Sides{poly_at(w_sextic(k), w)};
         }});

  c.add({"corollary_40", "k_r recovered from the w-sextic root through L", "\\frac{w^{1/2}}{(k_r)^{1/2}}",
         {"rr", "poly", "param"}, r_grid(), 100, Expectation::pass,
         [](const Params& p, const PrecisionContext& ctx) {
           const Ratio r = get(p, "r");
           const Real w = w_sextic_solve(r, ctx);
           const Real L = L_from_w(w, ctx);
           const Real rho = rho_printed(L, (18 + L) / (64 + 3 * L));
           return Sides{same(sqrt(w / modulus_from_r(r, ctx).modulus.k), rho)};
         }});

  c.add({"rr_deriv_13_41", "R' from the eta form against the elliptic form",
         "\\times\\left(-\\frac{11}{2}-\\frac{a_r}{2}+\\frac{1}{2}\\sqrt{125+22a_r+a^2_r}\\right)^{1/5}\\frac{K^2(k_"
         "r)}{\\pi^2 q}",
         {"rr", "derivative"}, r_grid(), 100, Expectation::pass, [](const Params& p, const PrecisionContext& ctx) {
           const Ratio r = get(p, "r");
           const SingularPoint sp = modulus_from_r(r, ctx);
           const Modulus& m = sp.modulus;
           const Modulus m25 = modulus_from_r(r * Ratio(25), ctx).modulus;
           const Real K = ellK(m, ctx);
           const Real M5 = m5_polyroot(m, ellK(m25, ctx) / K, ctx);
           const Real a = rr_invariant(m, m25, M5, ctx);
           const Real q = sp.nome.value();
           const Real R = R_at(sp.nome, ctx);
           const Real R5 = pow(R, 5);
           const Real eta = pow(f_minus(sp.nome, ctx), 4) * R * root(1 / R5 - 11 - R5, 6) /
                            (5 * sp.nome.power(Ratio(5, 6)));
           const Real elliptic = pow(Real(2), Real(4) / 3) * rpow(m.k, Ratio(5, 12)) * rpow(m.kprime, Ratio(5, 3)) /
                                 (5 * root(m25.k, 12) * cbrt(m25.kprime) * sqrt(M5)) * rr_from_invariant(a, ctx) *
                                 K * K / (pi() * pi() * q);
           return Sides{same(eta, elliptic)};
         }});

  c.add({"rr_evals", "R(e^{-2 pi}) and R'(e^{-2 pi}) against the printed radicals",
         "R(e^{-2\\pi})=\\frac{-1}{2}-\\frac{\\sqrt{5}}{2}+\\sqrt{\\frac{5+\\sqrt{5}}{2}}", {"rr", "eval"},
         r_grid({Ratio(4)}), 100, Expectation::pass, [](const Params& p, const PrecisionContext& ctx) {
           const Nome q = nome_from_r(get(p, "r"), ctx);
           const Real s5 = sqrt(Real(5));
           const Real R = R_at(q, ctx);
           const Real R5 = pow(R, 5);
           const Real dR = pow(f_minus(q, ctx), 4) * R * root(1 / R5 - 11 - R5, 6) / (5 * q.power(Ratio(5, 6)));
           const Real printed = 8 * sqrt(Real(2) / 5 * (9 + 5 * s5 - 2 * sqrt(50 + 22 * s5))) * exp(2 * pi()) /
                                pow(pi(), 3) * pow(gamma(Real(5) / 4, ctx), 4);
           return Sides{same(R, Real(-1) / 2 - s5 / 2 + sqrt((5 + s5) / 2)), same(dR, printed)};
         }});
}

// ---------------------------------------------------------------------------

void add_gollnitz_gordon(Catalog& c) {
  c.add({"h_thm31", "H = -P + sqrt(P^2 + 1) with P = k / (1 - k'), and k from H", "H(q)=-P+\\sqrt{P^2+1}",
         {"h", "elliptic"}, r_grid(), 100, Expectation::pass, [](const Params& p, const PrecisionContext& ctx) {
           const SingularPoint sp = modulus_from_r(get(p, "r"), ctx);
           const Modulus& m = sp.modulus;
           const Real H = H_at(sp.nome, ctx);
           const Real P = m.k / (1 - m.kprime);
           const Real H2 = H * H;
           return Sides{same(H, -P + sqrt(P * P + 1)), same(m.k, 4 * (H - H * H2) / sq(1 + H2))};
         }});

  c.add({"h_eq43", "1/H - H = M(q^2)^2 / M(q^4)^2", "H(q)^{-1}-H(q)=\\frac{M^2(q^2)}{M^2(q^4)}",
         {"h", "product"}, r_grid(), 100, Expectation::pass, [](const Params& p, const PrecisionContext& ctx) {
           const Nome q = nome_from_r(get(p, "r"), ctx);
           const Real H = H_at(q, ctx);
           const Real rhs = sq(m_building(q.pow(2), ctx) / m_building(q.pow(4), ctx));
           return Sides{same(1 / H - H, rhs)};
         }});

  c.add({"landen_step", "k_4r = (1 - k') / (1 + k') and K[4r] = (1 + k') K[r] / 2",
         "k_{4r}=\\frac{1-k'_{r}}{1+k'_{r}}", {"h", "elliptic", "modular"}, r_grid(), 100, Expectation::pass,
         [](const Params& p, const PrecisionContext& ctx) {
           const Ratio r = get(p, "r");
           const Modulus m = modulus_from_r(r, ctx).modulus;
           const Modulus m4 = modulus_from_r(r * Ratio(4), ctx).modulus;
           return Sides{same(m4.k, (1 - m.kprime) / (1 + m.kprime)),
                        same(ellK(m4, ctx), (1 + m.kprime) / 2 * ellK(m, ctx))};
         }});

  c.add({"m_theta_50", "M(q) = theta_2(q^(1/2)) / 2 = sqrt(k_{r/4} K(k_{r/4}) / (2 pi))", "M(q)=\\theta_2(q^{1/2})",
         {"m", "product", "elliptic"}, r_grid(), 100, Expectation::pass,
         [](const Params& p, const PrecisionContext& ctx) {
           const Ratio r = get(p, "r");
           const Nome q = nome_from_r(r, ctx);
           const Real M = direct(FractionKind::M, q, ctx);
           return Sides{same(M, m_building(q, ctx)), same(M, theta(2, q.pow(Ratio(1, 2)), ctx) / 2),
                        same(M, m_building_elliptic(r, ctx))};
         }});

  c.add({"m_theta_50_printed", "M(q) against the printed theta_2(q^(1/2)) and its q^(-1/8) elliptic form",
         "M(q)=\\theta_2(q^{1/2})=q^{-1/8}\\sqrt{\\frac{k_{r/4}K(k_{r/4})}{2\\pi}}",
         {"m", "product", "elliptic", "known_discrepancy"}, r_grid(), 100, Expectation::known_discrepancy,
         [](const Params& p, const PrecisionContext& ctx) {
           const Ratio r = get(p, "r");
           const Nome q = nome_from_r(r, ctx);
           const Real M = direct(FractionKind::M, q, ctx);
           const Modulus m = modulus_from_r(r / Ratio(4), ctx).modulus;
           const Real printed = sqrt(m.k * ellK(m, ctx) / (2 * pi())) / q.power(Ratio(1, 8));
           return Sides{same(M, theta(2, q.pow(Ratio(1, 2)), ctx)), same(M, printed)};
         }});

  c.add({"euler_cf_49", "1/(1 - b1/(1 + b1 - b2/(1 + b2 - ...))) = 1 + sum prod b_k with b_n = q^n",
         "=1+\\sum^{\\infty}_{n=1}\\prod^{n}_{k=1}b_k", {"m", "cf"},
         grid_of("q", {Ratio(1, 10), Ratio(3, 10), Ratio(1, 2)}), 100, Expectation::pass,
         [](const Params& p, const PrecisionContext& ctx) {
           const Nome q = Nome::from_value(to_real(get(p, "q")));
           const CFSpec euler{[](const Nome&) { return Real(1); }, [](const Nome&) { return Real(1); },
                              [](std::size_t n, const Nome& x) { return Real(-pow(x.value(), n)); },
                              [](std::size_t n, const Nome& x) { return 1 + pow(x.value(), n); }};
           Real prod = 1;
           std::size_t n = 1;
           const Real sum = sum_to_tolerance(
               [&](std::size_t) {
                 prod *= pow(q.value(), n++);
                 return prod;
               },
               SumMode::series, ctx);
           return Sides{same(eval_cf(euler, q, ctx).value, 1 + sum)};
         }});

  const std::vector<Params> ab_grid = grid_of("a/pi", {Ratio(1), Ratio(1, 2), Ratio(3, 2), Ratio(2)});

  c.add({"h_thm32", "(H(e^-a) + 2 - 1/H(e^-a)) (H(e^-b) + 2 - 1/H(e^-b)) = 8 for ab = pi^2",
         "\\left(H(e^{-a})+2-\\frac{1}{H(e^{-a})}\\right)\\left(H(e^{-b})+2-\\frac{1}{H(e^{-b})}\\right)=8",
         {"h", "reflection"}, ab_grid, 100, Expectation::pass, [](const Params& p, const PrecisionContext& ctx) {
           const Real t = to_real(get(p, "a/pi"));
           return Sides{same(h_reflect(pi() * t, ctx) * h_reflect(pi() / t, ctx), Real(8))};
         }});
  c.alias("h_reflection_thm32", "h_thm32");

  c.add({"h_corollary_58", "(1 + sqrt2 + H(e^-a)) (1 + sqrt2 + H(e^-b)) = 2 (2 + sqrt2) for ab = pi^2",
         "(1+\\sqrt{2}+H(e^{-a}))(1+\\sqrt{2}+H(e^{-b}))", {"h", "reflection"}, ab_grid, 100, Expectation::pass,
         [](const Params& p, const PrecisionContext& ctx) {
           const Real t = to_real(get(p, "a/pi"));
           const Real s2 = sqrt(Real(2));
           const Real ha = H_at(Nome::from_log(-pi() * t), ctx), hb = H_at(Nome::from_log(-pi() / t), ctx);
           return Sides{same((1 + s2 + ha) * (1 + s2 + hb), 2 * (2 + s2))};
         }});

  c.add({"psi_transforms_54_56",
         "psi and phi reflections: product 8 for ab = 4 pi^2, psi(e^-a^2) and psi(e^-2a^2) for ab = 2 pi, "
         "product 2 for ab = pi^2 / 4; a is t times the square root of the constant",
         "\\psi(e^{-a^2})=\\frac{\\sqrt{b}}{2\\sqrt{a}}e^{a^2/8}\\phi(-e^{-b^2/2})", {"h", "theta", "reflection"},
         grid_of("t", {Ratio(1, 2), Ratio(1), Ratio(2)}), 100, Expectation::pass,
         [](const Params& p, const PrecisionContext& ctx) {
           const Real t = to_real(get(p, "t"));
           auto psi_at = [&](const Real& x) { return psi(Nome::from_log(-x), ctx); };
           auto factor52 = [&](const Real& a) { return 2 - sq(psi_at(a)) / (exp(-a / 4) * sq(psi_at(2 * a))); };
           const Real a52 = 2 * pi() * t, b52 = 2 * pi() / t;
           const Real c = sqrt(2 * pi());
           const Real a = c * t, b = c / t;
           const Real rhs54 = sqrt(b) / (2 * sqrt(a)) * exp(a * a / 8) * phi_neg(Nome::from_log(-b * b / 2), ctx);
           const Real rhs55 = sqrt(b / 2) / (2 * sqrt(a)) * exp(a * a / 4) * phi_neg(Nome::from_log(-b * b / 4), ctx);
           auto factor56 = [&](const Real& x) {
             const Nome q = Nome::from_log(-x);
             return 1 - phi(q, ctx) / phi_neg(q, ctx);
           };
           const Real a56 = pi() / 2 * t, b56 = pi() / 2 / t;
           return Sides{same(factor52(a52) * factor52(b52), Real(8)), same(psi_at(a * a), rhs54),
                        same(psi_at(2 * a * a), rhs55), same(factor56(a56) * factor56(b56), Real(2))};
         }});

  c.add({"k_reflection_57_58", "k'_{1/(4r)} = (1 - k'_r) / (1 + k'_r) and k_r = k'_{1/r}", "k_r=k'_{1/r}",
         {"h", "elliptic", "reflection"}, r_grid(), 100, Expectation::pass,
         [](const Params& p, const PrecisionContext& ctx) {
           const Ratio r = get(p, "r");
           const Modulus m = modulus_from_r(r, ctx).modulus;
           const Modulus inv4 = modulus_from_r(Ratio(1) / (r * Ratio(4)), ctx).modulus;
           const Modulus inv = modulus_from_r(Ratio(1) / r, ctx).modulus;
           return Sides{same(inv4.kprime, (1 - m.kprime) / (1 + m.kprime)), same(m.k, inv.kprime)};
         }});

  c.add({"h_thm33_59", "H(q)^2 = (H(q^2) - H(q^2)^2) / (1 + H(q^2))",
         "H^2(q)=\\frac{H(q^2)-H^2(q^2)}{1+H(q^2)}", {"h", "modular"}, r_grid(), 100, Expectation::pass,
         [](const Params& p, const PrecisionContext& ctx) {
           const Nome q = nome_from_r(get(p, "r"), ctx);
           const Real h = H_at(q, ctx), h2 = H_at(q.pow(2), ctx);
           return Sides{same(h * h, (h2 - h2 * h2) / (1 + h2))};
         }});

  c.add({"h_eq60", "sqrt(k'_r) against the printed (H + 2H - 1) / (H - 2H - 1), H = H(q^2)",
         "\\sqrt{k'_r}=\\frac{H(q^2)+2H(q^2)-1}{H(q^2)-2H(q^2)-1}", {"h", "known_discrepancy"}, r_grid(), 100,
         Expectation::known_discrepancy, [](const Params& p, const PrecisionContext& ctx) {
           const SingularPoint sp = modulus_from_r(get(p, "r"), ctx);
           const Real h = H_at(sp.nome.pow(2), ctx);
           return Sides{same(sqrt(sp.modulus.kprime), (h + 2 * h - 1) / (h - 2 * h - 1))};
         }});

  c.add({"h_eq60_squared", "sqrt(k'_r) = (H^2 + 2H - 1) / (H^2 - 2H - 1), H = H(q^2)",
         "\\sqrt{k'_r}=\\frac{H(q^2)+2H(q^2)-1}{H(q^2)-2H(q^2)-1}", {"h", "modular"}, r_grid(), 100,
         Expectation::pass, [](const Params& p, const PrecisionContext& ctx) {
           const SingularPoint sp = modulus_from_r(get(p, "r"), ctx);
           const Real h = H_at(sp.nome.pow(2), ctx);
           return Sides{same(sqrt(sp.modulus.kprime), (h * h + 2 * h - 1) / (h * h - 2 * h - 1))};
         }});

  c.add({"h_evals", "H(e^{-pi/2}) and H(e^{-pi sqrt2 / 2}) against the printed radicals",
         "H\\left(e^{-\\pi/2}\\right)=\\sqrt{1+2\\sqrt{2}-2\\sqrt{2+\\sqrt{2}}}", {"h", "eval"},
         r_grid({Ratio(1, 4), Ratio(1, 2)}), 100, Expectation::pass,
         [](const Params& p, const PrecisionContext& ctx) {
           const Ratio r = get(p, "r");
           const Real s2 = sqrt(Real(2));
           const Real printed = r == Ratio(1, 4) ? sqrt(1 + 2 * s2 - 2 * sqrt(2 + s2))
                                                 : sqrt(3 + 2 * s2 - 2 * sqrt(4 + 3 * s2));
           return Sides{same(H_at(nome_from_r(r, ctx), ctx), printed)};
         }});

  c.add({"k9_modular_61", "sqrt(k_r k_9r) + sqrt(k'_r k'_9r) = 1", "\\sqrt{k_rk_{9r}}+\\sqrt{k'_rk'_{9r}}=1",
         {"v", "modular"}, r_grid(), 100, Expectation::pass, [](const Params& p, const PrecisionContext& ctx) {
           const Ratio r = get(p, "r");
           const Modulus m = modulus_from_r(r, ctx).modulus;
           const Modulus n = modulus_from_r(r * Ratio(9), ctx).modulus;
           return Sides{same(sqrt(m.k * n.k) + sqrt(m.kprime * n.kprime), Real(1))};
         }});
}

// ---------------------------------------------------------------------------

void add_cubic(Catalog& c) {
  c.add({"v_lemma41", "V from k_r, k_9r; k_r = G(w) and k'_9r = (1 - sqrt w)^2 / k'_r with w = k_r k_9r",
         "V(q)=\\frac{2^{-1/3}(k_{9r})^{1/4}(k'_{r})^{1/6}}{(k_r)^{1/12}(k'_{9r})^{1/2}}", {"v", "elliptic"},
         r_grid(), 100, Expectation::pass, [](const Params& p, const PrecisionContext& ctx) {
           const Ratio r = get(p, "r");
           const SingularPoint sp = modulus_from_r(r, ctx);
           const Modulus& m = sp.modulus;
           const Modulus n = modulus_from_r(r * Ratio(9), ctx).modulus;
           const Real V = V_at(sp.nome, ctx);
           const Real rhs = root(n.k, 4) * root(m.kprime, 6) / (cbrt(Real(2)) * root(m.k, 12) * sqrt(n.kprime));
           const Real w = m.k * n.k, sw = sqrt(w);
           // G(w) = w / sqrt(D): compare D with (w / k)^2, judged against its 2 sqrt(w) terms
           const Real D = 2 * sw - 3 * w + 2 * w * sw -
                          2 * sw * sqrt(1 - 3 * sw + 4 * w - 3 * w * sw + w * w);
           return Sides{same(V, rhs), same(D, sq(w / m.k), 2 * sw), same(n.kprime, sq(1 - sw) / m.kprime)};
         }});

  c.add({"v_W_67_69", "W from w, V from k and w or W, 2V^3 and k^2 in sqrt W",
         "V(q)=\\frac{(k'_r)^{2/3}w^{1/4}}{2^{1/3}(k_r)^{1/3}(1-\\sqrt{w})}", {"v", "param"}, r_grid(), 100,
         Expectation::pass, [](const Params& p, const PrecisionContext& ctx) {
           const CubicChain ch = cubic_closed(get(p, "r"), ctx);
           const Real V = V_at(nome_from_r(ch.r, ctx), ctx);
           const Real& w = ch.w3;
           const Real sw = sqrt(w);
           const Real W_lit = 2 - 3 * sw + 2 * w - 2 * (1 - sw) * sqrt(1 - sw + w);
           const Real& W = ch.W3;
           const Real sW = sqrt(W);
           const Real c2 = cbrt(Real(2));
           return Sides{same(W_lit, W, Real(2)),
                        same(V, rpow(ch.m.kprime, Ratio(2, 3)) * root(w, 4) / (c2 * cbrt(ch.m.k) * (1 - sw))),
                        same(V, cbrt(W - w * sw) / root(W, 6) / (c2 * (1 - sw))),
                        same(2 * cube(V), sW / sq(1 + sW)),
                        same(sq(ch.m.k), sW * cube((2 + sW) / (1 + 2 * sW)))};
         }});

  c.add({"v_thm41", "k^(2/3) in Z and V, its polynomial form in s, s^2 = 2V^3, and k^2 in T",
         "(k_r)^2=\\frac{(1-T)(3+T)^3}{(1+T)(3-T)^3}", {"v", "param"}, r_grid(), 100, Expectation::pass,
         [](const Params& p, const PrecisionContext& ctx) {
           const CubicChain ch = cubic_closed(get(p, "r"), ctx);
           const CubicT ct = cubic_t(nome_from_r(ch.r, ctx), ctx);
           const Real& Z = ch.Z;
           const Real Z3 = cube(Z), Z6 = Z3 * Z3;
           const Real sV = sqrt(Real(2)) * rpow(ct.V, Ratio(3, 2));
           const Real k23 = rpow(ch.m.k, Ratio(2, 3));
           const Real s = sqrt(2 * cube(ct.V));
           const Real& T = ct.T;
           return Sides{same(k23, Z * Z * (sV + Z3) / (-sV + 2 * Z3)),
                        vanishes({s * k23, s * Z * Z, -2 * k23 * Z3, Z3 * Z * Z}),
                        same(s * s, Z6 / sq(1 + Z6)),
                        same(sq(ch.m.k), (1 - T) * cube(3 + T) / ((1 + T) * cube(3 - T)))};
         }});

  c.add({"corollary41_73", "X = sqrt W(q) against Y = sqrt W(q^2)",
         "X^{1/2}\\left(\\frac{2+X}{1+2X}\\right)^{3/2}=2\\frac{Y^{1/4}}{\\left(\\frac{1+2Y}{2+Y}\\right)^{3/"
         "4}+Y^{1/2}\\left(\\frac{2+Y}{1+2Y}\\right)^{3/4}}",
         {"v", "modular"}, r_grid(), 100, Expectation::pass, [](const Params& p, const PrecisionContext& ctx) {
           const Nome q = nome_from_r(get(p, "r"), ctx);
           const Real X = cubic_t(q, ctx).X, Y = cubic_t(q.pow(2), ctx).X;
           const Real lhs = sqrt(X) * rpow((2 + X) / (1 + 2 * X), Ratio(3, 2));
           const Real rhs =
               2 * root(Y, 4) / (rpow((1 + 2 * Y) / (2 + Y), Ratio(3, 4)) + sqrt(Y) * rpow((2 + Y) / (1 + 2 * Y), Ratio(3, 4)));
           return Sides{same(lhs, rhs)};
         }});

  c.add({"duplication_74", "duplication formula between u = T(q^2) and v = T(q)", "Set $u=T(q^2)$, $v=T(q)$",
         {"v", "modular"}, r_grid(), 100, Expectation::pass, [](const Params& p, const PrecisionContext& ctx) {
           const Nome q = nome_from_r(get(p, "r"), ctx);
           const Real u = cubic_t(q.pow(2), ctx).T, v = cubic_t(q, ctx).T;
           const Real lhs = sqrt(1 - u) * rpow(3 + u, Ratio(3, 2)) / (sqrt(1 + u) * rpow(3 - u, Ratio(3, 2)));
           const Real a = rpow(3 - v, Ratio(3, 2)) * sqrt(1 + v), b = 4 * rpow(v, Ratio(3, 2));
           return Sides{same(lhs, (a - b) / (a + b))};
         }});

  c.add({"w3_prop42_75", "w = k_r k_9r from V(q)",
         "w=\\left(\\frac{1-4V(q)^3-8V(q)^6-\\sqrt{1-8V(q)^3}}{4V(q)^3\\left(1-2V(q)^3-\\sqrt{1-8V(q)^3}\\right)}"
         "\\right)^2",
         {"v", "modular"}, r_grid(), 100, Expectation::pass, [](const Params& p, const PrecisionContext& ctx) {
           const Ratio r = get(p, "r");
           const CubicT ct = cubic_t(nome_from_r(r, ctx), ctx);
           const Real w = modulus_from_r(r, ctx).modulus.k * modulus_from_r(r * Ratio(9), ctx).modulus.k;
           const Real V3 = cube(ct.V);
           // denominator cleared: the numerator subtracts terms of size 1
           const Real num = 1 - 4 * V3 - 8 * V3 * V3 - ct.T;
           const Real den = 4 * V3 * (1 - 2 * V3 - ct.T);
           return Sides{same(num, sqrt(w) * den, Real(1))};
         }});

  c.add({"cubic_modular_76", "V(q)^3 in V(q^3)",
         "V(q)^3=V(q^3)\\frac{1-V(q^3)+V(q^3)^2}{1+2V(q^3)+4V(q^3)^2}", {"v", "modular"}, r_grid(), 100,
         Expectation::pass, [](const Params& p, const PrecisionContext& ctx) {
           const Nome q = nome_from_r(get(p, "r"), ctx);
           const Real V = V_at(q, ctx), V3 = V_at(q.pow(3), ctx);
           return Sides{same(cube(V), V3 * (1 - V3 + V3 * V3) / (1 + 2 * V3 + 4 * V3 * V3))};
         }});

  c.add({"k81_prop43_77", "k_81r from V(q^3) and k_r",
         "k_{81r}=\\left(\\frac{1+2V(q^3)^2-\\sqrt{1-8V(q^3)^3}}{1+2V(q^3)^2+\\sqrt{1-8V(q^3)^3}}\\right)^2k_r",
         {"v", "modular"}, r_grid(), 100, Expectation::pass, [](const Params& p, const PrecisionContext& ctx) {
           const Ratio r = get(p, "r");
           return Sides{same(modulus_from_r(r * Ratio(81), ctx).modulus.k, k81_from_v3(r, ctx))};
         }});

  c.add({"corollary42_78", "H(q), H(q^6) against t = 4T / ((1 + T)(3 - T))",
         "t=\\frac{4T(q)}{(1+T(q))(3-T(q))}", {"v", "h", "modular"}, r_grid({Ratio(1, 4), Ratio(1, 2)}), 100,
         Expectation::pass, [](const Params& p, const PrecisionContext& ctx) {
           const Nome q = nome_from_r(get(p, "r"), ctx);
           const Real u = H_at(q, ctx), v = H_at(q.pow(6), ctx);
           const Real T = cubic_t(q, ctx).T;
           const Real u2 = u * u;
           const Real lhs =
               sqrt(u2 * u2 - 6 * u2 + 1) * (v * v + 2 * v - 1) / ((u2 + 1) * (v * v - 2 * v - 1));
           return Sides{same(lhs, 4 * T / ((1 + T) * (3 - T)))};
         }});

  c.add({"cubic_eval_a", "V(e^{-pi}) against the printed radical",
         "\\left(-67-39\\sqrt{3}+(9+6\\sqrt{3})\\sqrt{2(12+7\\sqrt{3})}\\right)", {"v", "eval", "known_discrepancy"},
         r_grid({Ratio(1)}), 100, Expectation::known_discrepancy, [](const Params& p, const PrecisionContext& ctx) {
           const Real s3 = sqrt(Real(3));
           const Real printed = (-67 - 39 * s3 + (9 + 6 * s3) * sqrt(2 * (12 + 7 * s3))) / rpow(Real(2), Ratio(2, 3));
           return Sides{same(V_at(nome_from_r(get(p, "r"), ctx), ctx), printed)};
         }});

  c.add({"cubic_eval_b_5832", "(3 - T)^3 (3 + T)^3 / ((1 - T)(1 + T)) = 5832 at q = e^{-pi sqrt2}", "=5832",
         {"v", "eval"}, r_grid({Ratio(2)}), 100, Expectation::pass, [](const Params& p, const PrecisionContext& ctx) {
           const Real T = cubic_t(nome_from_r(get(p, "r"), ctx), ctx).T;
           return Sides{same(cube(3 - T) * cube(3 + T) / ((1 - T) * (1 + T)), Real(5832))};
         }});
}

// ---------------------------------------------------------------------------

void add_s_and_q(Catalog& c) {
  c.add({"s_thm51", "S against its products, the k_4r form and k^(1/4) / sqrt2",
         "S(q)=\\frac{(k_r)^{1/4}}{\\sqrt{2}}", {"s", "elliptic", "product"}, r_grid(), 100, Expectation::pass,
         [](const Params& p, const PrecisionContext& ctx) {
           const Ratio r = get(p, "r");
           const SingularPoint sp = modulus_from_r(r, ctx);
           const Modulus& m = sp.modulus;
           const Modulus m4 = modulus_from_r(r * Ratio(4), ctx).modulus;
           const Nome& q = sp.nome;
           const Real S = direct(FractionKind::S, q, ctx);
           const Nome q2 = q.pow(2);
           const Real prod =
               q.power(Ratio(1, 8)) * qpoch_inf(-q2.value(), q2, ctx) / qpoch_inf(-q.value(), q2, ctx);
           const Real phi_form = q.power(Ratio(1, 8)) * sq(phi_cap(q2, ctx)) / phi_cap(q, ctx);
           const Real k4_form =
               rpow(m4.k, Ratio(1, 6)) * root(m.kprime, 6) / (root(Real(2), 6) * root(m.k, 12) * cbrt(m4.kprime));
           return Sides{same(S, prod), same(S, phi_form), same(S, k4_form), same(S, root(m.k, 4) / sqrt(Real(2)))};
         }});

  c.add({"q_thm52", "Q against its products, M(q^2)^2 and both elliptic forms",
         "Q(q)=\\frac{1}{\\pi}K(k_{4r})\\sqrt{k_{4r}}=\\frac{1}{2\\pi}K(k_r)k_r", {"q", "elliptic", "product"},
         r_grid(), 100, Expectation::pass, [](const Params& p, const PrecisionContext& ctx) {
           const Ratio r = get(p, "r");
           const Nome q = nome_from_r(r, ctx);
           const Real Q = Q_at(q, ctx);
           const Nome q2 = q.pow(2), q4 = q.pow(4);
           const Real prod = sqrt(q.value()) * sq(qpoch_inf(q4.value(), q4, ctx) / qpoch_inf(q2.value(), q4, ctx));
           const Real eta = sqrt(q.value()) * sq(f_minus(q4, ctx) * phi_cap(q2, ctx));
           const QClosed cf = q_closed_forms(r, ctx);
           return Sides{same(Q, prod), same(Q, eta), same(Q, sq(m_building(q2, ctx))), same(Q, cf.from_4r),
                        same(Q, cf.from_r)};
         }});

  c.add({"q_eval_gamma", "Q(e^{-pi sqrt2}) against the Gamma quotient",
         "Q(e^{-\\pi \\sqrt{2}})=\\frac{(\\sqrt{2}-1)}{\\sqrt{2\\pi}}\\frac{\\Gamma(9/8)}{\\Gamma(5/8)}",
         {"q", "eval"}, r_grid({Ratio(2)}), 100, Expectation::pass,
         [](const Params& p, const PrecisionContext& ctx) {
           const Real printed = (sqrt(Real(2)) - 1) / sqrt(2 * pi()) * gamma(Real(9) / 8, ctx) / gamma(Real(5) / 8, ctx);
           return Sides{same(Q_at(nome_from_r(get(p, "r"), ctx), ctx), printed)};
         }});

  c.add({"q_modular_thm53_87", "u = Q(q)/Q(q^2), v = Q(q^3)/Q(q^6) satisfy the quartic relation",
         "v^4+u^4-v^3u^3+6v^2u^2-16vu=0", {"q", "modular"}, r_grid(), 100, Expectation::pass,
         [](const Params& p, const PrecisionContext& ctx) {
           const Nome q = nome_from_r(get(p, "r"), ctx);
           const Real u = Q_at(q, ctx) / Q_at(q.pow(2), ctx);
           const Real v = Q_at(q.pow(3), ctx) / Q_at(q.pow(6), ctx);
           return Sides{vanishes({pow(v, 4), pow(u, 4), -cube(v * u), 6 * sq(v * u), -16 * v * u})};
         }});
}

}  // namespace

const Catalog& Catalog::standard() {
  static const Catalog catalog = [] {
    Catalog c;
    add_rogers_ramanujan(c);
    add_gollnitz_gordon(c);
    add_cubic(c);
    add_s_and_q(c);
    return c;
  }();
  return catalog;
}

}  // namespace rcf
