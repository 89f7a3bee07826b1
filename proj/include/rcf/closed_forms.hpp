#pragma once

#include "rcf/cfrac.hpp"
#include "rcf/elliptic.hpp"
#include "rcf/numerics.hpp"

namespace rcf {

// ---------------------------------------------------------------------------
// Rogers-Ramanujan fraction from the singular moduli k_r and k_{25r}.

struct RRChain {
  Ratio r;
  Modulus m;    ///< at r
  Modulus m25;  ///< at 25 r
  Real M5;      ///< K(k_{25r}) / K(k_r)
  Real a_r;     ///< (k'/k'_25)^2 sqrt(k/k_25) M5^-3
  Real R;
};

/// a = (k'/k'_25)^2 sqrt(k/k_25) M5^{-3}.
Real rr_invariant(const Modulus& m, const Modulus& m25, const Real& M5, const PrecisionContext& ctx);
/// The root R in (0,1) of R^{-5} - 11 - R^5 = a, written without cancellation:
/// R^5 = 2 / ((11 + a) + sqrt(a^2 + 22a + 125)).
Real rr_from_invariant(const Real& a, const PrecisionContext& ctx);
/// Literal (-11/2 - a/2 + sqrt(125 + 22a + a^2)/2)^{1/5}.
Real rr_from_invariant_literal(const Real& a, const PrecisionContext& ctx);

/// ChainInconsistent if R disagrees with the direct fraction by more than 1e3 eps.
RRChain rr_chain(const Ratio& r, const PrecisionContext& ctx);

/// (5x - 1)^5 (1 - x) - 256 k^2 k'^2 x.
RealPoly m5_polynomial(const Modulus& m);
/// Root of m5_polynomial in (1/5, 1) nearest to `oracle`; NoMatchingRoot
/// when none lies within 1e-3 of it.
Real m5_polyroot(const Modulus& m, const Real& oracle, const PrecisionContext& ctx);

// ---------------------------------------------------------------------------
// The L / M / w and p / W / T parametrizations.

struct RRParam {
  Real L, M, w, t, y;
  Real p, W, T;
  Real kstar, x;  ///< k* = k / w, x = sqrt(k*)
  Real c;         ///< k'^2 k*^5 / (k*^4 - k^2)
  Real G;         ///< (R^-5 - 11 - R^5)^{1/3} from the direct fraction
};

/// All symbols at a singular point. w = sqrt(k k_25) with both moduli from
/// modulus_from_r; p is recovered from k* in closed form.
RRParam rr_param(const Ratio& r, const PrecisionContext& ctx);

/// L = -9 + 9w^2 + sqrt(3) sqrt(27 + 74 w^2 + 27 w^4), rationalised.
Real L_from_w(const Real& w, const PrecisionContext& ctx);
/// M = (9 - 9w^2 + sqrt(81 + 222 w^2 + 81 w^4)) / 64.
Real M_from_w(const Real& w, const PrecisionContext& ctx);
/// w = sqrt(L (18 + L) / (6 (64 + 3L))).
Real w_from_L(const Real& L, const PrecisionContext& ctx);
/// sqrt(w / k) = sqrt(k_25 / w) as a function of L.
Real sqrt_w_over_k(const Real& L, const PrecisionContext& ctx);

struct Theorem22 {
  Real L, M, w, k, k25;
  Real r;      ///< (K(k') / K(k))^2, not rational in general
  Real M5;     ///< K(k_25) / K(k)
  Real A_L;
  Real R;      ///< from A_L
  Real R_direct;
};

/// End-to-end chain from L > 0. ChainInconsistent if R misses the direct
/// fraction at q = e^{-pi sqrt r} by more than 1e3 eps.
Theorem22 theorem22_chain(const Real& L, const PrecisionContext& ctx);

struct PParam {
  Real p, kstar, w, W, T, k;
  Real kprime2;  ///< 1 - k^2; negative when p lies below the physical range
};

/// k*, w, W, T and k = k* w from p > 0 by the printed radicals.
PParam p_param_roundtrip(const Real& p, const PrecisionContext& ctx);
/// Inverse of k*(p): p = ((s^2 - 6) + sqrt((6 - s^2)^2 + 64 s^2)) / (16 s), s = sqrt(6 k*).
Real p_from_kstar(const Real& kstar, const PrecisionContext& ctx);

/// Degree-12 polynomial in p with coefficients in k, k'^2.
RealPoly p_polynomial(const Real& k, const Real& kprime2);
/// Degree-12 polynomial in x. `printed` keeps the bare 15 at x^4; otherwise 15 k^2.
RealPoly x_polynomial(const Real& k, const Real& kprime2, bool printed);
/// Sextic in w with coefficients in k.
RealPoly w_sextic(const Real& k);

struct Residual {
  Real value;
  Real scale;  ///< largest |term|
};

/// Sextic in G with coefficients in c_r and k.
Residual g_sextic(const Real& c, const Real& G, const Modulus& m, const PrecisionContext& ctx);
Residual g_sextic_residual(const Ratio& r, const PrecisionContext& ctx);

/// Real root of the w-sextic nearest to sqrt(k k_25); NoMatchingRoot when
/// w^2 / k misses k_25 by more than 1e-3.
Real w_sextic_solve(const Ratio& r, const PrecisionContext& ctx);

// ---------------------------------------------------------------------------
// Derivative of R.

struct RRDerivative {
  Real elliptic;  ///< from K, the moduli and M5
  Real eta;       ///< (1/5) q^{-5/6} f(-q)^4 R (R^-5 - 11 - R^5)^{1/6}
};

/// ChainInconsistent if the two forms differ by more than 1e3 eps.
RRDerivative rr_deriv_closed(const Ratio& r, const PrecisionContext& ctx);

// ---------------------------------------------------------------------------
// Gollnitz-Gordon fraction.

struct HChain {
  Ratio r;
  Real P;  ///< k / (1 - k') = (1 + k') / k
  Real H;
};

HChain h_closed(const Ratio& r, const PrecisionContext& ctx);
/// k = 4 (H - H^3) / (1 + H^2)^2.
Real k_from_h(const Real& H, const PrecisionContext& ctx);

// ---------------------------------------------------------------------------
// Cubic fraction.

struct CubicChain {
  Ratio r;
  Modulus m;   ///< at r
  Modulus m9;  ///< at 9 r
  Real V;
  Real T;   ///< sqrt(1 - 8 V^3)
  Real X;   ///< (1 - T) / (1 + T) = sqrt(W3)
  Real W3;
  Real w3;  ///< k k_9
  Real Z;   ///< W3^{1/12}
  Real s;   ///< sqrt(2 V^3)
};

/// V from k_r and k_{9r}; ChainInconsistent if it misses the direct fraction.
CubicChain cubic_closed(const Ratio& r, const PrecisionContext& ctx);
/// k_{81r} from V(q^3) and k_r.
Real k81_from_v3(const Ratio& r, const PrecisionContext& ctx);

// ---------------------------------------------------------------------------
// S and Q fractions.

/// k^{1/4} / sqrt 2.
Real s_closed(const Ratio& r, const PrecisionContext& ctx);

struct QClosed {
  Real from_4r;  ///< K(k_{4r}) sqrt(k_{4r}) / pi
  Real from_r;   ///< K(k_r) k_r / (2 pi)
};

QClosed q_closed_forms(const Ratio& r, const PrecisionContext& ctx);
/// ChainInconsistent unless both forms agree.
Real q_closed(const Ratio& r, const PrecisionContext& ctx);

/// Closed-form route for any fraction kind at q = e^{-pi sqrt r}.
Real fraction_closed(FractionKind kind, const Ratio& r, const PrecisionContext& ctx);

}  // namespace rcf
