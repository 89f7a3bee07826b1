#pragma once

#include "rcf/numerics.hpp"
#include "rcf/qseries.hpp"

namespace rcf {

/// Modulus pair (k, k') with k^2 + k'^2 = 1. Both are stored because each is
/// computed from its own theta quotient and near r -> 0 or r -> inf one of
/// them cannot be recovered from the other without cancellation.
struct Modulus {
  Real k;
  Real kprime;
};

/// The singular point r with its nome q = e^{-pi sqrt r} and modulus k_r.
struct SingularPoint {
  Ratio r;
  Real r_value;
  Nome nome;
  Modulus modulus;
};

/// M_n(r) = K(k_{n^2 r}) / K(k_r).
struct MultiplierValue {
  int n;
  Ratio r;
  Real value;
};

Real agm(const Real& a, const Real& b, const PrecisionContext& ctx);

/// Complete elliptic integral of the first kind; DomainError unless 0 <= k < 1.
Real ellK(const Real& k, const PrecisionContext& ctx);
/// K(m.k) through the stored complement, pi / (2 agm(1, k')).
Real ellK(const Modulus& m, const PrecisionContext& ctx);
/// K(m.kprime) = K'(m.k).
Real ellK_prime(const Modulus& m, const PrecisionContext& ctx);

/// k = theta_2^2 / theta_3^2 and k' = theta_4^2 / theta_3^2 at the given nome.
Modulus modulus_from_nome(const Nome& q, const PrecisionContext& ctx);
/// Singular modulus k_r. PrecisionExhausted when q < 2^-working_bits.
SingularPoint modulus_from_r(const Ratio& r, const PrecisionContext& ctx);
/// Same for a real (non-rational) r; the stored Ratio is 0.
SingularPoint modulus_from_r(const Real& r, const PrecisionContext& ctx);

/// Inverse: r = (K(k') / K(k))^2.
Real r_from_modulus(const Modulus& m, const PrecisionContext& ctx);

/// k_r from the product form 8 q^{1/2} Phi(-q)^12 / (1 + sqrt(1 + 64 q Phi(-q)^24)).
Real k_product_form(const Nome& q, const PrecisionContext& ctx);

MultiplierValue multiplier(int n, const Ratio& r, const PrecisionContext& ctx);

/// Degree-2 step r -> 4r: k = (1 - k') / (1 + k'), k' = 2 sqrt(k') / (1 + k').
Modulus landen_4r(const Modulus& m, const PrecisionContext& ctx);

/// Gamma function on x > 0.
Real gamma(const Real& x, const PrecisionContext& ctx);

// ---------------------------------------------------------------------------
// Product-to-elliptic bridges at a singular point.

/// Phi(-q) = 2^{-1/6} q^{-1/24} k^{1/12} / k'^{1/6}.
Real phi_cap_elliptic(const SingularPoint& sp, const PrecisionContext& ctx);
/// f(-q) = (2^{8/3} / pi^4 q^{-1/3} k^{2/3} k'^{8/3} K^4)^{1/8}.
Real f_minus_elliptic(const SingularPoint& sp, const PrecisionContext& ctx);
/// f(-q^2) = (2 k k' K^3 / (pi^3 q^{1/2}))^{1/6}.
Real f_minus_sq_elliptic(const SingularPoint& sp, const PrecisionContext& ctx);
/// M(q) = sqrt(k_{r/4} K(k_{r/4}) / (2 pi)).
Real m_building_elliptic(const Ratio& r, const PrecisionContext& ctx);

}  // namespace rcf
