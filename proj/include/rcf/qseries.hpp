#pragma once

#include <optional>

#include "rcf/numerics.hpp"

namespace rcf {

/// A real nome 0 <= q < 1 carried together with log q, so that fractional
/// powers q^(m/n) are exp((m/n) log q) rather than roots of a rounded q.
class Nome {
 public:
  /// From q itself; DomainError unless 0 <= q < 1.
  static Nome from_value(const Real& q);
  /// From log q < 0 (e.g. -pi sqrt(r)).
  static Nome from_log(const Real& log_q);

  const Real& value() const noexcept { return q_; }
  /// -inf encoded as nullopt for q = 0.
  const std::optional<Real>& log() const noexcept { return log_q_; }
  bool is_zero() const noexcept { return !log_q_.has_value(); }

  /// q^e for e > 0.
  Nome pow(const Ratio& e) const;
  Real power(const Ratio& e) const { return pow(e).value(); }

 private:
  Nome(Real q, std::optional<Real> log_q) : q_(std::move(q)), log_q_(std::move(log_q)) {}
  Real q_;
  std::optional<Real> log_q_;
};

/// Nome of the singular point r: q = e^{-pi sqrt(r)}.
Nome nome_from_r(const Ratio& r, const PrecisionContext& ctx);
Nome nome_from_r(const Real& r, const PrecisionContext& ctx);

/// Finite q-Pochhammer symbol (a; q)_n = prod_{k<n} (1 - a q^k).
Real qpoch(const Real& a, const Nome& q, std::size_t n, const PrecisionContext& ctx);
/// (a; q)_inf. Requires |a| <= 1.
Real qpoch_inf(const Real& a, const Nome& q, const PrecisionContext& ctx);

/// f(-q) = (q; q)_inf.
Real f_minus(const Nome& q, const PrecisionContext& ctx);
/// Phi(-q) = (-q; q)_inf.
Real phi_cap(const Nome& q, const PrecisionContext& ctx);

/// Jacobi theta_j(q) for j in {2, 3, 4} at zero argument.
Real theta(int j, const Nome& q, const PrecisionContext& ctx);
/// psi(q) = sum_{n>=0} q^{n(n+1)/2}.
Real psi(const Nome& q, const PrecisionContext& ctx);
/// phi(q) = theta_3(q).
Real phi(const Nome& q, const PrecisionContext& ctx);
/// phi(-q) = theta_4(q).
Real phi_neg(const Nome& q, const PrecisionContext& ctx);
/// M(q) = q^{1/8} (q^2; q^2)_inf / (q; q^2)_inf.
Real m_building(const Nome& q, const PrecisionContext& ctx);

}  // namespace rcf
