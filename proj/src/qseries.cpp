#include "rcf/qseries.hpp"

namespace rcf {

namespace {

const Real& usable(const Nome& q) {
  if (q.value() > Real("0.9"))
    throw NonConvergent("q = " + to_sci(q.value()) + " is above 0.9; series would need a modular transformation");
  return q.value();
}

}  // namespace

Nome Nome::from_value(const Real& q) {
  if (!(q >= 0) || q >= 1) throw DomainError("nome must lie in [0, 1), got " + to_sci(q));
  if (q == 0) return Nome(Real(0), std::nullopt);
  return Nome(q, boost::multiprecision::log(q));
}

Nome Nome::from_log(const Real& log_q) {
  if (!(log_q < 0)) throw DomainError("log q must be negative");
  return Nome(exp(log_q), log_q);
}

Nome Nome::pow(const Ratio& e) const {
  if (e <= 0) throw DomainError("nome exponent must be positive");
  if (is_zero()) return *this;
  return from_log(*log_q_ * to_real(e));
}

Nome nome_from_r(const Real& r, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (!(r > 0)) throw DomainError("r must be positive");
  return Nome::from_log(-pi() * sqrt(r));
}

Nome nome_from_r(const Ratio& r, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (r <= 0) throw DomainError("r must be positive, got " + to_string(r));
  return nome_from_r(to_real(r), ctx);
}

Real qpoch(const Real& a, const Nome& q, std::size_t n, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  Real acc = 1;
  Real power = 1;
  for (std::size_t k = 0; k < n; ++k) {
    acc *= 1 - a * power;
    power *= q.value();
  }
  return acc;
}

Real qpoch_inf(const Real& a, const Nome& q, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (abs(a) > 1) throw DomainError("infinite q-Pochhammer needs |a| <= 1");
  const Real& x = usable(q);
  Real power = a;
  return sum_to_tolerance(
      [&](std::size_t) {
        Real d = -power;
        power *= x;
        return d;
      },
      SumMode::product, ctx);
}

Real f_minus(const Nome& q, const PrecisionContext& ctx) { return qpoch_inf(q.value(), q, ctx); }

Real phi_cap(const Nome& q, const PrecisionContext& ctx) { return qpoch_inf(-q.value(), q, ctx); }

Real theta(int j, const Nome& q, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real& x = usable(q);
  if (j == 2) {
    if (q.is_zero()) return Real(0);
    // 2 q^{1/4} sum_{n>=0} q^{n(n+1)}
    Real cur = 1, step = x * x;
    const Real s = sum_to_tolerance(
        [&](std::size_t) {
          Real t = cur;
          cur *= step;
          step *= x * x;
          return t;
        },
        SumMode::series, ctx);
    return 2 * q.power(Ratio(1, 4)) * s;
  }
  if (j != 3 && j != 4) throw DomainError("theta index must be 2, 3 or 4");
  if (q.is_zero()) return Real(1);
  // 1 + 2 sum_{n>=1} (+-q)^{n^2}
  const bool alternate = j == 4;
  Real cur = x, step = x * x * x;
  std::size_t n = 1;
  const Real s = sum_to_tolerance(
      [&](std::size_t) {
        Real t = (alternate && (n % 2 == 1)) ? Real(-cur) : cur;
        cur *= step;
        step *= x * x;
        ++n;
        return t;
      },
      SumMode::series, ctx);
  return 1 + 2 * s;
}

Real psi(const Nome& q, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real& x = usable(q);
  if (q.is_zero()) return Real(1);
  Real cur = 1, step = x;
  return sum_to_tolerance(
      [&](std::size_t) {
        Real t = cur;
        cur *= step;
        step *= x;
        return t;
      },
      SumMode::series, ctx);
}

Real phi(const Nome& q, const PrecisionContext& ctx) { return theta(3, q, ctx); }

Real phi_neg(const Nome& q, const PrecisionContext& ctx) { return theta(4, q, ctx); }

Real m_building(const Nome& q, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (q.is_zero()) return Real(0);
  const Nome q2 = q.pow(2);
  return q.power(Ratio(1, 8)) * qpoch_inf(q2.value(), q2, ctx) / qpoch_inf(q.value(), q2, ctx);
}

}  // namespace rcf
