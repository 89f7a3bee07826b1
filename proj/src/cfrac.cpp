#include "rcf/cfrac.hpp"

#include <vector>

#include <mpfr.h>

namespace rcf {

namespace {

Real qpow(const Nome& q, unsigned long n) {
  Real out;
  mpfr_pow_ui(out.backend().data(), q.value().backend().data(), n, MPFR_RNDN);
  return out;
}

Real one(const Nome&) { return Real(1); }
Real unit_b(std::size_t, const Nome&) { return Real(1); }

CFSpec rr_spec() {
  return CFSpec{[](const Nome& q) { return q.power(Ratio(1, 5)); }, one,
                [](std::size_t n, const Nome& q) { return qpow(q, n); }, unit_b};
}

CFSpec h_spec() {
  return CFSpec{[](const Nome& q) { return q.power(Ratio(1, 2)); },
                [](const Nome& q) { return 1 + q.value(); },
                [](std::size_t n, const Nome& q) { return qpow(q, 2 * n); },
                [](std::size_t n, const Nome& q) { return 1 + qpow(q, 2 * n + 1); }};
}

CFSpec v_spec() {
  return CFSpec{[](const Nome& q) { return q.power(Ratio(1, 3)); }, one,
                [](std::size_t n, const Nome& q) {
                  const Real t = qpow(q, n);
                  return t + t * t;
                },
                unit_b};
}

// Numerators q, q^2 + q, q^3, q^4 + q^2, ...
CFSpec s_spec() {
  return CFSpec{[](const Nome& q) { return q.power(Ratio(1, 8)); }, one,
                [](std::size_t n, const Nome& q) {
                  Real t = qpow(q, n);
                  if (n % 2 == 0) t += qpow(q, n / 2);
                  return t;
                },
                unit_b};
}

// Numerators q (1 - q^{2n-1})^2, denominators (1 - q)(q^{2n} + 1).
CFSpec q_spec() {
  return CFSpec{[](const Nome& q) { return q.power(Ratio(1, 2)); },
                [](const Nome& q) { return 1 - q.value(); },
                [](std::size_t n, const Nome& q) {
                  const Real t = 1 - qpow(q, 2 * n - 1);
                  return q.value() * t * t;
                },
                [](std::size_t n, const Nome& q) { return (1 - q.value()) * (qpow(q, 2 * n) + 1); }};
}

CFSpec m_spec() {
  return CFSpec{[](const Nome& q) { return q.power(Ratio(1, 8)); }, one,
                [](std::size_t n, const Nome& q) { return Real(-qpow(q, n)); },
                [](std::size_t n, const Nome& q) { return 1 + qpow(q, n); }};
}

void check_open_nome(const Nome& q) {
  if (q.is_zero()) throw DomainError("continued fractions are evaluated for 0 < q < 1");
}

}  // namespace

std::string_view to_string(FractionKind kind) {
  switch (kind) {
    case FractionKind::RR: return "rr";
    case FractionKind::H: return "h";
    case FractionKind::V: return "v";
    case FractionKind::S: return "s";
    case FractionKind::Q: return "q";
    case FractionKind::M: return "m";
  }
  return "?";
}

FractionKind parse_fraction_kind(std::string_view name) {
  for (FractionKind k : all_fraction_kinds)
    if (to_string(k) == name) return k;
  throw DomainError("unknown fraction '" + std::string(name) + "' (expected rr, h, v, s, q or m)");
}

CFValue eval_cf(const CFSpec& spec, const Nome& q, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  check_open_nome(q);
  constexpr std::size_t max_depth = std::size_t{1} << 20;
  const Real tol = 256 * ctx.unit_roundoff();

  std::vector<Real> a, b;
  auto tail = [&](std::size_t depth) {
    while (a.size() < depth) {
      const std::size_t n = a.size() + 1;
      a.push_back(spec.a(n, q));
      b.push_back(spec.b(n, q));
    }
    Real v = 0;
    for (std::size_t n = depth; n >= 1; --n) {
      const Real den = b[n - 1] + v;
      if (den == 0) throw NonConvergent("continued fraction hit a zero denominator at depth " + std::to_string(n));
      v = a[n - 1] / den;
    }
    return 1 / (spec.b0(q) + v);
  };

  std::size_t depth = 16;
  Real prev = tail(depth);
  while (depth < max_depth) {
    depth *= 2;
    Real cur = tail(depth);
    const Real delta = abs(cur - prev);
    if (delta <= tol * abs(cur)) {
      const Real pre = spec.prefactor(q);
      return CFValue{pre * cur, ConvergenceReport{depth, abs(pre) * delta}};
    }
    prev = std::move(cur);
  }
  throw NonConvergent("continued fraction did not settle by depth 2^20");
}

CFSpec spec_for(FractionKind kind) {
  switch (kind) {
    case FractionKind::RR: return rr_spec();
    case FractionKind::H: return h_spec();
    case FractionKind::V: return v_spec();
    case FractionKind::S: return s_spec();
    case FractionKind::Q: return q_spec();
    case FractionKind::M: return m_spec();
  }
  throw DomainError("unknown fraction kind");
}

Real fraction_direct(FractionKind kind, const Nome& q, const PrecisionContext& ctx) {
  return eval_cf(spec_for(kind), q, ctx).value;
}

Real fraction_oracle(FractionKind kind, const Nome& q, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  check_open_nome(q);
  switch (kind) {
    case FractionKind::RR: {
      const Nome q5 = q.pow(Ratio(1, 5));
      const Real rho = f_minus(q5, ctx) / (q5.value() * f_minus(q.pow(5), ctx));
      // positive root of R^2 + (1 + rho) R - 1 = 0
      return 2 / ((1 + rho) + sqrt((1 + rho) * (1 + rho) + 4));
    }
    case FractionKind::H: {
      const Real m2 = m_building(q.pow(2), ctx);
      const Real m4 = m_building(q.pow(4), ctx);
      const Real m = (m2 * m2) / (m4 * m4);
      return 2 / (m + sqrt(m * m + 4));
    }
    case FractionKind::V: {
      const Nome q2 = q.pow(2), q3 = q.pow(3), q6 = q.pow(6);
      return q.power(Ratio(1, 3)) * qpoch_inf(q.value(), q2, ctx) / pow(qpoch_inf(q3.value(), q6, ctx), 3);
    }
    case FractionKind::S: {
      const Nome q2 = q.pow(2);
      return q.power(Ratio(1, 8)) * qpoch_inf(-q2.value(), q2, ctx) / qpoch_inf(-q.value(), q2, ctx);
    }
    case FractionKind::Q: {
      const Nome q2 = q.pow(2), q4 = q.pow(4);
      const Real ratio = qpoch_inf(q4.value(), q4, ctx) / qpoch_inf(q2.value(), q4, ctx);
      return q.power(Ratio(1, 2)) * ratio * ratio;
    }
    case FractionKind::M: return m_building(q, ctx);
  }
  throw DomainError("unknown fraction kind");
}

FdDerivative cf_derivative_fd(const CFSpec& spec, const Real& q, const PrecisionContext& ctx) {
  if (ctx.working_bits() < 192) throw DomainError("finite-difference derivative needs at least 192 working bits");
  PrecisionScope scope(ctx);
  const Real h = pow2(-ctx.working_bits() / 3);
  if (!(q - h > 0) || !(q + h < 1)) throw DomainError("q +- h must stay inside (0, 1)");
  const Real up = eval_cf(spec, Nome::from_value(q + h), ctx).value;
  const Real down = eval_cf(spec, Nome::from_value(q - h), ctx).value;
  return FdDerivative{(up - down) / (2 * h), h, h * h};
}

FdDerivative rr_derivative_fd(const Real& q, const PrecisionContext& ctx) {
  return cf_derivative_fd(spec_for(FractionKind::RR), q, ctx);
}

}  // namespace rcf
