#pragma once

#include <array>
#include <functional>
#include <string_view>

#include "rcf/numerics.hpp"
#include "rcf/qseries.hpp"

namespace rcf {

enum class FractionKind { RR, H, V, S, Q, M };

inline constexpr std::array<FractionKind, 6> all_fraction_kinds{FractionKind::RR, FractionKind::H, FractionKind::V,
                                                                FractionKind::S,  FractionKind::Q, FractionKind::M};

/// Lower-case CLI name: rr, h, v, s, q, m.
std::string_view to_string(FractionKind kind);
/// Inverse of to_string; DomainError for anything else.
FractionKind parse_fraction_kind(std::string_view name);

/// prefactor(q) / (b0(q) + a_1/(b_1 + a_2/(b_2 + ...))).
struct CFSpec {
  std::function<Real(const Nome&)> prefactor;
  std::function<Real(const Nome&)> b0;
  std::function<Real(std::size_t, const Nome&)> a;  ///< n >= 1
  std::function<Real(std::size_t, const Nome&)> b;  ///< n >= 1
};

struct ConvergenceReport {
  std::size_t depth_used = 0;
  Real last_delta;  ///< |value(depth) - value(depth / 2)|
};

struct CFValue {
  Real value;
  ConvergenceReport report;
};

/// Backward recurrence from depth 16, doubling until two successive values
/// agree to 2^8 units in the last place. NonConvergent past depth 2^20.
CFValue eval_cf(const CFSpec& spec, const Nome& q, const PrecisionContext& ctx);

CFSpec spec_for(FractionKind kind);

/// The continued fraction itself.
Real fraction_direct(FractionKind kind, const Nome& q, const PrecisionContext& ctx);
/// Independent q-product route.
Real fraction_oracle(FractionKind kind, const Nome& q, const PrecisionContext& ctx);

struct FdDerivative {
  Real value;
  Real step;          ///< h
  Real error_order;   ///< h^2, the order of the truncation error
};

/// Central difference (F(q+h) - F(q-h)) / 2h with h = 2^{-working_bits/3}.
/// Needs working_bits >= 192 so that h^2 stays far below the 1e-8 budget.
FdDerivative cf_derivative_fd(const CFSpec& spec, const Real& q, const PrecisionContext& ctx);
FdDerivative rr_derivative_fd(const Real& q, const PrecisionContext& ctx);

}  // namespace rcf
