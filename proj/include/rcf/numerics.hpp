#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <string>
#include <string_view>
#include <vector>

#include <boost/multiprecision/mpfr.hpp>
#include <boost/rational.hpp>

#include "rcf/errors.hpp"

namespace rcf {

/// Variable-precision binary float. New values take the precision installed
/// by the innermost live PrecisionScope.
using Real = boost::multiprecision::number<boost::multiprecision::mpfr_float_backend<0>,
                                           boost::multiprecision::et_off>;

/// Exact rational parameter (the singular-modulus index r, grid points, ...).
using Ratio = boost::rational<std::int64_t>;

/// Working precision, guard bits and the derived tolerance unit
/// eps = 2^-(working_bits - guard_bits). Immutable.
class PrecisionContext {
 public:
  explicit PrecisionContext(int working_bits = 256, int guard_bits = 32);

  int working_bits() const noexcept { return working_bits_; }
  int guard_bits() const noexcept { return guard_bits_; }
  /// Decimal digits handed to the MPFR backend; its binary precision is >= working_bits.
  unsigned digits10() const noexcept { return digits10_; }
  /// Binary precision MPFR actually allocates for new values.
  int effective_bits() const noexcept;

  /// 2^-(working_bits - guard_bits); exact at any precision.
  Real eps() const;
  /// 2^-working_bits.
  Real unit_roundoff() const;

  PrecisionContext with_bits(int working_bits) const { return PrecisionContext(working_bits, guard_bits_); }

 private:
  int working_bits_;
  int guard_bits_;
  unsigned digits10_;
};

/// Installs the context's precision as the default for new Real values and
/// restores the previous default on destruction.
class PrecisionScope {
 public:
  explicit PrecisionScope(const PrecisionContext& ctx);
  ~PrecisionScope();
  PrecisionScope(const PrecisionScope&) = delete;
  PrecisionScope& operator=(const PrecisionScope&) = delete;

 private:
  unsigned saved_;
};

// ---------------------------------------------------------------------------
// Scalar helpers. All of them allocate at the current default precision.

Real pi();
Real to_real(const Ratio& r);
Real to_real(std::string_view decimal);
/// Exact power of two.
Real pow2(long e);
/// Positive real n-th root; DomainError on a negative radicand.
Real root(const Real& x, unsigned n);
/// Positive real branch of x^(num/den); DomainError if x < 0.
Real rpow(const Real& x, const Ratio& exponent);
/// sqrt that refuses negative radicands instead of returning NaN.
Real checked_sqrt(const Real& x, std::string_view what = "radicand");

/// Round-to-nearest fixed-point rendering with `digits` fractional digits.
std::string to_fixed(const Real& x, int digits);
/// Short scientific rendering for residuals and tolerances.
std::string to_sci(const Real& x, int digits = 6);
std::string to_string(const Ratio& r);
/// Parses "4", "-1/4", "5/2" or a plain decimal such as "0.125" exactly.
Ratio parse_ratio(std::string_view text);

// ---------------------------------------------------------------------------
// Series and products with tail control.

enum class SumMode { series, product };

/// Term source called with n = 0, 1, 2, ... in order. In product mode the
/// returned value is the deviation d_n of the factor (1 + d_n).
using TermGenerator = std::function<Real(std::size_t n)>;

/// Sum or multiply until the current term and a geometric bound on the tail
/// are both below the working resolution times max(1, |result|). The tail
/// ratio is the measured ratio of the last two terms, capped at 0.99.
/// Throws NonConvergent after 10 * working_bits terms.
Real sum_to_tolerance(const TermGenerator& term, SumMode mode, const PrecisionContext& ctx);

// ---------------------------------------------------------------------------
// Polynomials and real roots.

class RealPoly {
 public:
  /// Coefficients, constant term first. Trailing zeros are dropped; the zero
  /// polynomial is rejected.
  explicit RealPoly(std::vector<Real> coefficients);

  int degree() const noexcept { return static_cast<int>(coeffs_.size()) - 1; }
  const std::vector<Real>& coefficients() const noexcept { return coeffs_; }

  Real operator()(const Real& x) const;
  Real derivative_at(const Real& x) const;
  RealPoly derivative() const;
  /// sum |c_i| |x|^i, the magnitude against which residuals are judged.
  Real scale(const Real& x) const;
  /// Coefficients of P(m + t) in powers of t.
  std::vector<Real> taylor_at(const Real& m) const;
  /// Cauchy bound: every real root satisfies |x| < bound.
  Real root_bound() const;

 private:
  std::vector<Real> coeffs_;
};

struct Root {
  Real value;
  Real lo;  ///< certified sign-change bracket
  Real hi;
  Real residual;  ///< |P(value)|
};

struct RootSet {
  std::vector<Root> roots;  ///< ascending

  std::size_t size() const noexcept { return roots.size(); }
  bool empty() const noexcept { return roots.empty(); }
  /// Root closest to `target`; NoMatchingRoot if the set is empty.
  const Root& nearest(const Real& target) const;
};

/// Every real root of `p` in [lo, hi] (hi may be +inf; it is clamped to the
/// Cauchy bound). Isolation subdivides dyadically and certifies each cell with
/// Taylor bounds at its midpoint: a cell is discarded when |P(m)| exceeds the
/// bound on the remaining terms, and accepted when P' cannot vanish on it.
/// A cell narrower than 2^{-working_bits/2} that is still undecided while
/// |P| < sqrt(eps) scale is what a (numerically) multiple root looks like;
/// that case throws PrecisionExhausted.
RootSet real_roots(const RealPoly& p, const Real& lo, const Real& hi, const PrecisionContext& ctx);

/// Newton polish from `seed`; Diverged if the iteration does not settle.
Real polish_root(const RealPoly& p, const Real& seed, const PrecisionContext& ctx);
/// Newton polish constrained to [lo, hi]; Diverged if an iterate leaves it.
Real polish_root(const RealPoly& p, const Real& seed, const Real& lo, const Real& hi,
                 const PrecisionContext& ctx);

}  // namespace rcf
