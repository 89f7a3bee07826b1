#include "rcf/numerics.hpp"

#include <algorithm>
#include <cctype>
#include <ios>
#include <limits>
#include <sstream>

#include <mpfr.h>

namespace rcf {

namespace mp = boost::multiprecision;

namespace {

unsigned digits10_for_bits(int bits) {
  unsigned d = 1;
  while (mp::detail::digits10_2_2(d) < static_cast<unsigned long>(bits)) ++d;
  return d;
}

int sign_of(const Real& x) { return x > 0 ? 1 : (x < 0 ? -1 : 0); }

}  // namespace

PrecisionContext::PrecisionContext(int working_bits, int guard_bits)
    : working_bits_(working_bits), guard_bits_(guard_bits), digits10_(0) {
  if (working_bits < 64) throw DomainError("working precision must be at least 64 bits");
  if (guard_bits < 0 || guard_bits >= working_bits - 16)
    throw DomainError("guard bits must lie in [0, working_bits - 16)");
  digits10_ = digits10_for_bits(working_bits);
}

int PrecisionContext::effective_bits() const noexcept {
  return static_cast<int>(mp::detail::digits10_2_2(digits10_));
}

Real PrecisionContext::eps() const { return pow2(-(working_bits_ - guard_bits_)); }

Real PrecisionContext::unit_roundoff() const { return pow2(-working_bits_); }

PrecisionScope::PrecisionScope(const PrecisionContext& ctx) : saved_(Real::default_precision()) {
  Real::default_precision(ctx.digits10());
}

PrecisionScope::~PrecisionScope() { Real::default_precision(saved_); }

// ---------------------------------------------------------------------------

Real pi() {
  Real out;
  mpfr_const_pi(out.backend().data(), MPFR_RNDN);
  return out;
}

Real to_real(const Ratio& r) { return Real(r.numerator()) / Real(r.denominator()); }

Real to_real(std::string_view decimal) { return Real(std::string(decimal)); }

Real pow2(long e) {
  Real out;
  mpfr_set_ui_2exp(out.backend().data(), 1, e, MPFR_RNDN);
  return out;
}

Real root(const Real& x, unsigned n) {
  if (x < 0) throw DomainError("negative radicand in root of order " + std::to_string(n));
  Real out;
  mpfr_rootn_ui(out.backend().data(), x.backend().data(), n, MPFR_RNDN);
  return out;
}

Real rpow(const Real& x, const Ratio& exponent) {
  if (x < 0) throw DomainError("negative base in fractional power");
  if (x == 0) {
    if (exponent <= 0) throw DomainError("zero base with non-positive exponent");
    return Real(0);
  }
  const auto num = exponent.numerator();
  const auto den = exponent.denominator();
  Real base = den == 1 ? x : root(x, static_cast<unsigned>(den));
  return pow(base, Real(num));
}

Real checked_sqrt(const Real& x, std::string_view what) {
  if (x < 0) throw DomainError("negative " + std::string(what));
  return sqrt(x);
}

std::string to_fixed(const Real& x, int digits) {
  return x.str(digits, std::ios_base::fixed);
}

std::string to_sci(const Real& x, int digits) {
  if (x == 0) return "0";
  return x.str(digits, std::ios_base::scientific);
}

std::string to_string(const Ratio& r) {
  if (r.denominator() == 1) return std::to_string(r.numerator());
  return std::to_string(r.numerator()) + "/" + std::to_string(r.denominator());
}

Ratio parse_ratio(std::string_view text) {
  auto fail = [&]() -> Ratio { throw DomainError("not a rational number: '" + std::string(text) + "'"); };
  auto parse_int = [&](std::string_view s) -> std::int64_t {
    if (s.empty()) fail();
    std::size_t i = 0;
    bool neg = false;
    if (s[0] == '-' || s[0] == '+') {
      neg = s[0] == '-';
      ++i;
    }
    if (i == s.size()) fail();
    std::int64_t v = 0;
    for (; i < s.size(); ++i) {
      if (!std::isdigit(static_cast<unsigned char>(s[i]))) fail();
      if (v > (std::numeric_limits<std::int64_t>::max() - 9) / 10) fail();
      v = v * 10 + (s[i] - '0');
    }
    return neg ? -v : v;
  };
  if (text.empty()) fail();
  if (auto slash = text.find('/'); slash != std::string_view::npos) {
    const auto den = parse_int(text.substr(slash + 1));
    if (den == 0) fail();
    return Ratio(parse_int(text.substr(0, slash)), den);
  }
  if (auto dot = text.find('.'); dot != std::string_view::npos) {
    const std::string_view frac = text.substr(dot + 1);
    if (frac.size() > 17) fail();
    std::int64_t scale = 1;
    for (std::size_t i = 0; i < frac.size(); ++i) scale *= 10;
    std::string whole(text.substr(0, dot));
    const bool neg = !whole.empty() && whole[0] == '-';
    if (whole.empty() || whole == "-" || whole == "+") whole += "0";
    const auto ip = parse_int(whole);
    const auto fp = frac.empty() ? 0 : parse_int(frac);
    if (!frac.empty() && (frac[0] == '-' || frac[0] == '+')) fail();
    const std::int64_t mag = (ip < 0 ? -ip : ip);
    if (mag > std::numeric_limits<std::int64_t>::max() / scale - 1) fail();
    const std::int64_t n = mag * scale + fp;
    return Ratio(neg ? -n : n, scale);
  }
  return Ratio(parse_int(text));
}

// ---------------------------------------------------------------------------

Real sum_to_tolerance(const TermGenerator& term, SumMode mode, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  const Real unit = ctx.unit_roundoff();
  const Real cap("0.99");
  const std::size_t max_terms = 10u * static_cast<std::size_t>(ctx.working_bits());

  Real acc = mode == SumMode::series ? Real(0) : Real(1);
  Real prev_mag = -1;
  for (std::size_t n = 0; n < max_terms; ++n) {
    const Real t = term(n);
    if (mode == SumMode::series)
      acc += t;
    else
      acc *= 1 + t;
    const Real mag = abs(t);
    const Real threshold = unit * std::max(Real(1), abs(acc));
    if (n > 0 && mag <= threshold && prev_mag <= threshold) {
      Real ratio;
      if (prev_mag > 0)
        ratio = std::min(mag / prev_mag, cap);
      else
        ratio = mag == 0 ? Real(0) : cap;
      const Real tail = mag * ratio / (1 - ratio);
      if (tail <= threshold) return acc;
    }
    prev_mag = mag;
  }
  throw NonConvergent("no convergence after " + std::to_string(max_terms) +
                      " terms (|q| too close to 1 for this precision)");
}

// ---------------------------------------------------------------------------

RealPoly::RealPoly(std::vector<Real> coefficients) : coeffs_(std::move(coefficients)) {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
  if (coeffs_.empty()) throw DomainError("the zero polynomial has no well-defined roots");
}

Real RealPoly::operator()(const Real& x) const {
  Real acc = coeffs_.back();
  for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Real RealPoly::derivative_at(const Real& x) const {
  if (coeffs_.size() == 1) return Real(0);
  const std::size_t n = coeffs_.size() - 1;
  Real acc = coeffs_[n] * n;
  for (std::size_t i = n - 1; i >= 1; --i) acc = acc * x + coeffs_[i] * i;
  return acc;
}

RealPoly RealPoly::derivative() const {
  if (coeffs_.size() == 1) throw DomainError("derivative of a constant polynomial is zero");
  std::vector<Real> d;
  d.reserve(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * i);
  return RealPoly(std::move(d));
}

Real RealPoly::scale(const Real& x) const {
  const Real ax = abs(x);
  Real acc = abs(coeffs_.back());
  for (auto it = coeffs_.rbegin() + 1; it != coeffs_.rend(); ++it) acc = acc * ax + abs(*it);
  return acc;
}

std::vector<Real> RealPoly::taylor_at(const Real& m) const {
  std::vector<Real> c = coeffs_;
  const std::size_t n = c.size();
  for (std::size_t k = 0; k + 1 < n; ++k)
    for (std::size_t i = n - 2; i + 1 > k; --i) c[i] += m * c[i + 1];
  return c;
}

Real RealPoly::root_bound() const {
  Real worst = 0;
  const Real& lead = coeffs_.back();
  for (std::size_t i = 0; i + 1 < coeffs_.size(); ++i) worst = std::max(worst, abs(coeffs_[i] / lead));
  return 1 + worst;
}

const Root& RootSet::nearest(const Real& target) const {
  if (roots.empty()) throw NoMatchingRoot("polynomial has no real root in the search interval");
  auto best = std::min_element(roots.begin(), roots.end(), [&](const Root& a, const Root& b) {
    return abs(a.value - target) < abs(b.value - target);
  });
  return *best;
}

namespace {

// Newton steps safeguarded by bisection inside a sign-change bracket.
Real polish_in_bracket(const RealPoly& p, Real a, Real b, const Real& unit) {
  Real fa = p(a);
  if (fa == 0) return a;
  if (p(b) == 0) return b;
  Real x = (a + b) / 2;
  for (int iter = 0; iter < 4000; ++iter) {
    const Real fx = p(x);
    if (fx == 0) return x;
    if (sign_of(fx) == sign_of(fa)) {
      a = x;
      fa = fx;
    } else {
      b = x;
    }
    const Real dfx = p.derivative_at(x);
    Real next = dfx != 0 ? x - fx / dfx : (a + b) / 2;
    if (!(next > a && next < b)) next = (a + b) / 2;
    const Real step = abs(next - x);
    x = next;
    if (step <= 4 * unit * std::max(Real(1), abs(x))) break;
    if (b - a <= unit * std::max(Real(1), abs(x))) break;
  }
  return x;
}

}  // namespace

RootSet real_roots(const RealPoly& p, const Real& lo_in, const Real& hi_in, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (p.degree() == 0) return {};
  const Real bound = p.root_bound();
  const Real lo = std::max(Real(lo_in), Real(-bound));
  const Real hi = std::min(Real(hi_in), bound);
  RootSet out;
  if (lo > hi) return out;

  const Real eps = ctx.eps();
  const Real unit = ctx.unit_roundoff();
  const Real sqrt_unit = sqrt(unit);
  const int max_depth = ctx.working_bits();
  const int n = p.degree();

  struct Cell {
    Real a, b;
    int depth;
  };
  std::vector<Cell> work{{lo, hi, 0}};
  std::vector<std::pair<Real, Real>> brackets;
  while (!work.empty()) {
    Cell cell = std::move(work.back());
    work.pop_back();
    const Real m = (cell.a + cell.b) / 2;
    const Real h = (cell.b - cell.a) / 2;
    const auto t = p.taylor_at(m);
    Real tail0 = 0, tail1 = 0, hp = 1;
    for (int j = 1; j <= n; ++j) {
      const Real hprev = hp;
      hp *= h;
      tail0 += abs(t[j]) * hp;
      if (j >= 2) tail1 += j * abs(t[j]) * hprev;
    }
    // Evaluation noise of the shifted coefficients; a cell is only discarded
    // or declared monotone when the margin clears it.
    const Real noise = 4 * (n + 1) * unit * p.scale(m);
    if (abs(t[0]) > tail0 + noise) continue;
    const Real noise1 = 4 * (n + 1) * n * unit * p.scale(std::max(Real(1), abs(m)));
    if (abs(t[1]) > tail1 + noise1) {
      const Real pa = p(cell.a), pb = p(cell.b);
      if (sign_of(pa) * sign_of(pb) <= 0) brackets.emplace_back(cell.a, cell.b);
      continue;
    }
    if (cell.depth >= max_depth || h <= sqrt_unit * std::max(Real(1), abs(m))) {
      if (abs(t[0]) <= sqrt(eps) * p.scale(m))
        throw PrecisionExhausted("root isolation undecided near " + to_sci(m, 20) +
                                 " (multiple root at working precision?)");
      continue;
    }
    work.push_back({m, cell.b, cell.depth + 1});
    work.push_back({cell.a, m, cell.depth + 1});
  }

  for (auto& [a, b] : brackets) {
    Root r;
    r.value = polish_in_bracket(p, a, b, unit);
    r.lo = a;
    r.hi = b;
    r.residual = abs(p(r.value));
    if (r.residual > eps * p.scale(r.value))
      throw PrecisionExhausted("root near " + to_sci(r.value, 20) + " could not be polished to tolerance");
    out.roots.push_back(std::move(r));
  }
  std::sort(out.roots.begin(), out.roots.end(), [](const Root& x, const Root& y) { return x.value < y.value; });
  // A root on a shared cell edge is bracketed twice.
  const Real merge = sqrt(unit);
  std::vector<Root> unique;
  for (auto& r : out.roots) {
    if (!unique.empty() && abs(unique.back().value - r.value) <= merge * std::max(Real(1), abs(r.value))) continue;
    unique.push_back(std::move(r));
  }
  out.roots = std::move(unique);
  return out;
}

namespace {

Real newton(const RealPoly& p, Real x, const PrecisionContext& ctx, const Real* lo, const Real* hi) {
  const Real unit = ctx.unit_roundoff();
  for (int iter = 0; iter < 200; ++iter) {
    const Real fx = p(x);
    if (fx == 0) return x;
    const Real dfx = p.derivative_at(x);
    if (dfx == 0) throw Diverged("Newton iteration hit a stationary point at " + to_sci(x, 20));
    const Real next = x - fx / dfx;
    if (!isfinite(next)) throw Diverged("Newton iteration produced a non-finite iterate");
    if (lo && hi && (next < *lo || next > *hi))
      throw Diverged("Newton iterate " + to_sci(next, 20) + " left the bracket");
    const Real step = abs(next - x);
    x = next;
    if (step <= 4 * unit * std::max(Real(1), abs(x))) {
      if (abs(p(x)) > ctx.eps() * p.scale(x)) throw Diverged("Newton settled without meeting the residual bound");
      return x;
    }
  }
  throw Diverged("Newton iteration did not settle in 200 steps");
}

}  // namespace

Real polish_root(const RealPoly& p, const Real& seed, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  return newton(p, seed, ctx, nullptr, nullptr);
}

Real polish_root(const RealPoly& p, const Real& seed, const Real& lo, const Real& hi, const PrecisionContext& ctx) {
  PrecisionScope scope(ctx);
  if (seed < lo || seed > hi) throw Diverged("seed outside its bracket");
  return newton(p, seed, ctx, &lo, &hi);
}

}  // namespace rcf
