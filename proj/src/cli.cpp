#include "rcf/cli.hpp"

#include <ostream>
#include <regex>
#include <sstream>

#include <CLI11.hpp>
#include <json.hpp>

#include "rcf/cfrac.hpp"
#include "rcf/closed_forms.hpp"
#include "rcf/elliptic.hpp"
#include "rcf/report.hpp"
#include "rcf/verifier.hpp"

namespace rcf {

namespace {

class UsageError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct Options {
  std::string fraction;
  std::string r;
  std::string q;
  int bits = 256;
  int digits = 50;
  std::string route = "direct";
  std::string equation;
  std::string suite = "all";
  std::string format = "text";
  std::string r_list;
};

Ratio parse_r(const std::string& text) {
  Ratio r;
  try {
    r = parse_ratio(text);
  } catch (const DomainError&) {
    throw UsageError("--r expects a rational such as 4, 1/4 or 2.5, got '" + text + "'");
  }
  if (r <= 0) throw DomainError("r must be positive, got " + text);
  return r;
}

Nome parse_q(const std::string& text) {
  static const std::regex decimal(R"([+-]?(\d+\.?\d*|\.\d+)([eE][+-]?\d+)?)");
  if (!std::regex_match(text, decimal)) throw UsageError("--q expects a decimal number, got '" + text + "'");
  const Real q = to_real(text);
  if (!(q > 0 && q < 1)) throw DomainError("q must lie in (0, 1), got " + text);
  return Nome::from_value(q);
}

PrecisionContext context_for(const Options& o, bool uses_digits) {
  if (o.bits < 64) throw UsageError("--prec must be at least 64 bits");
  if (uses_digits) {
    if (o.digits < 1) throw UsageError("--digits must be positive");
    if (o.digits > 0.3 * o.bits)
      throw UsageError("--digits " + std::to_string(o.digits) + " exceeds 0.3 * --prec (" +
                       std::to_string(static_cast<int>(0.3 * o.bits)) + ")");
  }
  return PrecisionContext(o.bits);
}

Real evaluate(FractionKind kind, const std::string& route, const Nome& q, const Ratio* r,
              const PrecisionContext& ctx) {
  if (route == "direct") return fraction_direct(kind, q, ctx);
  if (route == "oracle") return fraction_oracle(kind, q, ctx);
  if (!r) throw UsageError("--route closed needs --r");
  return fraction_closed(kind, *r, ctx);
}

int cmd_eval(const Options& o, std::ostream& out) {
  const PrecisionContext ctx = context_for(o, true);
  PrecisionScope scope(ctx);
  const FractionKind kind = parse_fraction_kind(o.fraction);
  if (o.r.empty() == o.q.empty()) throw UsageError("give exactly one of --r and --q");
  Ratio r;
  if (!o.r.empty()) r = parse_r(o.r);
  const Nome q = o.r.empty() ? parse_q(o.q) : nome_from_r(r, ctx);
  out << to_fixed(evaluate(kind, o.route, q, o.r.empty() ? nullptr : &r, ctx), o.digits) << '\n';
  return exit_ok;
}

int cmd_modulus(const Options& o, std::ostream& out) {
  const PrecisionContext ctx = context_for(o, true);
  PrecisionScope scope(ctx);
  if (o.r.empty()) throw UsageError("modulus needs --r");
  const SingularPoint sp = modulus_from_r(parse_r(o.r), ctx);
  out << "r  = " << to_string(sp.r) << '\n'
      << "q  = " << to_sci(sp.nome.value(), o.digits) << '\n'
      << "k  = " << to_fixed(sp.modulus.k, o.digits) << '\n'
      << "k' = " << to_fixed(sp.modulus.kprime, o.digits) << '\n'
      << "K  = " << to_fixed(ellK(sp.modulus, ctx), o.digits) << '\n'
      << "K' = " << to_fixed(ellK_prime(sp.modulus, ctx), o.digits) << '\n';
  return exit_ok;
}

/// Prints every real root in [lo, hi] and marks the one nearest `target`.
void print_roots(std::ostream& out, const RealPoly& p, const Real& lo, const Real& hi, const Real& target,
                 const std::string& name, int digits, const PrecisionContext& ctx) {
  const RootSet roots = real_roots(p, lo, hi, ctx);
  if (roots.empty()) throw NoMatchingRoot("no real root of the " + name + " polynomial in range");
  const Root& chosen = roots.nearest(target);
  for (const Root& root : roots.roots) {
    out << (&root == &chosen ? "* " : "  ") << name << " = " << to_fixed(root.value, digits)
        << "  residual " << to_sci(root.residual / std::max(Real(1), p.scale(root.value)), 3) << '\n';
  }
  out << "target " << name << " = " << to_fixed(target, digits) << '\n';
}

int cmd_solve(const Options& o, std::ostream& out) {
  const PrecisionContext ctx = context_for(o, true);
  PrecisionScope scope(ctx);
  if (o.r.empty()) throw UsageError("solve needs --r");
  const Ratio r = parse_r(o.r);
  const Modulus m = modulus_from_r(r, ctx).modulus;
  const Real kp2 = m.kprime * m.kprime;
  const int d = o.digits;
  if (o.equation == "eq17") {
    const Real oracle = ellK(modulus_from_r(r * Ratio(25), ctx).modulus, ctx) / ellK(m, ctx);
    const Real x = m5_polyroot(m, oracle, ctx);
    out << "M5 = " << to_fixed(x, d) << '\n' << "K(k_25r)/K(k_r) = " << to_fixed(oracle, d) << '\n';
  } else if (o.equation == "eq36") {
    print_roots(out, p_polynomial(m.k, kp2), Real(0), Real(64), rr_param(r, ctx).p, "p", d, ctx);
  } else if (o.equation == "eq37") {
    print_roots(out, x_polynomial(m.k, kp2, false), Real(0), Real(64), rr_param(r, ctx).x, "x", d, ctx);
  } else if (o.equation == "eq39a") {
    const RRParam rp = rr_param(r, ctx);
    const Real c13 = cbrt(rp.c), c23 = c13 * c13;
    const RealPoly g({3125 * rp.c * rp.c, -6250 * rp.c * c23, 4375 * rp.c * c13, -1500 * rp.c, 275 * c23,
                      2 * c13 * (-13 + 128 * kp2 * m.k * m.k), Real(1)});
    print_roots(out, g, Real(0), g.root_bound(), rp.G, "G", d, ctx);
    const Real G = real_roots(g, Real(0), g.root_bound(), ctx).nearest(rp.G).value;
    out << "R = " << to_fixed(rr_from_invariant(G * G * G, ctx), d) << '\n';
  } else if (o.equation == "eq39b") {
    const Real w = w_sextic_solve(r, ctx);
    out << "w = " << to_fixed(w, d) << '\n' << "k_25r = w^2 / k_r = " << to_sci(w * w / m.k, d) << '\n';
  } else {
    throw UsageError("unknown equation '" + o.equation + "' (eq17, eq36, eq37, eq39a, eq39b)");
  }
  return exit_ok;
}

int cmd_verify(const Options& o, std::ostream& out) {
  const PrecisionContext ctx = context_for(o, false);
  const ReportFormat format = parse_report_format(o.format);
  const SuiteReport report = run_suite(o.suite, ctx);
  write_report(out, report, format);
  return report.success() ? exit_ok : exit_check_failed;
}

std::vector<std::string> split(const std::string& list) {
  std::vector<std::string> out;
  std::stringstream ss(list);
  for (std::string item; std::getline(ss, item, ',');)
    if (!item.empty()) out.push_back(item);
  return out;
}

int cmd_table(const Options& o, std::ostream& out) {
  const PrecisionContext ctx = context_for(o, true);
  PrecisionScope scope(ctx);
  const FractionKind kind = parse_fraction_kind(o.fraction);
  const ReportFormat format = parse_report_format(o.format);
  const std::vector<std::string> items = split(o.r_list);
  if (items.empty()) throw UsageError("table needs --r-list R1,R2,...");

  nlohmann::ordered_json rows = nlohmann::ordered_json::array();
  std::ostringstream csv, text;
  csv << "r,direct,oracle,closed,max_route_difference\n";
  for (const std::string& item : items) {
    const Ratio r = parse_r(item);
    const Nome q = nome_from_r(r, ctx);
    const Real a = fraction_direct(kind, q, ctx), b = fraction_oracle(kind, q, ctx), c = fraction_closed(kind, r, ctx);
    const Real diff = std::max({abs(a - b), abs(a - c), abs(b - c)});
    const std::string rs = to_string(r);
    csv << rs << ',' << to_fixed(a, o.digits) << ',' << to_fixed(b, o.digits) << ',' << to_fixed(c, o.digits) << ','
        << to_sci(diff, 3) << '\n';
    text << "r = " << rs << "  " << to_fixed(a, o.digits) << "  max route difference " << to_sci(diff, 3) << '\n';
    rows.push_back({{"r", rs},
                    {"direct", to_fixed(a, o.digits)},
                    {"oracle", to_fixed(b, o.digits)},
                    {"closed", to_fixed(c, o.digits)},
                    {"max_route_difference", to_sci(diff, 3)}});
  }
  switch (format) {
    case ReportFormat::csv: out << csv.str(); break;
    case ReportFormat::text: out << text.str(); break;
    case ReportFormat::json: out << nlohmann::ordered_json{{"fraction", o.fraction}, {"rows", rows}}.dump(2) << '\n'; break;
  }
  return exit_ok;
}

}  // namespace

int run_cli(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Evaluate q-continued fractions and verify their identities", "rcf"};
  app.require_subcommand(1);
  Options o;

  const std::vector<std::string> kinds{"rr", "h", "v", "s", "q", "m"};
  auto* eval = app.add_subcommand("eval", "Evaluate a fraction at q or at q = exp(-pi sqrt r)");
  eval->add_option("fraction", o.fraction, "rr, h, v, s, q or m")->required()->check(CLI::IsMember(kinds));
  eval->add_option("--r", o.r, "singular-value index, e.g. 4 or 1/4");
  eval->add_option("--q", o.q, "nome in (0, 1)");
  eval->add_option("--route", o.route, "direct, oracle or closed")
      ->check(CLI::IsMember({"direct", "oracle", "closed"}));

  auto* modulus = app.add_subcommand("modulus", "Singular modulus k_r, k'_r and K at r");
  modulus->add_option("--r", o.r, "singular-value index")->required();

  auto* solve = app.add_subcommand("solve", "Real roots of one of the polynomial equations at r");
  solve->add_option("equation", o.equation, "eq17, eq36, eq37, eq39a or eq39b")->required();
  solve->add_option("--r", o.r, "singular-value index")->required();

  auto* verify = app.add_subcommand("verify", "Run the identity catalog");
  verify->add_option("--suite", o.suite, "tag, check id or all");
  verify->add_option("--format", o.format, "text, json or csv");

  auto* table = app.add_subcommand("table", "Tabulate one fraction by all three routes");
  table->add_option("--fraction", o.fraction, "rr, h, v, s, q or m")->required()->check(CLI::IsMember(kinds));
  table->add_option("--r-list", o.r_list, "comma-separated r values")->required();
  table->add_option("--format", o.format, "csv, text or json");

  for (CLI::App* sub : {eval, modulus, solve, verify, table})
    sub->add_option("--prec", o.bits, "working precision in bits (>= 64)");
  for (CLI::App* sub : {eval, modulus, solve, table})
    sub->add_option("--digits", o.digits, "decimal digits printed (<= 0.3 * prec)");

  std::vector<std::string> argv_storage{"rcf"};
  argv_storage.insert(argv_storage.end(), args.begin(), args.end());
  std::vector<char*> argv;
  for (std::string& a : argv_storage) argv.push_back(a.data());

  try {
    app.parse(static_cast<int>(argv.size()), argv.data());
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? exit_ok : exit_usage;
  }

  try {
    if (eval->parsed()) return cmd_eval(o, out);
    if (modulus->parsed()) return cmd_modulus(o, out);
    if (solve->parsed()) return cmd_solve(o, out);
    if (verify->parsed()) return cmd_verify(o, out);
    if (table->parsed()) return cmd_table(o, out);
  } catch (const UsageError& e) {
    err << "usage error: " << e.what() << '\n';
    return exit_usage;
  } catch (const Error& e) {
    err << "error: " << e.what() << '\n';
    return exit_usage;
  }
  return exit_usage;
}

}  // namespace rcf
