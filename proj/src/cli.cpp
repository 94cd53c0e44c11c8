#include "radica/cli.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <ostream>

#include "CLI11.hpp"
#include "json.hpp"
#include "radica/corpus.hpp"
#include "radica/errors.hpp"
#include "radica/polynomial_input.hpp"
#include "radica/solve.hpp"
#include "radica/verifier.hpp"

namespace radica {

namespace {

using nlohmann::json;

struct SolveFlags {
  std::string polynomial;
  std::string field = "exact";
  std::string format = "text";
  bool verify = false;
  bool radical = false;
  bool paper_strict = false;
};

std::string format_number(double x) {
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.15g", x);
  return buf;
}

std::string format_complex(ComplexD z) {
  if (z.imag() == 0.0) return format_number(z.real());
  const std::string im = std::abs(z.imag()) == 1.0 ? "i" : format_number(std::abs(z.imag())) + "*i";
  if (z.real() == 0.0) return z.imag() < 0 ? "-" + im : im;
  return format_number(z.real()) + (z.imag() < 0 ? " - " : " + ") + im;
}

std::string term_text(const BigRational& q, unsigned deg, const std::string& var, bool first) {
  const bool negative = q.sign() < 0;
  const BigRational mag = negative ? -q : q;
  std::string body;
  if (deg == 0 || mag != BigRational(1)) body = mag.to_string();
  if (deg > 0) {
    if (!body.empty()) body += "*";
    body += var;
    if (deg > 1) body += "^" + std::to_string(deg);
  }
  if (first) return negative ? "-" + body : body;
  return (negative ? " - " : " + ") + body;
}

std::string polynomial_text(const PolynomialInput& input) {
  const std::string var = input.variable.empty() ? "x" : input.variable;
  std::string out;
  for (auto it = input.coefficients.rbegin(); it != input.coefficients.rend(); ++it) {
    out += term_text(it->second, it->first, var, out.empty());
  }
  return out.empty() ? "0" : out;
}

std::vector<std::size_t> display_order(const std::vector<RootRecord>& roots) {
  std::vector<std::size_t> order(roots.size());
  for (std::size_t i = 0; i < order.size(); ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](std::size_t a, std::size_t b) {
    const ComplexD x = roots[a].approx;
    const ComplexD y = roots[b].approx;
    // Conjugate pairs often differ in the last bits of the real part.
    const double tol = 1e-9 * std::max({1.0, std::abs(x), std::abs(y)});
    if (std::abs(x.real() - y.real()) > tol) return x.real() < y.real();
    return x.imag() < y.imag();
  });
  return order;
}

json report_json(const VerificationReport& report) {
  return {{"pass", report.pass},
          {"residuals_ok", report.residuals_ok},
          {"factorization_ok", report.factorization_ok},
          {"factorization_exact", report.factorization_exact ? json(*report.factorization_exact) : json(nullptr)},
          {"oracle_match", report.oracle.matched},
          {"oracle_converged", report.oracle_converged},
          {"oracle_max_distance", report.oracle.max_distance},
          {"notes", report.notes}};
}

void print_text(std::ostream& out, const PolynomialInput& input, const SolveOutcome& outcome,
                const VerificationReport& report, const SolveFlags& flags) {
  const std::string var = input.variable.empty() ? "x" : input.variable;
  out << polynomial_text(input) << " = 0\n";
  out << "field: " << to_string(outcome.backend) << ", degree " << input.degree() << "\n";
  std::size_t n = 0;
  for (std::size_t i : display_order(outcome.roots)) {
    const RootRecord& r = outcome.roots[i];
    out << "  " << var << ++n;
    if (r.exact && r.exact->is_rational()) {
      out << " = " << r.exact->constant_term().to_string();
    } else {
      out << " ~ " << format_complex(r.approx);
    }
    out << "  [" << r.label << "]\n";
    if (flags.radical) out << "      radical: " << render_radical(r) << "\n";
  }
  for (const std::string& note : outcome.notes) out << "note: " << note << "\n";
  if (flags.verify) {
    out << "verification: " << (report.pass ? "pass" : "FAIL");
    out << " (residuals " << (report.residuals_ok ? "ok" : "bad");
    if (report.factorization_exact) {
      out << ", factorization " << (*report.factorization_exact ? "exact" : "mismatch");
    } else {
      out << ", factorization error " << format_number(report.factorization_error);
    }
    out << ", oracle " << (report.oracle.matched ? "match" : "no match") << " at max distance "
        << format_number(report.oracle.max_distance) << ")\n";
    for (const std::string& note : report.notes) out << "  " << note << "\n";
  }
}

void print_json(std::ostream& out, const PolynomialInput& input, const SolveOutcome& outcome,
                const VerificationReport& report, const SolveFlags& flags) {
  json coefficients = json::array();
  for (auto it = input.coefficients.rbegin(); it != input.coefficients.rend(); ++it) {
    coefficients.push_back({{"deg", it->first},
                            {"num", it->second.numerator().get_str()},
                            {"den", it->second.denominator().get_str()}});
  }
  json roots = json::array();
  for (std::size_t i : display_order(outcome.roots)) {
    const RootRecord& r = outcome.roots[i];
    roots.push_back({{"label", r.label},
                     {"radical", render_radical(r)},
                     {"exact", r.exact ? json(r.exact->to_string()) : json(nullptr)},
                     {"approx", {{"re", r.approx.real()}, {"im", r.approx.imag()}}},
                     {"residual", report.residuals[i]}});
  }
  json doc = {{"degree", input.degree()},
              {"field", to_string(outcome.backend)},
              {"variable", input.variable.empty() ? "x" : input.variable},
              {"coefficients", coefficients},
              {"roots", roots},
              {"verification", flags.verify ? report_json(report) : json(nullptr)},
              {"notes", outcome.notes}};
  out << doc.dump(2) << "\n";
}

int run_solve(const SolveFlags& flags, std::ostream& out, std::ostream& err) {
  PolynomialInput input;
  try {
    input = parse_polynomial(flags.polynomial);
  } catch (const ParseError& e) {
    err << "parse error: " << e.what() << "\n";
    return kExitParse;
  }
  const int degree = input.degree();
  if (degree < 1 || degree > 4) {
    err << "unsupported degree " << degree << ": only degrees 1 to 4 are solved\n";
    return kExitDegree;
  }

  SolveOptions options;
  options.backend = flags.field == "complex" ? Backend::complex : Backend::exact;
  options.paper_strict = flags.paper_strict;
  std::vector<std::string> notes;
  if (input.has_decimal && options.backend == Backend::exact) {
    options.backend = Backend::complex;
    notes.push_back("decimal coefficients force the complex backend");
  }

  const Coefficients coeffs = Coefficients::from_rationals(input.leading_first());
  SolveOutcome outcome;
  VerificationReport report;
  try {
    outcome = solve_polynomial(coeffs, options);
    report = verify_solution(coeffs, outcome.roots, outcome.backend);
  } catch (const UnsupportedCase& e) {
    err << "rejected: " << e.what() << "\n";
    return kExitBackend;
  } catch (const Error& e) {
    err << "backend failure: " << e.what() << "\n";
    return kExitBackend;
  }
  outcome.notes.insert(outcome.notes.begin(), notes.begin(), notes.end());

  if (flags.format == "json") {
    print_json(out, input, outcome, report, flags);
  } else {
    print_text(out, input, outcome, report, flags);
  }
  if (flags.verify && !report.pass) return kExitVerification;
  return kExitOk;
}

}  // namespace

int run(const std::vector<std::string>& args, std::ostream& out, std::ostream& err) {
  CLI::App app{"Solve polynomial equations of degree up to four by radicals", "radica"};
  app.require_subcommand(1);

  SolveFlags flags;
  CLI::App* solve = app.add_subcommand("solve", "Solve a polynomial equation p(x) = 0");
  solve->add_option("polynomial", flags.polynomial, "Polynomial such as \"x^3 - 6*x - 9\"")->required();
  solve->add_option("--field", flags.field, "Arithmetic backend")->check(CLI::IsMember({"exact", "complex"}));
  solve->add_option("--format", flags.format, "Output format")->check(CLI::IsMember({"text", "json"}));
  solve->add_flag("--verify", flags.verify, "Attach a verification report");
  solve->add_flag("--radical", flags.radical, "Print radical expressions");
  solve->add_flag("--paper-strict", flags.paper_strict,
                  "Use the restricted Cardano and two-quadratics formulas; reject excluded inputs");

  std::uint64_t seed = seed_from_environment(20240601);
  CLI::App* selftest = app.add_subcommand("selftest", "Run the randomized invariant corpus");
  selftest->add_option("--seed", seed, "Random seed (default: RADICA_SEED or a fixed value)");

  // There are no short options besides -h, so "-x^2 + 1" is a polynomial;
  // the leading space keeps CLI11 from reading it as a flag.
  std::vector<std::string> reversed(args.rbegin(), args.rend());
  for (std::string& arg : reversed) {
    if (arg.size() > 1 && arg[0] == '-' && arg[1] != '-' && arg != "-h") arg.insert(0, " ");
  }
  try {
    app.parse(reversed);
  } catch (const CLI::ParseError& e) {
    return app.exit(e, out, err) == 0 ? kExitOk : kExitUsage;
  }

  if (solve->parsed()) return run_solve(flags, out, err);
  return run_selftest(seed, out) ? kExitOk : kExitVerification;
}

}  // namespace radica
