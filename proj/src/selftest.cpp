#include <ostream>
#include <string>
#include <vector>

#include "radica/cli.hpp"
#include "radica/complex.hpp"
#include "radica/corpus.hpp"
#include "radica/solve.hpp"
#include "radica/solvers.hpp"
#include "radica/tower.hpp"
#include "radica/verifier.hpp"

namespace radica {

namespace {

struct Tally {
  std::ostream& out;
  bool all_ok = true;

  void line(const std::string& name, int failures, int total) {
    const bool ok = failures == 0;
    all_ok = all_ok && ok;
    out << (ok ? "PASS " : "FAIL ") << name << " (" << total - failures << "/" << total << ")\n";
  }
};

int cardano_exact(Rng& rng, int count) {
  int failures = 0;
  for (int i = 0; i < count; ++i) {
    TowerField field;
    const auto f = field.capabilities();
    const TowerElement c = TowerElement::rational(random_nonzero_rational(rng, 20));
    const TowerElement d = TowerElement::rational(random_nonzero_rational(rng, 20));
    const auto roots = cubic_roots_depressed_total(f, c, d);
    const std::vector<TowerElement> cubic{f.one, f.zero, c, d};
    std::vector<TowerElement> values;
    bool ok = true;
    for (const auto& r : roots) {
      ok = ok && horner_eval<TowerElement>(f, cubic, r.value).is_zero();
      values.push_back(r.value);
    }
    const auto expanded = expand_monic_from_roots<TowerElement>(f, values);
    for (std::size_t k = 0; k < expanded.size(); ++k) ok = ok && expanded[k] == cubic[k];
    failures += ok ? 0 : 1;
  }
  return failures;
}

int quadratic_exact(Rng& rng, int count) {
  int failures = 0;
  for (int i = 0; i < count; ++i) {
    TowerField field;
    const auto f = field.capabilities();
    const TowerElement a = TowerElement::rational(random_nonzero_rational(rng, 20));
    const TowerElement b = TowerElement::rational(random_rational(rng, 20));
    const TowerElement c = TowerElement::rational(random_rational(rng, 20));
    const auto roots = solve_quadratic_general(f, a, b, c);
    const std::vector<TowerElement> poly{a, b, c};
    bool ok = horner_eval<TowerElement>(f, poly, roots[0]).is_zero() &&
              horner_eval<TowerElement>(f, poly, roots[1]).is_zero();
    failures += ok ? 0 : 1;
  }
  return failures;
}

int quartic_split_exact(Rng& rng, int count) {
  int failures = 0;
  for (int i = 0; i < count; ++i) {
    TowerField field;
    const auto f = field.capabilities();
    const TowerElement c = TowerElement::rational(random_rational(rng, 10));
    const TowerElement d = TowerElement::rational(random_nonzero_rational(rng, 10));
    const TowerElement e = TowerElement::rational(random_nonzero_rational(rng, 10));
    const auto split = quartic_split_depressed(f, c, d, e);
    const std::vector<TowerElement> left{f.one, split.p, split.q};
    const std::vector<TowerElement> right{f.one, -split.p, split.s};
    const auto product = poly_mul<TowerElement>(f, left, right);
    const std::vector<TowerElement> target{f.one, f.zero, c, d, e};
    bool ok = true;
    for (std::size_t k = 0; k < target.size(); ++k) ok = ok && product[k] == target[k];
    failures += ok ? 0 : 1;
  }
  return failures;
}

int differential(Rng& rng, int count) {
  int failures = 0;
  for (int i = 0; i < count; ++i) {
    const int degree = 3 + i % 2;
    std::vector<ComplexD> coeffs;
    for (int k = 0; k <= degree; ++k) coeffs.push_back(random_complex(rng, 10.0));
    SolveOptions options;
    options.backend = Backend::complex;
    const Coefficients input = Coefficients::from_complex(coeffs);
    const SolveOutcome outcome = solve_polynomial(input, options);
    const VerificationReport report = verify_solution(input, outcome.roots, Backend::complex);
    failures += report.pass ? 0 : 1;
  }
  return failures;
}

int float_providers(Rng& rng, int count) {
  int failures = 0;
  for (int i = 0; i < count; ++i) {
    const ComplexD z = random_complex(rng, 1e3);
    const ComplexD s = csqrt_principal(z);
    const ComplexD t = ccbrt_principal(z);
    const bool ok = approx_eq(s * s, z, 1e-12) && approx_eq(t * t * t, z, 1e-12);
    failures += ok ? 0 : 1;
  }
  return failures;
}

}  // namespace

bool run_selftest(std::uint64_t seed, std::ostream& out) {
  Rng rng(seed);
  out << "selftest seed " << seed << "\n";
  Tally tally{out};
  tally.line("cardano substitution and factorization (exact)", cardano_exact(rng, 20), 20);
  tally.line("quadratic formula (exact)", quadratic_exact(rng, 50), 50);
  tally.line("quartic two-quadratic split (exact)", quartic_split_exact(rng, 10), 10);
  tally.line("closed form vs Durand-Kerner (complex)", differential(rng, 200), 200);
  tally.line("principal sqrt/cbrt contracts (complex)", float_providers(rng, 1000), 1000);
  return tally.all_ok;
}

}  // namespace radica
