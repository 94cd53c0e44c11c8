#include "radica/verifier.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

#include "radica/complex.hpp"
#include "radica/errors.hpp"

namespace radica {

namespace {

ComplexD eval_numeric(std::span<const ComplexD> coeffs, ComplexD z) {
  ComplexD acc = coeffs.front();
  for (std::size_t i = 1; i < coeffs.size(); ++i) acc = acc * z + coeffs[i];
  return acc;
}

// Sum |a_i| max(1, |z|)^i: the size of p(z) that rounding errors are measured
// against. Near zero this is the coefficient norm, so a root computed as 1e-16
// for an exact 0 is not held to relative accuracy in z.
double residual_scale(std::span<const ComplexD> coeffs, ComplexD z) {
  double acc = 0.0;
  const double m = std::max(1.0, std::abs(z));
  for (const ComplexD& a : coeffs) acc = acc * m + std::abs(a);
  return std::max(acc, std::numeric_limits<double>::min());
}

std::vector<ComplexD> monic(std::span<const ComplexD> coeffs) {
  std::vector<ComplexD> out(coeffs.begin(), coeffs.end());
  const ComplexD lead = out.front();
  for (ComplexD& z : out) z /= lead;
  return out;
}

}  // namespace

std::vector<ComplexD> durand_kerner(std::span<const ComplexD> coeffs, double tol, int max_iter) {
  if (coeffs.size() < 2) throw Error("durand_kerner needs degree >= 1");
  if (coeffs.front() == ComplexD{}) throw DegenerateLeadingCoefficient();
  const std::vector<ComplexD> p = monic(coeffs);
  const std::size_t n = p.size() - 1;
  std::vector<ComplexD> z(n);
  const ComplexD seed{0.4, 0.9};
  ComplexD power{1.0, 0.0};
  for (std::size_t k = 0; k < n; ++k) {
    z[k] = power;
    power *= seed;
  }
  for (int iter = 0; iter < max_iter; ++iter) {
    double worst = 0.0;
    for (std::size_t i = 0; i < n; ++i) {
      ComplexD denom{1.0, 0.0};
      for (std::size_t j = 0; j < n; ++j) {
        if (j != i) denom *= z[i] - z[j];
      }
      const ComplexD step = eval_numeric(p, z[i]) / denom;
      z[i] -= step;
      worst = std::max(worst, std::abs(step) / std::max(1.0, std::abs(z[i])));
    }
    if (!std::isfinite(worst)) break;
    if (worst <= tol) return z;
  }
  throw OracleNonConvergence(z);
}

MatchVerdict match_root_multisets(std::span<const ComplexD> a, std::span<const ComplexD> b, double tol) {
  if (a.size() != b.size()) throw Error("root multisets differ in size");
  std::vector<std::size_t> perm(b.size());
  std::iota(perm.begin(), perm.end(), std::size_t{0});
  MatchVerdict best;
  best.max_distance = std::numeric_limits<double>::infinity();
  bool have_best = false;
  do {
    bool all_close = true;
    double worst = 0.0;
    for (std::size_t i = 0; i < a.size(); ++i) {
      worst = std::max(worst, std::abs(a[i] - b[perm[i]]));
      all_close = all_close && approx_eq(a[i], b[perm[i]], tol);
    }
    const bool better = !have_best || (all_close && !best.matched) ||
                        (all_close == best.matched && worst < best.max_distance);
    if (better) {
      best = {all_close, perm, worst};
      have_best = true;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return best;
}

double root_separation(std::span<const ComplexD> roots) {
  double largest = 1.0;
  for (const ComplexD& z : roots) largest = std::max(largest, std::abs(z));
  double closest = std::numeric_limits<double>::infinity();
  for (std::size_t i = 0; i < roots.size(); ++i) {
    for (std::size_t j = i + 1; j < roots.size(); ++j) closest = std::min(closest, std::abs(roots[i] - roots[j]));
  }
  return closest / largest;
}

VerificationReport verify_solution(const Coefficients& coeffs, std::span<const RootRecord> roots, Backend backend) {
  const int degree = coeffs.degree();
  if (degree < 1 || degree > 4) throw UnsupportedCase("unsupported degree " + std::to_string(degree));
  if (roots.size() != static_cast<std::size_t>(degree)) throw Error("root count does not match the degree");

  VerificationReport report;
  report.backend = backend;
  const std::vector<ComplexD> p = monic(coeffs.numeric);
  std::vector<ComplexD> approx;
  for (const RootRecord& r : roots) approx.push_back(r.approx);

  const bool exact = backend == Backend::exact && coeffs.exact &&
                     std::all_of(roots.begin(), roots.end(), [](const RootRecord& r) { return r.exact.has_value(); });
  if (exact) {
    TowerField field;
    const auto f = field.capabilities();
    const BigRational lead = coeffs.exact->front();
    std::vector<TowerElement> monic_exact;
    for (const BigRational& q : *coeffs.exact) monic_exact.push_back(TowerElement::rational(q / lead));
    std::vector<TowerElement> exact_roots;
    report.residuals_ok = true;
    for (const RootRecord& r : roots) {
      const TowerElement value = horner_eval<TowerElement>(f, monic_exact, *r.exact);
      report.residual_exact_zero.push_back(value.is_zero());
      report.residuals.push_back(value.is_zero() ? 0.0 : std::abs(tower_to_complex(value)));
      report.residuals_ok = report.residuals_ok && value.is_zero();
      exact_roots.push_back(*r.exact);
    }
    const auto expanded = expand_monic_from_roots<TowerElement>(f, exact_roots);
    bool same = true;
    for (std::size_t i = 0; i < expanded.size(); ++i) same = same && (expanded[i] - monic_exact[i]).is_zero();
    report.factorization_exact = same;
    report.factorization_ok = same;
  } else {
    report.residuals_ok = true;
    for (const ComplexD& z : approx) {
      const double value = std::abs(eval_numeric(p, z));
      report.residuals.push_back(value);
      report.residuals_ok = report.residuals_ok && value <= kFloatResidualTolerance * residual_scale(p, z);
    }
  }

  const auto f = complex_capabilities();
  const auto expanded = expand_monic_from_roots<ComplexD>(f, approx);
  double coeff_scale = 1.0;
  for (const ComplexD& z : p) coeff_scale = std::max(coeff_scale, std::abs(z));
  for (std::size_t i = 0; i < expanded.size(); ++i) {
    report.factorization_error = std::max(report.factorization_error, std::abs(expanded[i] - p[i]));
  }
  if (!exact) report.factorization_ok = report.factorization_error <= kFloatResidualTolerance * coeff_scale;

  try {
    report.oracle_roots = durand_kerner(coeffs.numeric);
    report.oracle_converged = true;
  } catch (const OracleNonConvergence& e) {
    report.oracle_roots = e.last_iterate();
    report.notes.push_back("oracle did not converge; matched against its last iterate");
  }
  report.oracle = match_root_multisets(approx, report.oracle_roots, kOracleMatchTolerance);
  report.oracle_clustered = root_separation(approx) < kClusterSeparation;
  if (report.oracle_clustered) {
    report.notes.push_back("roots closer than 1e-3: oracle match is informational");
  }
  const bool oracle_ok = report.oracle.matched || report.oracle_clustered;
  if (!report.oracle.matched) report.notes.push_back("oracle roots do not match the closed-form roots");
  if (!report.residuals_ok) report.notes.push_back("nonzero residual");
  if (!report.factorization_ok) report.notes.push_back("factorization identity fails");
  report.pass = report.residuals_ok && report.factorization_ok && oracle_ok;
  return report;
}

}  // namespace radica
