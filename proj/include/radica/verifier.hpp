#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "radica/field.hpp"
#include "radica/solve.hpp"
#include "radica/solvers.hpp"

namespace radica {

/// p(x) for leading-first coefficients.
template <class T>
T horner_eval(const FieldCapabilities<T>& f, std::span<const T> coeffs, const T& x) {
  if (coeffs.empty()) throw Error("horner_eval needs at least one coefficient");
  T acc = coeffs.front();
  for (std::size_t i = 1; i < coeffs.size(); ++i) acc = f.add(f.mul(acc, x), coeffs[i]);
  return acc;
}

/// Leading-first product of two polynomials.
template <class T>
std::vector<T> poly_mul(const FieldCapabilities<T>& f, std::span<const T> a, std::span<const T> b) {
  std::vector<T> out(a.size() + b.size() - 1, f.zero);
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = f.add(out[i + j], f.mul(a[i], b[j]));
  }
  return out;
}

/// Coefficients of prod (x - r_i), leading-first.
template <class T>
std::vector<T> expand_monic_from_roots(const FieldCapabilities<T>& f, std::span<const T> roots) {
  std::vector<T> acc{f.one};
  for (const T& r : roots) {
    const std::vector<T> linear{f.one, f.neg(r)};
    acc = poly_mul<T>(f, acc, linear);
  }
  return acc;
}

/// Weierstrass simultaneous iteration from the seeds (0.4 + 0.9i)^k.
/// Stops when every correction is at most tol * max(1, |z|); throws
/// OracleNonConvergence carrying the last iterate after max_iter sweeps.
std::vector<ComplexD> durand_kerner(std::span<const ComplexD> coeffs, double tol = 1e-12, int max_iter = 200);

struct MatchVerdict {
  bool matched = false;
  std::vector<std::size_t> permutation;  // a[i] pairs with b[permutation[i]]
  double max_distance = 0.0;
};

/// Tries all pairings of two equally sized multisets (at most 4 elements)
/// and reports the one with the smallest worst-pair distance, preferring
/// pairings in which every pair is approx_eq at tol.
MatchVerdict match_root_multisets(std::span<const ComplexD> a, std::span<const ComplexD> b, double tol);

/// Smallest pairwise distance relative to max(1, largest modulus); infinity
/// for fewer than two roots.
double root_separation(std::span<const ComplexD> roots);

struct VerificationReport {
  Backend backend = Backend::exact;
  std::vector<double> residuals;   // |p(root)|, monic-normalized input
  std::vector<bool> residual_exact_zero;  // exact backend only
  bool residuals_ok = false;
  std::optional<bool> factorization_exact;
  double factorization_error = 0.0;  // max coefficient error on the numeric images
  bool factorization_ok = false;
  bool oracle_converged = false;
  bool oracle_clustered = false;  // root separation below 1e-3: match is informational
  MatchVerdict oracle;
  std::vector<ComplexD> oracle_roots;
  std::vector<std::string> notes;
  bool pass = false;
};

inline constexpr double kFloatResidualTolerance = 1e-6;
inline constexpr double kOracleMatchTolerance = 1e-6;
inline constexpr double kClusterSeparation = 1e-3;

/// Checks a solve: residuals (exact zero for tower values, otherwise
/// |p(z)| <= 1e-6 * sum |a_i| max(1, |z|)^i on the monic input), the
/// factorization identity, and the Durand-Kerner multiset match.
VerificationReport verify_solution(const Coefficients& coeffs, std::span<const RootRecord> roots, Backend backend);

/// Cardano's formula with s and t taken as two independent cube roots, next
/// to the corrected t = c/(3s). With an arbitrary (valid) cube-root provider
/// the naive residual need not vanish; the corrected one always does.
template <class T>
struct TwoCubeRootsExhibit {
  T naive_root;
  T naive_residual;
  T corrected_root;
  T corrected_residual;
};

template <class T>
TwoCubeRootsExhibit<T> negative_exhibit_two_cbrts(const FieldCapabilities<T>& f, const T& c, const T& d) {
  require_cbrt(f);
  const T h = detail::half(f);
  const T disc = f.add(f.mul(f.mul(d, d), f.inverse(from_integer(f, 4))),
                       f.mul(small_pow(f, c, 3), f.inverse(from_integer(f, 27))));
  const T r = f.sqrt(disc);
  const T s = f.cbrt(f.add(f.mul(f.neg(d), h), r));
  const T t = f.cbrt(f.add(f.mul(d, h), r));
  const std::vector<T> cubic{f.one, f.zero, c, d};
  TwoCubeRootsExhibit<T> out;
  out.naive_root = sub(f, s, t);
  out.naive_residual = horner_eval<T>(f, cubic, out.naive_root);
  out.corrected_root = cardano_root(f, DepressedCubic<T>{c, d, f.zero}, CubeRootBranch::plain);
  out.corrected_residual = horner_eval<T>(f, cubic, out.corrected_root);
  return out;
}

}  // namespace radica
