#pragma once

#include <optional>
#include <string>
#include <vector>

#include "radica/radical_expr.hpp"
#include "radica/rational.hpp"
#include "radica/tower.hpp"

namespace radica {

enum class Backend { exact, complex };

std::string to_string(Backend backend);

/// One solved root: its exact tower value (exact backend only), a numeric
/// value, the radical expression that produced it, and the formula branch.
struct RootRecord {
  std::optional<TowerElement> exact;
  ComplexD approx;
  ExprPtr radical;
  std::string label;
};

/// Deterministic text of the record's radical expression.
std::string render_radical(const RootRecord& record);

/// Leading-first coefficients. `exact` is present when every coefficient is
/// rational and the input did not ask for floating point.
struct Coefficients {
  std::vector<ComplexD> numeric;
  std::optional<std::vector<BigRational>> exact;

  static Coefficients from_rationals(std::vector<BigRational> coeffs);
  static Coefficients from_complex(std::vector<ComplexD> coeffs);

  int degree() const { return static_cast<int>(numeric.size()) - 1; }
};

struct SolveOptions {
  Backend backend = Backend::exact;
  /// Use the restricted Cardano / two-quadratics entry points that reject
  /// inputs outside their hypotheses.
  bool paper_strict = false;
  /// Retry on complex doubles when the exact backend reports a reducible
  /// extension.
  bool allow_fallback = true;
};

struct SolveOutcome {
  Backend backend = Backend::exact;
  std::vector<RootRecord> roots;  // degree-many, with repetition
  std::vector<std::string> notes;
};

/// Solves a degree 1..4 polynomial. Throws UnsupportedCase for other degrees
/// or, in strict mode, for inputs outside the formulas' hypotheses;
/// DegenerateLeadingCoefficient when the leading coefficient is zero.
SolveOutcome solve_polynomial(const Coefficients& coeffs, const SolveOptions& options = {});

/// Relative zero threshold used for case splits in the complex backend:
/// 1e-12 times the largest monic coefficient magnitude (at least 1).
double complex_zero_tolerance(const std::vector<ComplexD>& coeffs);

}  // namespace radica
