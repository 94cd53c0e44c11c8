#include "radica/solve.hpp"

#include <algorithm>
#include <cmath>

#include "radica/complex.hpp"
#include "radica/errors.hpp"
#include "radica/solvers.hpp"

namespace radica {

namespace {

template <class T, std::size_t N>
std::vector<LabeledRoot<Traced<T>>> as_vector(const std::array<LabeledRoot<Traced<T>>, N>& roots) {
  return {roots.begin(), roots.end()};
}

template <class T>
std::vector<LabeledRoot<Traced<T>>> dispatch(const FieldCapabilities<Traced<T>>& f,
                                             const std::vector<Traced<T>>& c, bool strict) {
  switch (c.size() - 1) {
    case 1: {
      const Traced<T> root = f.neg(f.mul(c[1], f.inverse(c[0])));
      return {{root, "linear"}};
    }
    case 2: {
      const auto r = solve_quadratic_general(f, c[0], c[1], c[2]);
      return {{r[0], "quadratic-plus"}, {r[1], "quadratic-minus"}};
    }
    case 3:
      return as_vector(strict ? solve_cubic_strict(f, c[0], c[1], c[2], c[3])
                              : solve_cubic(f, c[0], c[1], c[2], c[3]));
    case 4:
      return as_vector(strict ? solve_quartic_strict(f, c[0], c[1], c[2], c[3], c[4])
                              : solve_quartic(f, c[0], c[1], c[2], c[3], c[4]));
    default:
      throw UnsupportedCase("unsupported degree " + std::to_string(c.size() - 1));
  }
}

SolveOutcome solve_exact(const std::vector<BigRational>& coeffs, bool strict) {
  TowerField field;
  const auto f = traced(field.capabilities());
  std::vector<Traced<TowerElement>> c;
  for (const BigRational& q : coeffs) c.push_back(trace_literal(TowerElement::rational(q), q));
  SolveOutcome out;
  out.backend = Backend::exact;
  for (const auto& root : dispatch(f, c, strict)) {
    out.roots.push_back({root.value.value, tower_to_complex(root.value.value), root.value.expr, root.label});
  }
  return out;
}

SolveOutcome solve_complex(const Coefficients& coeffs, bool strict) {
  const auto f = traced(complex_capabilities(complex_zero_tolerance(coeffs.numeric)));
  std::vector<Traced<ComplexD>> c;
  for (std::size_t i = 0; i < coeffs.numeric.size(); ++i) {
    if (coeffs.exact) {
      c.push_back(trace_literal(coeffs.numeric[i], (*coeffs.exact)[i]));
    } else {
      c.push_back(trace_literal(coeffs.numeric[i], coeffs.numeric[i]));
    }
  }
  SolveOutcome out;
  out.backend = Backend::complex;
  for (const auto& root : dispatch(f, c, strict)) {
    out.roots.push_back({std::nullopt, root.value.value, root.value.expr, root.label});
  }
  return out;
}

}  // namespace

std::string to_string(Backend backend) { return backend == Backend::exact ? "exact" : "complex"; }

std::string render_radical(const RootRecord& record) { return render(*record.radical); }

Coefficients Coefficients::from_rationals(std::vector<BigRational> coeffs) {
  Coefficients c;
  for (const BigRational& q : coeffs) c.numeric.emplace_back(q.to_double(), 0.0);
  c.exact = std::move(coeffs);
  return c;
}

Coefficients Coefficients::from_complex(std::vector<ComplexD> coeffs) {
  Coefficients c;
  c.numeric = std::move(coeffs);
  return c;
}

double complex_zero_tolerance(const std::vector<ComplexD>& coeffs) {
  double scale = 1.0;
  if (!coeffs.empty() && std::abs(coeffs.front()) > 0.0) {
    for (const ComplexD& z : coeffs) scale = std::max(scale, std::abs(z / coeffs.front()));
  }
  return 1e-12 * scale;
}

SolveOutcome solve_polynomial(const Coefficients& coeffs, const SolveOptions& options) {
  const int degree = coeffs.degree();
  if (degree < 1 || degree > 4) throw UnsupportedCase("unsupported degree " + std::to_string(degree));
  if (options.backend == Backend::exact) {
    if (!coeffs.exact) throw Error("exact backend needs rational coefficients");
    try {
      return solve_exact(*coeffs.exact, options.paper_strict);
    } catch (const ReducibleExtension& e) {
      if (!options.allow_fallback) throw;
      SolveOutcome out = solve_complex(coeffs, options.paper_strict);
      out.notes.push_back(std::string("reducible extension, retried on floats: ") + e.what());
      return out;
    }
  }
  return solve_complex(coeffs, options.paper_strict);
}

}  // namespace radica
