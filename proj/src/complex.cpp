#include "radica/complex.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "radica/errors.hpp"

namespace radica {

namespace {

// Folds -0.0 into +0.0 so branch cuts are taken from above.
ComplexD canonical_zero_sign(ComplexD z) {
  return {z.real() == 0.0 ? 0.0 : z.real(), z.imag() == 0.0 ? 0.0 : z.imag()};
}

}  // namespace

ComplexD csqrt_principal(ComplexD z) {
  z = canonical_zero_sign(z);
  if (z.imag() == 0.0) {
    if (z.real() >= 0.0) return {std::sqrt(z.real()), 0.0};
    return {0.0, std::sqrt(-z.real())};
  }
  return std::sqrt(z);
}

ComplexD ccbrt_principal(ComplexD z) {
  z = canonical_zero_sign(z);
  if (z == ComplexD{}) return {};
  if (z.imag() == 0.0 && z.real() > 0.0) return {std::cbrt(z.real()), 0.0};
  const double modulus = std::cbrt(std::abs(z));
  const double angle = std::arg(z) / 3.0;
  ComplexD w = std::polar(modulus, angle);
  // One Newton step tightens the last few bits without leaving the branch.
  w -= (w * w * w - z) / (3.0 * w * w);
  return w;
}

bool approx_eq(ComplexD x, ComplexD y, double tol) {
  const double scale = std::max({1.0, std::abs(x), std::abs(y)});
  return std::abs(x - y) <= tol * scale;
}

FieldCapabilities<ComplexD> complex_capabilities(double zero_tol) {
  FieldCapabilities<ComplexD> caps;
  caps.zero = ComplexD{0.0, 0.0};
  caps.one = ComplexD{1.0, 0.0};
  caps.add = [](const ComplexD& a, const ComplexD& b) { return a + b; };
  caps.neg = [](const ComplexD& a) { return -a; };
  caps.mul = [](const ComplexD& a, const ComplexD& b) { return a * b; };
  caps.inverse = [](const ComplexD& a) {
    if (a == ComplexD{}) throw DivisionByZero();
    return 1.0 / a;
  };
  caps.is_zero = [zero_tol](const ComplexD& a) { return std::abs(a) <= zero_tol; };
  caps.sqrt = csqrt_principal;
  caps.cbrt = ccbrt_principal;
  caps.embed = [](const ComplexD& a) { return a; };
  caps.two_nonzero = true;
  caps.three_nonzero = true;
  return caps;
}

}  // namespace radica
