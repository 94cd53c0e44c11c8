#pragma once

#include <complex>
#include <cstdint>
#include <functional>

#include "radica/errors.hpp"

namespace radica {

using ComplexD = std::complex<double>;

/// Operations of an abstract field, bundled as values so that solvers can be
/// written once and run over any backend: exact radical towers, complex
/// doubles, or a provider with deliberately unusual root choices.
///
/// `sqrt` and `cbrt` are optional root providers. Their contracts are
/// sqrt(a)^2 = a and cbrt(a)^3 = a for every a, with sqrt(0) = cbrt(0) = 0;
/// no particular branch is required. `inverse` must throw DivisionByZero on
/// zero. `omega`, when set, returns a fixed primitive cube root of unity and
/// overrides the (-1 + sqrt(-3))/2 construction. `embed` maps elements to
/// complex numbers for display and numeric cross-checks.
template <class T>
struct FieldCapabilities {
  T zero{};
  T one{};
  std::function<T(const T&, const T&)> add;
  std::function<T(const T&)> neg;
  std::function<T(const T&, const T&)> mul;
  std::function<T(const T&)> inverse;
  std::function<bool(const T&)> is_zero;
  std::function<T(const T&)> sqrt;
  std::function<T(const T&)> cbrt;
  std::function<T()> omega;
  std::function<ComplexD(const T&)> embed;
  bool two_nonzero = false;    // 1 + 1 != 0
  bool three_nonzero = false;  // 1 + 1 + 1 != 0

  bool has_sqrt() const { return static_cast<bool>(sqrt); }
  bool has_cbrt() const { return static_cast<bool>(cbrt); }
};

template <class T>
T sub(const FieldCapabilities<T>& f, const T& a, const T& b) {
  return f.add(a, f.neg(b));
}

template <class T>
T div(const FieldCapabilities<T>& f, const T& a, const T& b) {
  return f.mul(a, f.inverse(b));
}

template <class T>
bool equal(const FieldCapabilities<T>& f, const T& a, const T& b) {
  return f.is_zero(sub(f, a, b));
}

/// Image of n under the ring map Z -> field, by binary doubling.
template <class T>
T from_integer(const FieldCapabilities<T>& f, std::int64_t n) {
  // Work on the magnitude as unsigned so INT64_MIN is representable.
  std::uint64_t m = n < 0 ? ~static_cast<std::uint64_t>(n) + 1 : static_cast<std::uint64_t>(n);
  T result = f.zero;
  T power = f.one;
  bool first = true;
  while (m != 0) {
    if (m & 1U) {
      result = first ? power : f.add(result, power);
      first = false;
    }
    m >>= 1U;
    if (m != 0) power = f.add(power, power);
  }
  return n < 0 ? f.neg(result) : result;
}

/// x^k by repeated squaring; small_pow(x, 0) = one.
template <class T>
T small_pow(const FieldCapabilities<T>& f, const T& x, unsigned k) {
  T result = f.one;
  T base = x;
  bool first = true;
  while (k != 0) {
    if (k & 1U) {
      result = first ? base : f.mul(result, base);
      first = false;
    }
    k >>= 1U;
    if (k != 0) base = f.mul(base, base);
  }
  return result;
}

template <class T>
void require_sqrt(const FieldCapabilities<T>& f) {
  if (!f.has_sqrt()) throw MissingCapability("backend has no square-root provider");
  if (!f.two_nonzero) throw MissingCapability("characteristic 2 is not supported");
}

template <class T>
void require_cbrt(const FieldCapabilities<T>& f) {
  require_sqrt(f);
  if (!f.has_cbrt()) throw MissingCapability("backend has no cube-root provider");
  if (!f.three_nonzero) throw MissingCapability("characteristic 3 is not supported");
}

/// Primitive cube root of unity (-1 + sqrt(-3)) / 2, or the backend's own.
template <class T>
T omega(const FieldCapabilities<T>& f) {
  if (f.omega) return f.omega();
  require_sqrt(f);
  const T root = f.sqrt(from_integer(f, -3));
  return f.mul(f.add(f.neg(f.one), root), f.inverse(from_integer(f, 2)));
}

}  // namespace radica
