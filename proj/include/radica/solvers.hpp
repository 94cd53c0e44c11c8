#pragma once

#include <array>
#include <string>

#include "radica/errors.hpp"
#include "radica/field.hpp"

namespace radica {

/// A root together with the formula branch that produced it, e.g.
/// "cardano-B" or "quadratic-2-minus".
template <class T>
struct LabeledRoot {
  T value;
  std::string label;
};

template <class T>
struct MonicCubic {
  T b, c, d;  // x^3 + b x^2 + c x + d
};

/// u^3 + c u + d with x = u - shift, shift = b/3.
template <class T>
struct DepressedCubic {
  T c, d, shift;
};

/// u^4 + c u^2 + d u + e with x = u - shift, shift = b/4.
template <class T>
struct DepressedQuartic {
  T c, d, e, shift;
};

/// u^4 + c u^2 + d u + e = (u^2 + p u + q)(u^2 - p u + s).
template <class T>
struct QuarticSplit {
  T p, q, s;
};

/// Which cube root of the Cardano radicand is used for s.
enum class CubeRootBranch { plain, omega, omega_squared };

/// Quantities that must be nonzero for the restricted cubic formula:
/// 3ac - b^2 and 2b^3 - 9abc + 27a^2 d.
template <class T>
struct CubicConditions {
  T linear, constant;
};

/// Quantities that must be nonzero for the restricted quartic formula,
/// written in the monic coefficients x^4 + b x^3 + c x^2 + d x + e:
/// b^3/8 - bc/2 + d, b^2 c/16 - 3b^4/256 - bd/4 + e, and c^2 - 3bd + 12e.
template <class T>
struct QuarticConditions {
  T linear, constant, resolvent;
};

namespace detail {

template <class T>
T half(const FieldCapabilities<T>& f) {
  return f.inverse(from_integer(f, 2));
}

template <class T>
T square(const FieldCapabilities<T>& f, const T& x) {
  return f.mul(x, x);
}

template <class T>
T scale(const FieldCapabilities<T>& f, std::int64_t k, const T& x) {
  return f.mul(from_integer(f, k), x);
}

template <class T>
T require_nonzero_leading(const FieldCapabilities<T>& f, const T& a) {
  if (f.is_zero(a)) throw DegenerateLeadingCoefficient();
  return f.inverse(a);
}

}  // namespace detail

/// Roots of x^2 + b x + c: -b/2 + sqrt(b^2/4 - c) first, then the minus sign.
template <class T>
std::array<T, 2> solve_quadratic_monic(const FieldCapabilities<T>& f, const T& b, const T& c) {
  require_sqrt(f);
  const T minus_half_b = f.neg(f.mul(b, detail::half(f)));
  const T root = f.sqrt(sub(f, detail::square(f, minus_half_b), c));
  return {f.add(minus_half_b, root), sub(f, minus_half_b, root)};
}

template <class T>
std::array<T, 2> solve_quadratic_general(const FieldCapabilities<T>& f, const T& a, const T& b, const T& c) {
  const T inv_a = detail::require_nonzero_leading(f, a);
  return solve_quadratic_monic(f, f.mul(b, inv_a), f.mul(c, inv_a));
}

/// x^3 + b x^2 + c x + d under x = u - b/3.
template <class T>
DepressedCubic<T> depress_cubic(const FieldCapabilities<T>& f, const T& b, const T& c, const T& d) {
  if (!f.three_nonzero) throw MissingCapability("characteristic 3 is not supported");
  const T shift = f.mul(b, f.inverse(from_integer(f, 3)));
  const T c_dep = sub(f, c, f.mul(b, shift));
  const T d_dep = f.add(sub(f, detail::scale(f, 2, small_pow(f, shift, 3)), f.mul(shift, c)), d);
  return {c_dep, d_dep, shift};
}

/// One root u = s - c/(3s) of u^3 + c u + d, with s a cube root of
/// -d/2 + sqrt(d^2/4 + c^3/27) chosen by `branch`.
///
/// t is never taken as a second independent cube root: for an arbitrary
/// cube-root provider nothing forces 3st = c, so t is derived from s.
template <class T>
T cardano_root(const FieldCapabilities<T>& f, const DepressedCubic<T>& dc, CubeRootBranch branch) {
  require_cbrt(f);
  if (f.is_zero(dc.c)) throw UnsupportedCase("use total solver: c = 0");
  const T h = detail::half(f);
  const T disc = f.add(f.mul(detail::square(f, dc.d), f.inverse(from_integer(f, 4))),
                       f.mul(small_pow(f, dc.c, 3), f.inverse(from_integer(f, 27))));
  const T r = f.sqrt(disc);
  const T minus_half_d = f.mul(f.neg(dc.d), h);
  T radicand = f.add(minus_half_d, r);
  // Both signs of r give valid s; the other one avoids s = 0 under rounding.
  if (f.is_zero(radicand)) radicand = sub(f, minus_half_d, r);
  T s = f.cbrt(radicand);
  if (branch == CubeRootBranch::omega) {
    s = f.mul(omega(f), s);
  } else if (branch == CubeRootBranch::omega_squared) {
    const T w = omega(f);
    s = f.mul(f.mul(w, w), s);
  }
  return sub(f, s, f.mul(dc.c, f.inverse(detail::scale(f, 3, s))));
}

/// All three roots of u^3 + c u + d for any c, d, with repetition.
template <class T>
std::array<LabeledRoot<T>, 3> cubic_roots_depressed_total(const FieldCapabilities<T>& f, const T& c, const T& d) {
  require_cbrt(f);
  if (f.is_zero(c)) {
    const T s = f.cbrt(f.neg(d));
    const T w = omega(f);
    return {{{s, "cube-root-A"}, {f.mul(w, s), "cube-root-B"}, {f.mul(f.mul(w, w), s), "cube-root-C"}}};
  }
  if (f.is_zero(d)) {
    const T r = f.sqrt(f.neg(c));
    return {{{f.zero, "zero"}, {r, "sqrt-plus"}, {f.neg(r), "sqrt-minus"}}};
  }
  const DepressedCubic<T> dc{c, d, f.zero};
  return {{{cardano_root(f, dc, CubeRootBranch::plain), "cardano-A"},
           {cardano_root(f, dc, CubeRootBranch::omega), "cardano-B"},
           {cardano_root(f, dc, CubeRootBranch::omega_squared), "cardano-C"}}};
}

template <class T>
CubicConditions<T> cubic_conditions(const FieldCapabilities<T>& f, const T& a, const T& b, const T& c, const T& d) {
  const T linear = sub(f, detail::scale(f, 3, f.mul(a, c)), detail::square(f, b));
  const T constant = f.add(sub(f, detail::scale(f, 2, small_pow(f, b, 3)), detail::scale(f, 9, f.mul(f.mul(a, b), c))),
                           detail::scale(f, 27, f.mul(detail::square(f, a), d)));
  return {linear, constant};
}

template <class T>
std::array<LabeledRoot<T>, 3> shift_back(const FieldCapabilities<T>& f, std::array<LabeledRoot<T>, 3> roots,
                                         const T& shift) {
  for (auto& r : roots) r.value = sub(f, r.value, shift);
  return roots;
}

/// Total cubic solver for a x^3 + b x^2 + c x + d, a != 0.
template <class T>
std::array<LabeledRoot<T>, 3> solve_cubic(const FieldCapabilities<T>& f, const T& a, const T& b, const T& c,
                                          const T& d) {
  const T inv_a = detail::require_nonzero_leading(f, a);
  const DepressedCubic<T> dc = depress_cubic(f, f.mul(b, inv_a), f.mul(c, inv_a), f.mul(d, inv_a));
  return shift_back(f, cubic_roots_depressed_total(f, dc.c, dc.d), dc.shift);
}

/// Cardano's formula only, for inputs with 3ac - b^2 != 0 and
/// 2b^3 - 9abc + 27a^2 d != 0; anything else is rejected.
template <class T>
std::array<LabeledRoot<T>, 3> solve_cubic_strict(const FieldCapabilities<T>& f, const T& a, const T& b, const T& c,
                                                 const T& d) {
  const T inv_a = detail::require_nonzero_leading(f, a);
  const CubicConditions<T> cond = cubic_conditions(f, a, b, c, d);
  if (f.is_zero(cond.linear)) throw UnsupportedCase("paper-strict: 3ac - b^2 = 0");
  if (f.is_zero(cond.constant)) throw UnsupportedCase("paper-strict: 2b^3 - 9abc + 27a^2 d = 0");
  const DepressedCubic<T> dc = depress_cubic(f, f.mul(b, inv_a), f.mul(c, inv_a), f.mul(d, inv_a));
  std::array<LabeledRoot<T>, 3> roots{{{cardano_root(f, dc, CubeRootBranch::plain), "cardano-A"},
                                       {cardano_root(f, dc, CubeRootBranch::omega), "cardano-B"},
                                       {cardano_root(f, dc, CubeRootBranch::omega_squared), "cardano-C"}}};
  return shift_back(f, roots, dc.shift);
}

/// x^4 + b x^3 + c x^2 + d x + e under x = u - b/4.
template <class T>
DepressedQuartic<T> depress_quartic(const FieldCapabilities<T>& f, const T& b, const T& c, const T& d, const T& e) {
  if (!f.two_nonzero) throw MissingCapability("characteristic 2 is not supported");
  const T shift = f.mul(b, f.inverse(from_integer(f, 4)));
  const T shift2 = detail::square(f, shift);
  const T c_dep = sub(f, c, detail::scale(f, 6, shift2));
  const T d_dep = f.add(sub(f, detail::scale(f, 8, f.mul(shift2, shift)), detail::scale(f, 2, f.mul(shift, c))), d);
  const T e_dep = f.add(sub(f, sub(f, f.mul(shift2, c), detail::scale(f, 3, detail::square(f, shift2))),
                            f.mul(shift, d)),
                        e);
  return {c_dep, d_dep, e_dep, shift};
}

/// Monic cubic (p^2)^3 + 2c (p^2)^2 + (c^2 - 4e) p^2 - d^2 whose roots are
/// the admissible values of p^2.
template <class T>
MonicCubic<T> resolvent_coeffs(const FieldCapabilities<T>& f, const T& c, const T& d, const T& e) {
  return {detail::scale(f, 2, c), sub(f, detail::square(f, c), detail::scale(f, 4, e)), f.neg(detail::square(f, d))};
}

/// q = (c + p^2 - d/p)/2 and s = (c + p^2 + d/p)/2, from p + r = 0,
/// q + s + pr = c and ps + qr = d.
template <class T>
QuarticSplit<T> quartic_split_from_p(const FieldCapabilities<T>& f, const T& c, const T& d, const T& p) {
  const T h = detail::half(f);
  const T base = f.add(c, detail::square(f, p));
  const T d_over_p = f.mul(d, f.inverse(p));
  return {p, f.mul(sub(f, base, d_over_p), h), f.mul(f.add(base, d_over_p), h)};
}

/// Splits u^4 + c u^2 + d u + e (d != 0) into two quadratics using the first
/// nonzero root of the resolvent in A, B, C order.
template <class T>
QuarticSplit<T> quartic_split_depressed(const FieldCapabilities<T>& f, const T& c, const T& d, const T& e) {
  require_cbrt(f);
  if (f.is_zero(d)) throw UnsupportedCase("biquadratic case: d = 0");
  const MonicCubic<T> res = resolvent_coeffs(f, c, d, e);
  for (const auto& root : solve_cubic(f, f.one, res.b, res.c, res.d)) {
    if (!f.is_zero(root.value)) return quartic_split_from_p(f, c, d, f.sqrt(root.value));
  }
  // The resolvent roots multiply to d^2 != 0.
  throw Error("resolvent returned only zero roots");
}

template <class T>
std::array<LabeledRoot<T>, 4> roots_of_split(const FieldCapabilities<T>& f, const QuarticSplit<T>& split) {
  const auto first = solve_quadratic_monic(f, split.p, split.q);
  const auto second = solve_quadratic_monic(f, f.neg(split.p), split.s);
  return {{{first[0], "quadratic-1-plus"},
           {first[1], "quadratic-1-minus"},
           {second[0], "quadratic-2-plus"},
           {second[1], "quadratic-2-minus"}}};
}

/// All four roots of u^4 + c u^2 + d u + e for any c, d, e, with repetition.
template <class T>
std::array<LabeledRoot<T>, 4> quartic_roots_depressed_total(const FieldCapabilities<T>& f, const T& c, const T& d,
                                                            const T& e) {
  require_cbrt(f);
  if (f.is_zero(d)) {
    const auto y = solve_quadratic_monic(f, c, e);
    const T r1 = f.sqrt(y[0]);
    const T r2 = f.sqrt(y[1]);
    return {{{r1, "biquadratic-1-plus"},
             {f.neg(r1), "biquadratic-1-minus"},
             {r2, "biquadratic-2-plus"},
             {f.neg(r2), "biquadratic-2-minus"}}};
  }
  return roots_of_split(f, quartic_split_depressed(f, c, d, e));
}

template <class T>
QuarticConditions<T> quartic_conditions(const FieldCapabilities<T>& f, const T& b, const T& c, const T& d,
                                        const T& e) {
  const T b2 = detail::square(f, b);
  const T linear = f.add(sub(f, f.mul(small_pow(f, b, 3), f.inverse(from_integer(f, 8))),
                             f.mul(f.mul(b, c), detail::half(f))),
                         d);
  const T constant =
      f.add(sub(f,
                sub(f, f.mul(f.mul(b2, c), f.inverse(from_integer(f, 16))),
                    f.mul(detail::scale(f, 3, detail::square(f, b2)), f.inverse(from_integer(f, 256)))),
                f.mul(f.mul(b, d), f.inverse(from_integer(f, 4)))),
            e);
  const T resolvent =
      f.add(sub(f, detail::square(f, c), detail::scale(f, 3, f.mul(b, d))), detail::scale(f, 12, e));
  return {linear, constant, resolvent};
}

template <class T>
std::array<LabeledRoot<T>, 4> shift_back(const FieldCapabilities<T>& f, std::array<LabeledRoot<T>, 4> roots,
                                         const T& shift) {
  for (auto& r : roots) r.value = sub(f, r.value, shift);
  return roots;
}

/// Total quartic solver for a x^4 + b x^3 + c x^2 + d x + e, a != 0.
template <class T>
std::array<LabeledRoot<T>, 4> solve_quartic(const FieldCapabilities<T>& f, const T& a, const T& b, const T& c,
                                            const T& d, const T& e) {
  const T inv_a = detail::require_nonzero_leading(f, a);
  const DepressedQuartic<T> dq =
      depress_quartic(f, f.mul(b, inv_a), f.mul(c, inv_a), f.mul(d, inv_a), f.mul(e, inv_a));
  return shift_back(f, quartic_roots_depressed_total(f, dq.c, dq.d, dq.e), dq.shift);
}

/// The two-quadratics formula with p^2 from Cardano's formula on the
/// resolvent. Requires depressed d, e != 0 and c^2 + 12e != 0.
template <class T>
std::array<LabeledRoot<T>, 4> solve_quartic_strict(const FieldCapabilities<T>& f, const T& a, const T& b, const T& c,
                                                   const T& d, const T& e) {
  require_cbrt(f);
  const T inv_a = detail::require_nonzero_leading(f, a);
  const DepressedQuartic<T> dq =
      depress_quartic(f, f.mul(b, inv_a), f.mul(c, inv_a), f.mul(d, inv_a), f.mul(e, inv_a));
  if (f.is_zero(dq.d)) throw UnsupportedCase("paper-strict: depressed quartic has d = 0");
  if (f.is_zero(dq.e)) throw UnsupportedCase("paper-strict: depressed quartic has e = 0");
  if (f.is_zero(f.add(detail::square(f, dq.c), detail::scale(f, 12, dq.e)))) {
    throw UnsupportedCase("paper-strict: c^2 + 12e = 0");
  }
  const MonicCubic<T> res = resolvent_coeffs(f, dq.c, dq.d, dq.e);
  const DepressedCubic<T> res_dep = depress_cubic(f, res.b, res.c, res.d);
  const T p_squared = sub(f, cardano_root(f, res_dep, CubeRootBranch::plain), res_dep.shift);
  const QuarticSplit<T> split = quartic_split_from_p(f, dq.c, dq.d, f.sqrt(p_squared));
  return shift_back(f, roots_of_split(f, split), dq.shift);
}

}  // namespace radica
