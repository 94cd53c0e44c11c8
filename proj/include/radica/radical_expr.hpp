#pragma once

#include <memory>
#include <string>
#include <vector>

#include "radica/field.hpp"
#include "radica/rational.hpp"

namespace radica {

enum class ExprKind { rational, number, add, neg, mul, inv, sqrt, cbrt, omega_power };

class RadicalExpr;
using ExprPtr = std::shared_ptr<const RadicalExpr>;

/// Immutable expression tree for a root written with radicals.
///
/// Builders fold arithmetic on literals, so radical-free subexpressions
/// collapse to a single rational (or complex `number`) literal while sqrt and
/// cbrt nodes are always kept. Each node caches its value computed with
/// principal branches: sqrt has nonnegative real part, cbrt has argument in
/// (-pi/3, pi/3], and omega = (-1 + i*sqrt(3))/2.
/// Radicands within 1e-12 relative of the real axis count as real.
class RadicalExpr {
 public:
  static ExprPtr rational(const BigRational& q);
  static ExprPtr number(ComplexD z);
  static ExprPtr add(const ExprPtr& a, const ExprPtr& b);
  static ExprPtr neg(const ExprPtr& a);
  static ExprPtr mul(const ExprPtr& a, const ExprPtr& b);
  static ExprPtr inv(const ExprPtr& a);
  static ExprPtr sqrt(const ExprPtr& a);
  static ExprPtr cbrt(const ExprPtr& a);
  static ExprPtr omega_power(int k);

  ExprKind kind() const { return kind_; }
  const BigRational& rational_value() const { return rational_; }
  ComplexD number_value() const { return number_; }
  int power() const { return power_; }
  const std::vector<ExprPtr>& args() const { return args_; }

  /// Principal-branch value, cached at construction.
  ComplexD value() const { return value_; }

  bool is_literal() const { return kind_ == ExprKind::rational || kind_ == ExprKind::number; }

 private:
  RadicalExpr() = default;
  static ExprPtr make_node(ExprKind kind, std::vector<ExprPtr> args, ComplexD value);

  ExprKind kind_ = ExprKind::rational;
  BigRational rational_;
  ComplexD number_;
  int power_ = 0;
  std::vector<ExprPtr> args_;
  ComplexD value_;
};

/// Recomputes the principal-branch value from the leaves.
ComplexD evaluate(const RadicalExpr& e);

/// Fully parenthesis-unambiguous text, e.g.
/// "cbrt(9/2 + sqrt(49/4)) - (-6)/(3*cbrt(9/2 + sqrt(49/4)))".
std::string render(const RadicalExpr& e);

/// A field value paired with the radical expression that produced it.
template <class T>
struct Traced {
  T value{};
  ExprPtr expr;
};

/// Wraps `base` so that every result also records its radical expression.
///
/// When the base backend's root differs from the principal value of the
/// recorded expression (a negative rational perfect cube, or an unusual
/// provider), the expression gains an explicit sign or omega^k factor, so
/// principal evaluation of the tree always matches base.embed(value).
template <class T>
FieldCapabilities<Traced<T>> traced(const FieldCapabilities<T>& base);

template <class T>
Traced<T> trace_literal(const T& value, const BigRational& q) {
  return {value, RadicalExpr::rational(q)};
}

template <class T>
Traced<T> trace_literal(const T& value, ComplexD z) {
  return {value, RadicalExpr::number(z)};
}

/// Index k in {0, 1, 2} such that omega^k * principal is nearest to actual.
int nearest_cube_root_branch(ComplexD principal, ComplexD actual);

template <class T>
FieldCapabilities<Traced<T>> traced(const FieldCapabilities<T>& base) {
  using V = Traced<T>;
  FieldCapabilities<V> f;
  f.zero = {base.zero, RadicalExpr::rational(0)};
  f.one = {base.one, RadicalExpr::rational(1)};
  f.add = [base](const V& a, const V& b) { return V{base.add(a.value, b.value), RadicalExpr::add(a.expr, b.expr)}; };
  f.neg = [base](const V& a) { return V{base.neg(a.value), RadicalExpr::neg(a.expr)}; };
  f.mul = [base](const V& a, const V& b) { return V{base.mul(a.value, b.value), RadicalExpr::mul(a.expr, b.expr)}; };
  f.inverse = [base](const V& a) { return V{base.inverse(a.value), RadicalExpr::inv(a.expr)}; };
  f.is_zero = [base](const V& a) { return base.is_zero(a.value); };
  f.two_nonzero = base.two_nonzero;
  f.three_nonzero = base.three_nonzero;
  if (base.embed) f.embed = [base](const V& a) { return base.embed(a.value); };
  if (base.sqrt) {
    f.sqrt = [base](const V& a) {
      V r{base.sqrt(a.value), RadicalExpr::sqrt(a.expr)};
      if (base.embed) {
        const ComplexD actual = base.embed(r.value);
        if (std::abs(actual + r.expr->value()) < std::abs(actual - r.expr->value())) {
          r.expr = RadicalExpr::neg(r.expr);
        }
      }
      return r;
    };
    f.omega = [base] {
      const T w = omega(base);
      int k = 1;
      if (base.embed) k = nearest_cube_root_branch(ComplexD{1.0, 0.0}, base.embed(w));
      return V{w, RadicalExpr::omega_power(k)};
    };
  }
  if (base.cbrt) {
    f.cbrt = [base](const V& a) {
      V r{base.cbrt(a.value), RadicalExpr::cbrt(a.expr)};
      if (base.embed) {
        const int k = nearest_cube_root_branch(r.expr->value(), base.embed(r.value));
        if (k != 0) r.expr = RadicalExpr::mul(RadicalExpr::omega_power(k), r.expr);
      }
      return r;
    };
  }
  return f;
}

}  // namespace radica
