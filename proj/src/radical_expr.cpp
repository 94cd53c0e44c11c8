#include "radica/radical_expr.hpp"

#include <array>
#include <cmath>
#include <cstdio>

#include "radica/complex.hpp"
#include "radica/errors.hpp"

namespace radica {

namespace {

// Radicands that are real in exact arithmetic pick up rounding noise in the
// imaginary part; snapping keeps the branch choice independent of the order
// of evaluation.
ComplexD snap_to_real_axis(ComplexD z) {
  if (std::abs(z.imag()) <= 1e-12 * std::abs(z.real())) return {z.real(), 0.0};
  return z;
}

ComplexD principal_sqrt(ComplexD z) { return csqrt_principal(snap_to_real_axis(z)); }

ComplexD principal_cbrt(ComplexD z) { return ccbrt_principal(snap_to_real_axis(z)); }

const ComplexD kOmega{-0.5, std::sqrt(3.0) / 2.0};

ComplexD omega_to(int k) {
  switch (((k % 3) + 3) % 3) {
    case 0:
      return {1.0, 0.0};
    case 1:
      return kOmega;
    default:
      return std::conj(kOmega);
  }
}

bool is_rational_literal(const ExprPtr& e, int value) {
  return e->kind() == ExprKind::rational && e->rational_value() == BigRational(value);
}

ComplexD literal_value(const RadicalExpr& e) {
  return e.kind() == ExprKind::rational ? ComplexD{e.rational_value().to_double(), 0.0} : e.number_value();
}

// Binding strength used to decide where parentheses go.
enum Prec { kSum = 1, kNeg = 2, kProd = 3, kAtom = 5 };

std::string format_double(double x) {
  std::array<char, 32> buf{};
  std::snprintf(buf.data(), buf.size(), "%.17g", x);
  return buf.data();
}

int precedence(const RadicalExpr& e) {
  switch (e.kind()) {
    case ExprKind::rational: {
      const BigRational& q = e.rational_value();
      if (q.sign() < 0) return kSum;
      return q.is_integer() ? kAtom : kProd;
    }
    case ExprKind::number: {
      const ComplexD z = e.number_value();
      if (z.imag() != 0.0) return z.real() != 0.0 ? kSum : (z.imag() < 0 ? kSum : kProd);
      return z.real() < 0 ? kSum : kAtom;
    }
    case ExprKind::add:
      return kSum;
    case ExprKind::neg:
      return kNeg;
    case ExprKind::mul:
    case ExprKind::inv:
      return kProd;
    case ExprKind::sqrt:
    case ExprKind::cbrt:
    case ExprKind::omega_power:
      return kAtom;
  }
  return kAtom;
}

std::string raw(const RadicalExpr& e);

std::string wrap(const RadicalExpr& e, int min_prec) {
  std::string s = raw(e);
  return precedence(e) < min_prec ? "(" + s + ")" : s;
}

std::string number_text(ComplexD z) {
  if (z.imag() == 0.0) return format_double(z.real());
  std::string imag = format_double(std::abs(z.imag())) + "*i";
  if (z.real() == 0.0) return z.imag() < 0 ? "-" + imag : imag;
  return format_double(z.real()) + (z.imag() < 0 ? " - " : " + ") + imag;
}

std::string raw(const RadicalExpr& e) {
  const auto& a = e.args();
  switch (e.kind()) {
    case ExprKind::rational:
      return e.rational_value().to_string();
    case ExprKind::number:
      return number_text(e.number_value());
    case ExprKind::add: {
      const RadicalExpr& rhs = *a[1];
      std::string left = wrap(*a[0], kSum);
      if (rhs.kind() == ExprKind::neg) return left + " - " + wrap(*rhs.args()[0], kProd);
      if (rhs.kind() == ExprKind::rational && rhs.rational_value().sign() < 0) {
        return left + " - " + wrap(*RadicalExpr::rational(-rhs.rational_value()), kProd);
      }
      if (rhs.kind() == ExprKind::number && rhs.number_value().imag() == 0.0 && rhs.number_value().real() < 0) {
        return left + " - " + format_double(-rhs.number_value().real());
      }
      return left + " + " + wrap(rhs, kProd);
    }
    case ExprKind::neg:
      return "-" + wrap(*a[0], kProd);
    case ExprKind::mul: {
      const RadicalExpr& rhs = *a[1];
      std::string left = wrap(*a[0], kProd);
      if (rhs.kind() == ExprKind::inv) return left + "/" + wrap(*rhs.args()[0], kAtom);
      if (rhs.kind() == ExprKind::rational && rhs.rational_value().sign() > 0 &&
          rhs.rational_value().numerator() == 1 && !rhs.rational_value().is_integer()) {
        return left + "/" + rhs.rational_value().denominator().get_str();
      }
      return left + "*" + wrap(rhs, kProd);
    }
    case ExprKind::inv:
      return "1/" + wrap(*a[0], kAtom);
    case ExprKind::sqrt:
      return "sqrt(" + raw(*a[0]) + ")";
    case ExprKind::cbrt:
      return "cbrt(" + raw(*a[0]) + ")";
    case ExprKind::omega_power:
      return e.power() == 1 ? "omega" : "omega^" + std::to_string(e.power());
  }
  return {};
}

}  // namespace

ExprPtr RadicalExpr::rational(const BigRational& q) {
  std::shared_ptr<RadicalExpr> e{new RadicalExpr()};
  e->kind_ = ExprKind::rational;
  e->rational_ = q;
  e->value_ = {q.to_double(), 0.0};
  return e;
}

ExprPtr RadicalExpr::number(ComplexD z) {
  std::shared_ptr<RadicalExpr> e{new RadicalExpr()};
  e->kind_ = ExprKind::number;
  e->number_ = z;
  e->value_ = z;
  return e;
}

ExprPtr RadicalExpr::add(const ExprPtr& a, const ExprPtr& b) {
  if (a->kind_ == ExprKind::rational && b->kind_ == ExprKind::rational) return rational(a->rational_ + b->rational_);
  if (a->is_literal() && b->is_literal()) return number(literal_value(*a) + literal_value(*b));
  if (is_rational_literal(a, 0)) return b;
  if (is_rational_literal(b, 0)) return a;
  return make_node(ExprKind::add, {a, b}, a->value_ + b->value_);
}

ExprPtr RadicalExpr::neg(const ExprPtr& a) {
  if (a->kind_ == ExprKind::rational) return rational(-a->rational_);
  if (a->kind_ == ExprKind::number) return number(-a->number_);
  if (a->kind_ == ExprKind::neg) return a->args_[0];
  return make_node(ExprKind::neg, {a}, -a->value_);
}

ExprPtr RadicalExpr::mul(const ExprPtr& a, const ExprPtr& b) {
  if (a->kind_ == ExprKind::rational && b->kind_ == ExprKind::rational) return rational(a->rational_ * b->rational_);
  if (a->is_literal() && b->is_literal()) return number(literal_value(*a) * literal_value(*b));
  if (is_rational_literal(a, 0) || is_rational_literal(b, 0)) return rational(0);
  if (is_rational_literal(a, 1)) return b;
  if (is_rational_literal(b, 1)) return a;
  if (a->kind_ == ExprKind::omega_power && b->kind_ == ExprKind::omega_power) {
    return omega_power(a->power_ + b->power_);
  }
  return make_node(ExprKind::mul, {a, b}, a->value_ * b->value_);
}

ExprPtr RadicalExpr::inv(const ExprPtr& a) {
  if (a->kind_ == ExprKind::rational) return rational(a->rational_.inverse());
  if (a->kind_ == ExprKind::number) {
    if (a->number_ == ComplexD{}) throw DivisionByZero();
    return number(1.0 / a->number_);
  }
  if (a->kind_ == ExprKind::inv) return a->args_[0];
  return make_node(ExprKind::inv, {a}, 1.0 / a->value_);
}

ExprPtr RadicalExpr::sqrt(const ExprPtr& a) { return make_node(ExprKind::sqrt, {a}, principal_sqrt(a->value_)); }

ExprPtr RadicalExpr::cbrt(const ExprPtr& a) { return make_node(ExprKind::cbrt, {a}, principal_cbrt(a->value_)); }

ExprPtr RadicalExpr::omega_power(int k) {
  k = ((k % 3) + 3) % 3;
  if (k == 0) return rational(1);
  std::shared_ptr<RadicalExpr> e{new RadicalExpr()};
  e->kind_ = ExprKind::omega_power;
  e->power_ = k;
  e->value_ = omega_to(k);
  return e;
}

ExprPtr RadicalExpr::make_node(ExprKind kind, std::vector<ExprPtr> args, ComplexD value) {
  std::shared_ptr<RadicalExpr> e{new RadicalExpr()};
  e->kind_ = kind;
  e->args_ = std::move(args);
  e->value_ = value;
  return e;
}

ComplexD evaluate(const RadicalExpr& e) {
  const auto& a = e.args();
  switch (e.kind()) {
    case ExprKind::rational:
      return {e.rational_value().to_double(), 0.0};
    case ExprKind::number:
      return e.number_value();
    case ExprKind::add:
      return evaluate(*a[0]) + evaluate(*a[1]);
    case ExprKind::neg:
      return -evaluate(*a[0]);
    case ExprKind::mul:
      return evaluate(*a[0]) * evaluate(*a[1]);
    case ExprKind::inv:
      return 1.0 / evaluate(*a[0]);
    case ExprKind::sqrt:
      return principal_sqrt(evaluate(*a[0]));
    case ExprKind::cbrt:
      return principal_cbrt(evaluate(*a[0]));
    case ExprKind::omega_power:
      return omega_to(e.power());
  }
  return {};
}

std::string render(const RadicalExpr& e) { return raw(e); }

int nearest_cube_root_branch(ComplexD principal, ComplexD actual) {
  int best = 0;
  double best_distance = std::abs(actual - principal);
  for (int k = 1; k < 3; ++k) {
    const double d = std::abs(actual - omega_to(k) * principal);
    if (d < best_distance) {
      best = k;
      best_distance = d;
    }
  }
  return best;
}

}  // namespace radica
