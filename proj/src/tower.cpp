#include "radica/tower.hpp"

#include <algorithm>
#include <sstream>

#include "radica/complex.hpp"
#include "radica/errors.hpp"

namespace radica {

namespace {

using Coeffs = std::vector<BigRational>;
using ConstView = std::span<const BigRational>;
using View = std::span<BigRational>;

bool all_zero(ConstView v) {
  return std::all_of(v.begin(), v.end(), [](const BigRational& q) { return q.is_zero(); });
}

void add_into(View acc, ConstView v) {
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (!v[i].is_zero()) acc[i] += v[i];
  }
}

// out = a * b over the depth-k prefix of `t`. `out` must not alias a or b.
void mul_at(const Tower& t, std::size_t k, ConstView a, ConstView b, View out) {
  if (k == 0) {
    out[0] = a[0] * b[0];
    return;
  }
  const TowerLevel& level = t.level(k);
  const std::size_t n = level.degree;
  const std::size_t w = t.stride(k - 1);
  auto block = [w](auto span, std::size_t j) { return span.subspan(j * w, w); };

  Coeffs prod((2 * n - 1) * w);
  Coeffs scratch(w);
  std::vector<bool> a_nz(n), b_nz(n);
  for (std::size_t j = 0; j < n; ++j) {
    a_nz[j] = !all_zero(block(a, j));
    b_nz[j] = !all_zero(block(b, j));
  }
  for (std::size_t i = 0; i < n; ++i) {
    if (!a_nz[i]) continue;
    for (std::size_t j = 0; j < n; ++j) {
      if (!b_nz[j]) continue;
      mul_at(t, k - 1, block(a, i), block(b, j), scratch);
      add_into(View(prod).subspan((i + j) * w, w), scratch);
    }
  }
  // g^j = g^(j-n) * radicand for j >= n.
  const ConstView radicand = level.radicand;
  for (std::size_t j = 2 * n - 2; j >= n; --j) {
    const ConstView high = ConstView(prod).subspan(j * w, w);
    if (all_zero(high)) continue;
    mul_at(t, k - 1, high, radicand, scratch);
    add_into(View(prod).subspan((j - n) * w, w), scratch);
  }
  std::copy(prod.begin(), prod.begin() + static_cast<std::ptrdiff_t>(n * w), out.begin());
}

Coeffs mul_at(const Tower& t, std::size_t k, ConstView a, ConstView b) {
  Coeffs out(t.stride(k));
  mul_at(t, k, a, b, out);
  return out;
}

std::string coefficient_text(const BigRational& q) {
  std::string s = q.to_string();
  if (!q.is_integer() || q.sign() < 0) s = "(" + s + ")";
  return s;
}

// Polynomial text of a depth-k coordinate vector, without the where-clause.
std::string body_text(const Tower& t, std::size_t k, ConstView c) {
  std::vector<std::string> terms;
  for (std::size_t i = 0; i < t.stride(k); ++i) {
    if (c[i].is_zero()) continue;
    std::string monomial;
    std::size_t rest = i;
    for (std::size_t level = 1; level <= k; ++level) {
      const unsigned deg = t.level(level).degree;
      const std::size_t e = rest % deg;
      rest /= deg;
      if (e == 0) continue;
      if (!monomial.empty()) monomial += "*";
      monomial += "g" + std::to_string(level);
      if (e > 1) monomial += "^" + std::to_string(e);
    }
    if (monomial.empty()) {
      terms.push_back(coefficient_text(c[i]));
    } else if (c[i] == BigRational(1)) {
      terms.push_back(monomial);
    } else {
      terms.push_back(coefficient_text(c[i]) + "*" + monomial);
    }
  }
  if (terms.empty()) return "0";
  std::string out = terms.front();
  for (std::size_t i = 1; i < terms.size(); ++i) out += " + " + terms[i];
  return out;
}

ComplexD eval_at(const Tower& t, std::size_t k, ConstView c) {
  if (k == 0) return {c[0].to_double(), 0.0};
  const TowerLevel& level = t.level(k);
  const std::size_t w = t.stride(k - 1);
  ComplexD acc{};
  for (std::size_t j = level.degree; j-- > 0;) {
    acc = acc * level.embedding + eval_at(t, k - 1, c.subspan(j * w, w));
  }
  return acc;
}

// Dense polynomial in the level-k generator with depth-(k-1) coefficients,
// lowest degree first, trimmed so the last entry is nonzero.
using Poly = std::vector<Coeffs>;

void trim(Poly& p) {
  while (!p.empty() && all_zero(p.back())) p.pop_back();
}

Coeffs inverse_at(const Tower& t, std::size_t k, ConstView a);

Coeffs sub_blocks(ConstView a, ConstView b) {
  Coeffs out(a.begin(), a.end());
  for (std::size_t i = 0; i < b.size(); ++i) {
    if (!b[i].is_zero()) out[i] -= b[i];
  }
  return out;
}

// (quotient, remainder) of num / den over the depth-(k-1) prefix.
std::pair<Poly, Poly> divmod(const Tower& t, std::size_t k, Poly num, const Poly& den) {
  const std::size_t lower = k - 1;
  const std::size_t w = t.stride(lower);
  const Coeffs lead_inv = inverse_at(t, lower, den.back());
  Poly quotient(num.size() >= den.size() ? num.size() - den.size() + 1 : 0, Coeffs(w));
  trim(num);
  while (!num.empty() && num.size() >= den.size()) {
    const std::size_t shift = num.size() - den.size();
    const Coeffs factor = mul_at(t, lower, num.back(), lead_inv);
    quotient[shift] = factor;
    for (std::size_t i = 0; i < den.size(); ++i) {
      num[i + shift] = sub_blocks(num[i + shift], mul_at(t, lower, factor, den[i]));
    }
    num.back().assign(w, BigRational());
    trim(num);
  }
  return {quotient, num};
}

Poly poly_mul(const Tower& t, std::size_t lower, const Poly& a, const Poly& b) {
  if (a.empty() || b.empty()) return {};
  const std::size_t w = t.stride(lower);
  Poly out(a.size() + b.size() - 1, Coeffs(w));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) {
      add_into(out[i + j], mul_at(t, lower, a[i], b[j]));
    }
  }
  return out;
}

Poly poly_sub(std::size_t w, const Poly& a, const Poly& b) {
  Poly out(std::max(a.size(), b.size()), Coeffs(w));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] = sub_blocks(out[i], b[i]);
  trim(out);
  return out;
}

std::string factor_text(const Tower& t, std::size_t k, const Poly& monic) {
  std::string out;
  for (std::size_t j = monic.size(); j-- > 0;) {
    if (all_zero(monic[j])) continue;
    std::string coef = body_text(t, k - 1, monic[j]);
    std::string power = j == 0 ? "" : (j == 1 ? "X" : "X^" + std::to_string(j));
    std::string term;
    if (j == 0) {
      term = "(" + coef + ")";
    } else if (coef == "1") {
      term = power;
    } else {
      term = "(" + coef + ")*" + power;
    }
    out += out.empty() ? term : " + " + term;
  }
  return out;
}

Coeffs inverse_at(const Tower& t, std::size_t k, ConstView a) {
  if (k == 0) return {a[0].inverse()};
  const TowerLevel& level = t.level(k);
  const std::size_t n = level.degree;
  const std::size_t lower = k - 1;
  const std::size_t w = t.stride(lower);

  Poly x;
  for (std::size_t j = 0; j < n; ++j) x.emplace_back(a.begin() + j * w, a.begin() + (j + 1) * w);
  trim(x);
  if (x.empty()) throw DivisionByZero();

  Coeffs result(n * w);
  if (x.size() == 1) {
    const Coeffs inv = inverse_at(t, lower, x[0]);
    std::copy(inv.begin(), inv.end(), result.begin());
    return result;
  }

  // Defining polynomial X^n - radicand.
  Poly modulus(n + 1, Coeffs(w));
  modulus[0] = sub_blocks(Coeffs(w), level.radicand);
  modulus[n][0] = BigRational(1);

  // Invariant: t_cur * x == r_cur modulo the defining polynomial.
  Poly r_prev = modulus;
  Poly r_cur = x;
  Poly t_prev;
  Poly t_cur{Coeffs(w)};
  t_cur[0][0] = BigRational(1);
  while (r_cur.size() > 1) {
    auto [quotient, remainder] = divmod(t, k, r_prev, r_cur);
    if (remainder.empty()) {
      // r_cur is a common factor of positive degree.
      const Coeffs lead_inv = inverse_at(t, lower, r_cur.back());
      Poly monic;
      for (const Coeffs& c : r_cur) monic.push_back(mul_at(t, lower, c, lead_inv));
      throw ReducibleExtension(k, factor_text(t, k, monic));
    }
    Poly t_next = poly_sub(w, t_prev, poly_mul(t, lower, quotient, t_cur));
    r_prev = std::move(r_cur);
    r_cur = std::move(remainder);
    t_prev = std::move(t_cur);
    t_cur = std::move(t_next);
  }
  const Coeffs scale = inverse_at(t, lower, r_cur[0]);
  for (std::size_t j = 0; j < t_cur.size() && j < n; ++j) {
    const Coeffs c = mul_at(t, lower, t_cur[j], scale);
    std::copy(c.begin(), c.end(), result.begin() + static_cast<std::ptrdiff_t>(j * w));
  }
  return result;
}

std::pair<TowerHandle, TowerElement> adjoin(const TowerHandle& tower, const TowerElement& a, RadicalKind kind) {
  const unsigned degree = kind == RadicalKind::square ? 2 : 3;
  TowerElement radicand = a.lifted_to(tower);
  if (radicand.is_rational()) {
    if (auto root = radicand.constant_term().exact_root(degree)) {
      return {tower, TowerElement::rational(*root, tower)};
    }
  }
  const ComplexD approx = tower_to_complex(radicand);
  TowerLevel level;
  level.kind = kind;
  level.degree = degree;
  level.radicand.assign(radicand.coefficients().begin(), radicand.coefficients().end());
  level.embedding = kind == RadicalKind::square ? csqrt_principal(approx) : ccbrt_principal(approx);
  TowerHandle extended = tower->extended(std::move(level));
  return {extended, TowerElement::generator(extended)};
}

}  // namespace

const TowerHandle& Tower::rationals() {
  static const TowerHandle base{new Tower()};
  return base;
}

bool Tower::is_prefix_of(const Tower& other) const {
  if (levels_.size() > other.levels_.size()) return false;
  return std::equal(levels_.begin(), levels_.end(), other.levels_.begin());
}

TowerHandle Tower::extended(TowerLevel level) const {
  std::shared_ptr<Tower> t{new Tower(*this)};
  t->strides_.push_back(size() * level.degree);
  t->levels_.push_back(std::make_shared<const TowerLevel>(std::move(level)));
  return t;
}

TowerHandle common_tower(const TowerHandle& a, const TowerHandle& b) {
  if (a == b || a->is_prefix_of(*b)) return b;
  if (b->is_prefix_of(*a)) return a;
  throw TowerMismatch();
}

TowerElement::TowerElement() : tower_(Tower::rationals()), coeffs_(1) {}

TowerElement::TowerElement(TowerHandle tower, std::vector<BigRational> coefficients)
    : tower_(std::move(tower)), coeffs_(std::move(coefficients)) {
  if (coeffs_.size() != tower_->size()) throw Error("tower element has the wrong number of coordinates");
}

TowerElement TowerElement::rational(const BigRational& q, TowerHandle tower) {
  std::vector<BigRational> c(tower->size());
  c[0] = q;
  return {std::move(tower), std::move(c)};
}

TowerElement TowerElement::generator(const TowerHandle& tower) {
  if (tower->depth() == 0) throw Error("the rational tower has no generator");
  std::vector<BigRational> c(tower->size());
  c[tower->stride(tower->depth() - 1)] = BigRational(1);
  return {tower, std::move(c)};
}

bool TowerElement::is_zero() const { return all_zero(coeffs_); }

bool TowerElement::is_rational() const { return all_zero(ConstView(coeffs_).subspan(1)); }

TowerElement TowerElement::lifted_to(const TowerHandle& target) const {
  if (target == tower_) return *this;
  if (!tower_->is_prefix_of(*target)) throw TowerMismatch();
  std::vector<BigRational> c(target->size());
  std::copy(coeffs_.begin(), coeffs_.end(), c.begin());
  return {target, std::move(c)};
}

std::string TowerElement::to_string() const {
  std::string out = body_text(*tower_, tower_->depth(), coeffs_);
  for (std::size_t k = 1; k <= tower_->depth(); ++k) {
    const TowerLevel& level = tower_->level(k);
    out += k == 1 ? " where " : ", ";
    out += "g" + std::to_string(k) + "^" + std::to_string(level.degree) + " = " +
           body_text(*tower_, k - 1, level.radicand);
  }
  return out;
}

TowerElement TowerElement::operator-() const {
  TowerElement r = *this;
  for (BigRational& q : r.coeffs_) {
    if (!q.is_zero()) q = -q;
  }
  return r;
}

TowerElement operator+(const TowerElement& a, const TowerElement& b) {
  const TowerHandle t = common_tower(a.tower_, b.tower_);
  TowerElement r = a.lifted_to(t);
  add_into(r.coeffs_, b.coeffs_);
  return r;
}

TowerElement operator-(const TowerElement& a, const TowerElement& b) { return a + (-b); }

TowerElement operator*(const TowerElement& a, const TowerElement& b) {
  const TowerHandle t = common_tower(a.tower_, b.tower_);
  const TowerElement x = a.lifted_to(t);
  const TowerElement y = b.lifted_to(t);
  return {t, mul_at(*t, t->depth(), x.coeffs_, y.coeffs_)};
}

bool operator==(const TowerElement& a, const TowerElement& b) {
  const TowerHandle t = common_tower(a.tower_, b.tower_);
  const TowerElement x = a.lifted_to(t);
  const TowerElement y = b.lifted_to(t);
  return x.coeffs_ == y.coeffs_;
}

TowerElement tower_inverse(const TowerElement& x) {
  const Tower& t = *x.tower();
  return {x.tower(), inverse_at(t, t.depth(), x.coefficients())};
}

ComplexD tower_to_complex(const TowerElement& x) {
  const Tower& t = *x.tower();
  return eval_at(t, t.depth(), x.coefficients());
}

std::pair<TowerHandle, TowerElement> tower_adjoin_sqrt(const TowerHandle& tower, const TowerElement& a) {
  return adjoin(tower, a, RadicalKind::square);
}

std::pair<TowerHandle, TowerElement> tower_adjoin_cbrt(const TowerHandle& tower, const TowerElement& a) {
  return adjoin(tower, a, RadicalKind::cube);
}

struct TowerField::State {
  struct Adjoined {
    RadicalKind kind;
    TowerElement radicand;
    TowerElement root;
  };

  TowerHandle current = Tower::rationals();
  std::vector<Adjoined> seen;

  TowerElement root(const TowerElement& a, RadicalKind kind) {
    current = common_tower(current, a.tower());
    for (const Adjoined& entry : seen) {
      if (entry.kind == kind && entry.radicand == a) return entry.root;
    }
    auto [tower, root] = adjoin(current, a, kind);
    current = tower;
    seen.push_back({kind, a, root});
    return root;
  }
};

TowerField::TowerField() : state_(std::make_shared<State>()) {}

TowerElement TowerField::sqrt(const TowerElement& a) { return state_->root(a, RadicalKind::square); }

TowerElement TowerField::cbrt(const TowerElement& a) { return state_->root(a, RadicalKind::cube); }

TowerHandle TowerField::tower() const { return state_->current; }

FieldCapabilities<TowerElement> TowerField::capabilities() const {
  FieldCapabilities<TowerElement> caps;
  caps.zero = TowerElement::rational(0);
  caps.one = TowerElement::rational(1);
  caps.add = [](const TowerElement& a, const TowerElement& b) { return a + b; };
  caps.neg = [](const TowerElement& a) { return -a; };
  caps.mul = [](const TowerElement& a, const TowerElement& b) { return a * b; };
  caps.inverse = tower_inverse;
  caps.is_zero = [](const TowerElement& a) { return a.is_zero(); };
  std::shared_ptr<State> state = state_;
  caps.sqrt = [state](const TowerElement& a) { return state->root(a, RadicalKind::square); };
  caps.cbrt = [state](const TowerElement& a) { return state->root(a, RadicalKind::cube); };
  caps.embed = tower_to_complex;
  caps.two_nonzero = true;
  caps.three_nonzero = true;
  return caps;
}

}  // namespace radica
