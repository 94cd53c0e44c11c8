#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "radica/field.hpp"
#include "radica/rational.hpp"

namespace radica {

enum class RadicalKind { square, cube };

/// One generator g_k of a radical tower: g_k^degree = radicand, where the
/// radicand lives in the tower made of the levels strictly below k.
struct TowerLevel {
  RadicalKind kind = RadicalKind::square;
  unsigned degree = 2;
  std::vector<BigRational> radicand;  // coordinates over the prefix tower
  ComplexD embedding;                 // numeric value chosen for g_k
};

class Tower;
using TowerHandle = std::shared_ptr<const Tower>;

/// Q(g_1)(g_2)...(g_n), append-only. Extending a tower returns a new handle
/// that shares every existing level with its parent.
///
/// Elements are stored as flat coordinate vectors of length size(); index
/// i = e_1 + deg_1 * (e_2 + deg_2 * (...)) holds the coefficient of the
/// monomial g_1^e_1 * g_2^e_2 * ..., so an element of a prefix tower is the
/// leading slice of its image in any longer tower.
class Tower {
 public:
  static const TowerHandle& rationals();

  std::size_t depth() const { return levels_.size(); }
  std::size_t size() const { return strides_.back(); }
  /// Number of coordinates of the depth-k prefix; stride(0) = 1.
  std::size_t stride(std::size_t k) const { return strides_[k]; }
  /// 1-based level access.
  const TowerLevel& level(std::size_t k) const { return *levels_[k - 1]; }

  bool is_prefix_of(const Tower& other) const;
  TowerHandle extended(TowerLevel level) const;

 private:
  Tower() = default;

  std::vector<std::shared_ptr<const TowerLevel>> levels_;
  std::vector<std::size_t> strides_{1};
};

/// An element of a radical tower in reduced normal form: the exponent of
/// each generator stays below that generator's degree.
class TowerElement {
 public:
  TowerElement();  // zero over Q
  TowerElement(TowerHandle tower, std::vector<BigRational> coefficients);

  static TowerElement rational(const BigRational& q, TowerHandle tower = Tower::rationals());
  /// The generator of the top level of `tower`.
  static TowerElement generator(const TowerHandle& tower);

  const TowerHandle& tower() const { return tower_; }
  std::span<const BigRational> coefficients() const { return coeffs_; }

  bool is_zero() const;
  /// True when every coordinate except the constant one vanishes.
  bool is_rational() const;
  const BigRational& constant_term() const { return coeffs_.front(); }

  /// Image in a tower that has this element's tower as a prefix.
  TowerElement lifted_to(const TowerHandle& target) const;

  /// Canonical text such as "(3/2) + (1/2)*g1 where g1^2 = 2".
  std::string to_string() const;

  TowerElement operator-() const;
  friend TowerElement operator+(const TowerElement& a, const TowerElement& b);
  friend TowerElement operator-(const TowerElement& a, const TowerElement& b);
  friend TowerElement operator*(const TowerElement& a, const TowerElement& b);
  friend bool operator==(const TowerElement& a, const TowerElement& b);

 private:
  TowerHandle tower_;
  std::vector<BigRational> coeffs_;
};

/// The longer of two towers; throws TowerMismatch unless one is a prefix of
/// the other.
TowerHandle common_tower(const TowerHandle& a, const TowerHandle& b);

/// Multiplicative inverse by extended Euclid against X^n - radicand at each
/// level. Throws DivisionByZero on zero and ReducibleExtension when a zero
/// divisor shows up.
TowerElement tower_inverse(const TowerElement& x);

/// Evaluates the element with every generator replaced by its embedding.
ComplexD tower_to_complex(const TowerElement& x);

/// Adjoins a square root of `a` on top of `tower`. A rational `a` that is a
/// rational square returns its nonnegative root and leaves the tower alone.
std::pair<TowerHandle, TowerElement> tower_adjoin_sqrt(const TowerHandle& tower, const TowerElement& a);

/// Adjoins a cube root of `a`; rational perfect cubes keep their sign.
std::pair<TowerHandle, TowerElement> tower_adjoin_cbrt(const TowerHandle& tower, const TowerElement& a);

/// Exact backend. Root requests extend a shared tower, and a radicand seen
/// before returns the generator adjoined for it the first time, so repeated
/// sqrt(-3) calls agree on one omega.
class TowerField {
 public:
  TowerField();

  TowerElement sqrt(const TowerElement& a);
  TowerElement cbrt(const TowerElement& a);

  /// Current top of the tower; every element produced so far lives in a
  /// prefix of it.
  TowerHandle tower() const;

  /// Capabilities bound to this backend. They share its state and stay
  /// valid after the TowerField itself is destroyed.
  FieldCapabilities<TowerElement> capabilities() const;

 private:
  struct State;
  std::shared_ptr<State> state_;
};

}  // namespace radica
