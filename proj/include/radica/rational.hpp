#pragma once

#include <compare>
#include <cstdint>
#include <iosfwd>
#include <optional>
#include <string>

#include <gmpxx.h>

namespace radica {

using BigInt = mpz_class;

/// Arbitrary-precision rational number kept in lowest terms.
///
/// Every value satisfies: denominator > 0, gcd(|numerator|, denominator) = 1,
/// and zero is stored as 0/1. Arithmetic is delegated to GMP, which keeps the
/// canonical form after each operation.
class BigRational {
 public:
  BigRational() = default;
  BigRational(std::int64_t n);  // NOLINT(google-explicit-constructor)
  explicit BigRational(const BigInt& n);

  /// Throws ZeroDenominator when den == 0.
  BigRational(const BigInt& num, const BigInt& den);

  /// Parses "p", "-p" or "p/q".
  static BigRational from_string(const std::string& text);

  BigInt numerator() const { return value_.get_num(); }
  BigInt denominator() const { return value_.get_den(); }

  bool is_zero() const { return sgn(value_) == 0; }
  bool is_integer() const { return value_.get_den() == 1; }
  int sign() const { return sgn(value_); }

  double to_double() const { return value_.get_d(); }
  std::string to_string() const;

  /// Exact n-th root when one exists in Q (n = 2 or 3). Negative inputs only
  /// have odd roots; the sign is carried to the result.
  std::optional<BigRational> exact_root(unsigned n) const;

  BigRational inverse() const;  // throws DivisionByZero

  BigRational& operator+=(const BigRational& o) {
    value_ += o.value_;
    return *this;
  }
  BigRational& operator-=(const BigRational& o) {
    value_ -= o.value_;
    return *this;
  }
  BigRational& operator*=(const BigRational& o) {
    value_ *= o.value_;
    return *this;
  }
  BigRational& operator/=(const BigRational& o);

  friend BigRational operator+(BigRational a, const BigRational& b) { return a += b; }
  friend BigRational operator-(BigRational a, const BigRational& b) { return a -= b; }
  friend BigRational operator*(BigRational a, const BigRational& b) { return a *= b; }
  friend BigRational operator/(BigRational a, const BigRational& b) { return a /= b; }
  BigRational operator-() const {
    BigRational r;
    r.value_ = -value_;
    return r;
  }

  friend bool operator==(const BigRational& a, const BigRational& b) { return a.value_ == b.value_; }
  friend std::strong_ordering operator<=>(const BigRational& a, const BigRational& b) {
    const int c = cmp(a.value_, b.value_);
    return c < 0 ? std::strong_ordering::less
                 : (c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal);
  }

  /// Adds a*b into *this without a temporary.
  void add_product(const BigRational& a, const BigRational& b);

  const mpq_class& raw() const { return value_; }

 private:
  mpq_class value_{0};
};

/// Builds num/den in canonical form: sign on the numerator, gcd divided out.
BigRational rat_normalize(const BigInt& num, const BigInt& den);

std::ostream& operator<<(std::ostream& os, const BigRational& q);

}  // namespace radica
