#include "radica/rational.hpp"

#include <ostream>

#include "radica/errors.hpp"

namespace radica {

static_assert(sizeof(long) == sizeof(std::int64_t), "LP64 platform expected");

BigRational::BigRational(std::int64_t n) : value_(static_cast<long>(n)) {}

BigRational::BigRational(const BigInt& n) : value_(n) {}

BigRational::BigRational(const BigInt& num, const BigInt& den) {
  if (den == 0) throw ZeroDenominator();
  value_ = mpq_class(num, den);
  value_.canonicalize();
}

BigRational BigRational::from_string(const std::string& text) {
  const auto slash = text.find('/');
  if (slash == std::string::npos) return BigRational(BigInt(text, 10));
  return BigRational(BigInt(text.substr(0, slash), 10), BigInt(text.substr(slash + 1), 10));
}

std::string BigRational::to_string() const { return value_.get_str(); }

std::optional<BigRational> BigRational::exact_root(unsigned n) const {
  const BigInt num = value_.get_num();
  const BigInt den = value_.get_den();
  if (num < 0 && n % 2 == 0) return std::nullopt;
  BigInt abs_num = abs(num);
  BigInt num_root, den_root;
  if (mpz_root(num_root.get_mpz_t(), abs_num.get_mpz_t(), n) == 0) return std::nullopt;
  if (mpz_root(den_root.get_mpz_t(), den.get_mpz_t(), n) == 0) return std::nullopt;
  if (num < 0) num_root = -num_root;
  return BigRational(num_root, den_root);
}

BigRational BigRational::inverse() const {
  if (is_zero()) throw DivisionByZero();
  BigRational r;
  mpq_inv(r.value_.get_mpq_t(), value_.get_mpq_t());
  return r;
}

BigRational& BigRational::operator/=(const BigRational& o) {
  if (o.is_zero()) throw DivisionByZero();
  value_ /= o.value_;
  return *this;
}

void BigRational::add_product(const BigRational& a, const BigRational& b) {
  if (a.is_zero() || b.is_zero()) return;
  mpq_class t;
  mpq_mul(t.get_mpq_t(), a.value_.get_mpq_t(), b.value_.get_mpq_t());
  mpq_add(value_.get_mpq_t(), value_.get_mpq_t(), t.get_mpq_t());
}

BigRational rat_normalize(const BigInt& num, const BigInt& den) { return BigRational(num, den); }

std::ostream& operator<<(std::ostream& os, const BigRational& q) { return os << q.to_string(); }

}  // namespace radica
