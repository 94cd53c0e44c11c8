#include "radica/polynomial_input.hpp"

#include <cctype>
#include <limits>
#include <optional>

#include "radica/errors.hpp"

namespace radica {

namespace {

constexpr unsigned kMaxExponent = 1U << 16;

class Parser {
 public:
  explicit Parser(const std::string& text) : text_(text) {}

  PolynomialInput parse() {
    PolynomialInput out;
    out.source = text_;
    skip_space();
    if (at_end()) throw ParseError("empty polynomial", pos_);
    bool first = true;
    while (!at_end()) {
      bool negative = false;
      if (peek() == '+' || peek() == '-') {
        negative = peek() == '-';
        ++pos_;
        skip_space();
      } else if (!first) {
        throw ParseError("expected '+' or '-'", pos_);
      }
      first = false;
      parse_term(out, negative);
      skip_space();
    }
    for (auto it = out.coefficients.begin(); it != out.coefficients.end();) {
      it = it->second.is_zero() ? out.coefficients.erase(it) : std::next(it);
    }
    return out;
  }

 private:
  bool at_end() const { return pos_ >= text_.size(); }
  char peek() const { return at_end() ? '\0' : text_[pos_]; }

  void skip_space() {
    while (!at_end() && std::isspace(static_cast<unsigned char>(peek()))) ++pos_;
  }

  // 'e' starts a decimal exponent only when digits follow; otherwise it may
  // be the variable, as in "2e".
  bool exponent_follows() const {
    if (peek() != 'e' && peek() != 'E') return false;
    std::size_t i = pos_ + 1;
    if (i < text_.size() && (text_[i] == '+' || text_[i] == '-')) ++i;
    return i < text_.size() && std::isdigit(static_cast<unsigned char>(text_[i]));
  }

  std::string digits() {
    const std::size_t start = pos_;
    while (!at_end() && std::isdigit(static_cast<unsigned char>(peek()))) ++pos_;
    return text_.substr(start, pos_ - start);
  }

  // integer, integer/integer, or decimal with optional exponent
  std::optional<BigRational> coefficient(PolynomialInput& out) {
    if (!std::isdigit(static_cast<unsigned char>(peek())) && peek() != '.') return std::nullopt;
    const std::size_t start = pos_;
    std::string whole = digits();
    if (peek() == '.' || exponent_follows()) {
      std::string frac;
      if (peek() == '.') {
        ++pos_;
        frac = digits();
      }
      if (whole.empty() && frac.empty()) throw ParseError("malformed number", start);
      long exponent = 0;
      if (exponent_follows()) {
        const std::size_t mark = pos_;
        ++pos_;
        bool neg_exp = false;
        if (peek() == '+' || peek() == '-') {
          neg_exp = peek() == '-';
          ++pos_;
        }
        const std::string exp_digits = digits();
        if (exp_digits.size() > 4) throw ParseError("exponent overflow", mark);
        exponent = std::stol(exp_digits) * (neg_exp ? -1 : 1);
      }
      out.has_decimal = true;
      BigInt num(whole + frac, 10);
      BigInt den = 1;
      mpz_ui_pow_ui(den.get_mpz_t(), 10, frac.size());
      BigInt scale = 1;
      mpz_ui_pow_ui(scale.get_mpz_t(), 10, static_cast<unsigned long>(exponent < 0 ? -exponent : exponent));
      if (exponent >= 0) {
        num *= scale;
      } else {
        den *= scale;
      }
      return BigRational(num, den);
    }
    if (peek() == '/') {
      const std::size_t slash = pos_;
      ++pos_;
      skip_space();
      const std::string den = digits();
      if (den.empty()) throw ParseError("expected denominator", pos_);
      if (BigInt(den, 10) == 0) throw ParseError("zero denominator", slash);
      return BigRational(BigInt(whole, 10), BigInt(den, 10));
    }
    return BigRational(BigInt(whole, 10));
  }

  void parse_term(PolynomialInput& out, bool negative) {
    const std::size_t term_start = pos_;
    std::optional<BigRational> coef = coefficient(out);
    skip_space();
    bool star = false;
    if (coef && peek() == '*') {
      star = true;
      ++pos_;
      skip_space();
    }
    unsigned exponent = 0;
    if (std::isalpha(static_cast<unsigned char>(peek())) || peek() == '_') {
      const std::size_t var_start = pos_;
      while (!at_end() && (std::isalnum(static_cast<unsigned char>(peek())) || peek() == '_')) ++pos_;
      const std::string name = text_.substr(var_start, pos_ - var_start);
      if (out.variable.empty()) {
        out.variable = name;
      } else if (out.variable != name) {
        throw ParseError("inconsistent variable '" + name + "', expected '" + out.variable + "'", var_start);
      }
      exponent = 1;
      skip_space();
      if (peek() == '^') {
        ++pos_;
        skip_space();
        const std::size_t exp_start = pos_;
        const std::string e = digits();
        if (e.empty()) throw ParseError("expected exponent", pos_);
        if (e.size() > 9 || std::stoul(e) > kMaxExponent) throw ParseError("exponent overflow", exp_start);
        exponent = static_cast<unsigned>(std::stoul(e));
      }
    } else if (!coef) {
      throw ParseError(at_end() ? "unexpected end of input" : std::string("unexpected '") + peek() + "'",
                       term_start);
    } else if (star) {
      throw ParseError("expected variable after '*'", pos_);
    }
    BigRational value = coef.value_or(BigRational(1));
    if (negative) value = -value;
    out.coefficients[exponent] += value;
  }

  const std::string& text_;
  std::size_t pos_ = 0;
};

}  // namespace

int PolynomialInput::degree() const {
  for (auto it = coefficients.rbegin(); it != coefficients.rend(); ++it) {
    if (!it->second.is_zero()) return static_cast<int>(it->first);
  }
  return -1;
}

std::vector<BigRational> PolynomialInput::leading_first() const {
  const int deg = degree();
  std::vector<BigRational> out;
  for (int k = deg; k >= 0; --k) {
    auto it = coefficients.find(static_cast<unsigned>(k));
    out.push_back(it == coefficients.end() ? BigRational(0) : it->second);
  }
  return out;
}

PolynomialInput parse_polynomial(const std::string& text) { return Parser(text).parse(); }

}  // namespace radica
