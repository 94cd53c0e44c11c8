#pragma once

#include <map>
#include <string>
#include <vector>

#include "radica/rational.hpp"

namespace radica {

/// A parsed univariate polynomial. Decimal literals are kept exactly as
/// their decimal fractions, but mark the input as floating point.
struct PolynomialInput {
  std::string variable;                       // empty for constants
  std::map<unsigned, BigRational> coefficients;  // degree -> coefficient, zeros dropped
  bool has_decimal = false;
  std::string source;

  /// Highest degree with a nonzero coefficient; -1 for the zero polynomial.
  int degree() const;

  /// Dense leading-first list from the highest nonzero degree down to 0.
  std::vector<BigRational> leading_first() const;
};

/// Grammar: signed terms `[coef][*][var[^exp]]`, coef an integer, `a/b` or
/// decimal; one identifier throughout; whitespace ignored; like terms summed.
/// Throws ParseError with the offending character offset.
PolynomialInput parse_polynomial(const std::string& text);

}  // namespace radica
