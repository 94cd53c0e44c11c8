#pragma once

#include <complex>
#include <cstddef>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace radica {

/// Base class of every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ZeroDenominator : public Error {
 public:
  ZeroDenominator() : Error("zero denominator") {}
};

class DivisionByZero : public Error {
 public:
  DivisionByZero() : Error("division by zero") {}
};

/// Two tower elements whose towers are not prefixes of one another.
class TowerMismatch : public Error {
 public:
  TowerMismatch() : Error("tower mismatch") {}
};

/// A zero divisor was met while inverting: the defining polynomial of `level`
/// is reducible over the levels below it. `factor` is the discovered common
/// factor, monic, in canonical text form.
class ReducibleExtension : public Error {
 public:
  ReducibleExtension(std::size_t level, std::string factor)
      : Error("reducible extension at level " + std::to_string(level) + ": factor " + factor),
        level_(level),
        factor_(std::move(factor)) {}

  std::size_t level() const noexcept { return level_; }
  const std::string& factor() const noexcept { return factor_; }

 private:
  std::size_t level_;
  std::string factor_;
};

class DegenerateLeadingCoefficient : public Error {
 public:
  DegenerateLeadingCoefficient() : Error("degenerate leading coefficient") {}
};

/// The backend lacks an operation the caller needs (sqrt, cbrt, char != 2, 3).
class MissingCapability : public Error {
 public:
  using Error::Error;
};

/// Input lies outside the hypotheses of a restricted entry point, e.g.
/// "use total solver", "biquadratic case", or a paper-strict rejection.
class UnsupportedCase : public Error {
 public:
  using Error::Error;
};

class OracleNonConvergence : public Error {
 public:
  explicit OracleNonConvergence(std::vector<std::complex<double>> last_iterate)
      : Error("Durand-Kerner iteration did not converge"), last_iterate_(std::move(last_iterate)) {}

  const std::vector<std::complex<double>>& last_iterate() const noexcept { return last_iterate_; }

 private:
  std::vector<std::complex<double>> last_iterate_;
};

/// Polynomial text could not be parsed; `offset` is a 0-based character index.
class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset)
      : Error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

  std::size_t offset() const noexcept { return offset_; }

 private:
  std::size_t offset_;
};

}  // namespace radica
