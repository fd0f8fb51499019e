#pragma once

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

#include "plink/numbers.hpp"

namespace plink {

/// Dense polynomial over Z, coefficients indexed by exponent. The zero
/// polynomial has an empty coefficient vector; otherwise the leading
/// coefficient is nonzero.
class IntPolynomial {
 public:
  IntPolynomial() = default;
  IntPolynomial(std::initializer_list<Int> ascending_coeffs);
  explicit IntPolynomial(std::vector<Int> ascending_coeffs);

  static IntPolynomial zero() { return {}; }
  static IntPolynomial one() { return IntPolynomial{Int(1)}; }
  /// c * t^k
  static IntPolynomial monomial(Int c, std::size_t k);

  bool is_zero() const { return coeffs_.empty(); }
  /// Degree; -1 for the zero polynomial.
  long long degree() const { return static_cast<long long>(coeffs_.size()) - 1; }
  Int coeff(std::size_t k) const { return k < coeffs_.size() ? coeffs_[k] : Int(0); }
  const std::vector<Int>& coeffs() const { return coeffs_; }

  IntPolynomial operator+(const IntPolynomial& o) const;
  IntPolynomial operator-(const IntPolynomial& o) const;
  IntPolynomial operator*(const IntPolynomial& o) const;
  IntPolynomial operator-() const;
  bool operator==(const IntPolynomial& o) const = default;

  /// p(t^k), k >= 1.
  IntPolynomial compose_power(std::size_t k) const;

  IntPolynomial derivative() const;

  Rational evaluate(const Rational& x) const;
  /// p(1), i.e. the coefficient sum.
  Int at_one() const;

  /// Quotient and remainder; requires the divisor leading coefficient to be
  /// +1 or -1 so everything stays over Z.
  std::pair<IntPolynomial, IntPolynomial> divrem(const IntPolynomial& divisor) const;

  /// Division that must be exact; throws internal_error on a nonzero
  /// remainder (used where cancellation is a mathematical guarantee).
  IntPolynomial exact_div(const IntPolynomial& divisor) const;

  /// Fold exponents modulo d: the image in Z[t]/(t^d - 1), degree < d.
  IntPolynomial reduce_mod_power_minus_one(std::size_t d) const;

  /// t^deg * p(1/t) == p.
  bool is_palindromic() const;

  std::string str() const;

 private:
  void trim();
  std::vector<Int> coeffs_;
};

}  // namespace plink
