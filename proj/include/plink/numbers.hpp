#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <stdexcept>
#include <string>

namespace plink {

// Exact arithmetic substrate. Everything downstream (determinants, Smith
// forms, characteristic polynomials, torsion sums) is computed over these
// types; no floating point enters the core.
using Int = boost::multiprecision::cpp_int;
using Rational = boost::multiprecision::cpp_rational;

// Bad user input (malformed cusp notation, impossible degree/cusp
// combination, non-star graph, ...). The CLI maps this to exit code 1.
class validation_error : public std::runtime_error {
 public:
  explicit validation_error(const std::string& what) : std::runtime_error(what) {}
};

// A cross-check between two independent computation routes failed. This
// always indicates a bug, never bad input. CLI exit code 2.
class internal_error : public std::runtime_error {
 public:
  explicit internal_error(const std::string& what) : std::runtime_error(what) {}
};

// cpp_rational's two-argument constructor rejects negative denominators;
// this normalizes instead.
inline Rational make_rational(Int num, Int den) {
  if (den == 0) throw validation_error("rational with zero denominator");
  if (den < 0) {
    num = -num;
    den = -den;
  }
  return Rational(std::move(num), std::move(den));
}

inline bool is_integer(const Rational& r) { return denominator(r) == 1; }

// ceil(a/b) for b > 0.
inline Int ceil_div(const Int& a, const Int& b) {
  Int q = a / b;
  if (a % b != 0 && ((a < 0) == (b < 0))) ++q;
  return q;
}

// "p/q", or just "p" when the denominator is 1. Never decimals.
inline std::string rational_str(const Rational& r) {
  if (is_integer(r)) return numerator(r).str();
  return numerator(r).str() + "/" + denominator(r).str();
}

inline long long to_ll(const Int& v) {
  if (v > std::numeric_limits<long long>::max() || v < std::numeric_limits<long long>::min())
    throw internal_error("integer too large for machine word: " + v.str());
  return v.convert_to<long long>();
}

}  // namespace plink
