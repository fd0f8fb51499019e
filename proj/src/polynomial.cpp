#include "plink/polynomial.hpp"

#include <algorithm>

namespace plink {

IntPolynomial::IntPolynomial(std::initializer_list<Int> ascending_coeffs)
    : coeffs_(ascending_coeffs) {
  trim();
}

IntPolynomial::IntPolynomial(std::vector<Int> ascending_coeffs)
    : coeffs_(std::move(ascending_coeffs)) {
  trim();
}

IntPolynomial IntPolynomial::monomial(Int c, std::size_t k) {
  if (c == 0) return {};
  IntPolynomial p;
  p.coeffs_.assign(k + 1, Int(0));
  p.coeffs_[k] = std::move(c);
  return p;
}

void IntPolynomial::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

IntPolynomial IntPolynomial::operator+(const IntPolynomial& o) const {
  IntPolynomial r;
  r.coeffs_.resize(std::max(coeffs_.size(), o.coeffs_.size()));
  for (std::size_t i = 0; i < r.coeffs_.size(); ++i) r.coeffs_[i] = coeff(i) + o.coeff(i);
  r.trim();
  return r;
}

IntPolynomial IntPolynomial::operator-(const IntPolynomial& o) const { return *this + (-o); }

IntPolynomial IntPolynomial::operator-() const {
  IntPolynomial r = *this;
  for (auto& c : r.coeffs_) c = -c;
  return r;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& o) const {
  if (is_zero() || o.is_zero()) return {};
  IntPolynomial r;
  r.coeffs_.assign(coeffs_.size() + o.coeffs_.size() - 1, Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i] == 0) continue;
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j)
      r.coeffs_[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  return r;
}

IntPolynomial IntPolynomial::compose_power(std::size_t k) const {
  if (k == 0) throw validation_error("compose_power: exponent must be >= 1");
  if (is_zero()) return {};
  IntPolynomial r;
  r.coeffs_.assign((coeffs_.size() - 1) * k + 1, Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i * k] = coeffs_[i];
  return r;
}

IntPolynomial IntPolynomial::derivative() const {
  if (coeffs_.size() <= 1) return {};
  IntPolynomial r;
  r.coeffs_.resize(coeffs_.size() - 1);
  for (std::size_t i = 1; i < coeffs_.size(); ++i) r.coeffs_[i - 1] = coeffs_[i] * Int(i);
  return r;
}

Rational IntPolynomial::evaluate(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + Rational(*it);
  return acc;
}

Int IntPolynomial::at_one() const {
  Int s = 0;
  for (const auto& c : coeffs_) s += c;
  return s;
}

std::pair<IntPolynomial, IntPolynomial> IntPolynomial::divrem(const IntPolynomial& divisor) const {
  if (divisor.is_zero()) throw validation_error("division by the zero polynomial");
  const Int lead = divisor.coeffs_.back();
  if (lead != 1 && lead != -1)
    throw validation_error("divrem: divisor leading coefficient must be a unit");
  IntPolynomial rem = *this;
  IntPolynomial quot;
  if (rem.degree() >= divisor.degree())
    quot.coeffs_.assign(rem.coeffs_.size() - divisor.coeffs_.size() + 1, Int(0));
  while (!rem.is_zero() && rem.degree() >= divisor.degree()) {
    const std::size_t shift = rem.coeffs_.size() - divisor.coeffs_.size();
    Int q = rem.coeffs_.back() * lead;  // lead is +-1, so this is back()/lead
    quot.coeffs_[shift] = q;
    for (std::size_t i = 0; i < divisor.coeffs_.size(); ++i)
      rem.coeffs_[shift + i] -= q * divisor.coeffs_[i];
    rem.trim();
  }
  quot.trim();
  return {std::move(quot), std::move(rem)};
}

IntPolynomial IntPolynomial::exact_div(const IntPolynomial& divisor) const {
  auto [q, r] = divrem(divisor);
  if (!r.is_zero()) throw internal_error("exact_div: division left a remainder");
  return q;
}

IntPolynomial IntPolynomial::reduce_mod_power_minus_one(std::size_t d) const {
  if (d == 0) throw validation_error("reduce mod t^0 - 1");
  IntPolynomial r;
  r.coeffs_.assign(d, Int(0));
  for (std::size_t i = 0; i < coeffs_.size(); ++i) r.coeffs_[i % d] += coeffs_[i];
  r.trim();
  return r;
}

bool IntPolynomial::is_palindromic() const {
  for (std::size_t i = 0; i < coeffs_.size(); ++i)
    if (coeffs_[i] != coeffs_[coeffs_.size() - 1 - i]) return false;
  return true;
}

std::string IntPolynomial::str() const {
  if (is_zero()) return "0";
  std::string out;
  for (std::size_t i = coeffs_.size(); i-- > 0;) {
    if (coeffs_[i] == 0) continue;
    if (!out.empty()) out += coeffs_[i] > 0 ? " + " : " - ";
    else if (coeffs_[i] < 0) out += "-";
    Int a = abs(coeffs_[i]);
    if (a != 1 || i == 0) out += a.str();
    if (i > 0) {
      out += "t";
      if (i > 1) out += "^" + std::to_string(i);
    }
  }
  return out;
}

}  // namespace plink
