#pragma once

#include "soldyn/rational.hpp"

#include <initializer_list>
#include <string>
#include <utility>
#include <vector>

namespace soldyn {

/// Univariate polynomial over Q, coefficients lowest degree first.
/// Trailing zeros are stripped, so the zero polynomial has no coefficients.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(std::vector<Rat> coeffs);
  Polynomial(std::initializer_list<Rat> coeffs);

  static Polynomial constant(const Rat& c);
  /// x^n
  static Polynomial monomial(std::size_t n, const Rat& c = 1);
  /// x^n - 1
  static Polynomial x_pow_minus_one(std::size_t n);

  bool is_zero() const noexcept { return coeffs_.empty(); }
  /// -1 for the zero polynomial.
  long degree() const noexcept { return static_cast<long>(coeffs_.size()) - 1; }
  const std::vector<Rat>& coeffs() const noexcept { return coeffs_; }
  Rat coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Rat(0); }
  Rat leading() const { return coeffs_.empty() ? Rat(0) : coeffs_.back(); }
  bool is_monic() const { return !coeffs_.empty() && coeffs_.back() == 1; }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == 1; }

  Polynomial monic() const;
  /// Integer coefficients with gcd 1 and positive leading coefficient.
  Polynomial primitive() const;
  Rat eval(const Rat& x) const;

  Polynomial& operator+=(const Polynomial& o);
  Polynomial& operator-=(const Polynomial& o);
  friend Polynomial operator+(Polynomial a, const Polynomial& b) { return a += b; }
  friend Polynomial operator-(Polynomial a, const Polynomial& b) { return a -= b; }
  friend Polynomial operator*(const Polynomial& a, const Polynomial& b);
  friend Polynomial operator*(Polynomial a, const Rat& s);
  friend bool operator==(const Polynomial& a, const Polynomial& b) { return a.coeffs_ == b.coeffs_; }
  friend bool operator!=(const Polynomial& a, const Polynomial& b) { return !(a == b); }

 private:
  void trim();
  std::vector<Rat> coeffs_;
};

/// Quotient and remainder; throws std::domain_error on a zero divisor.
std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b);

/// Monic gcd (zero if both inputs are zero). Remainders are kept as
/// primitive integer polynomials to keep coefficients small.
Polynomial gcd(const Polynomial& a, const Polynomial& b);

/// Human-readable form, e.g. "x^2 - x - 1".
std::string to_string(const Polynomial& p);

}  // namespace soldyn
