#include "soldyn/polynomial.hpp"

#include <stdexcept>

namespace soldyn {

Polynomial::Polynomial(std::vector<Rat> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

Polynomial::Polynomial(std::initializer_list<Rat> coeffs) : coeffs_(coeffs) { trim(); }

Polynomial Polynomial::constant(const Rat& c) { return Polynomial({c}); }

Polynomial Polynomial::monomial(std::size_t n, const Rat& c) {
  std::vector<Rat> cs(n + 1, Rat(0));
  cs[n] = c;
  return Polynomial(std::move(cs));
}

Polynomial Polynomial::x_pow_minus_one(std::size_t n) {
  std::vector<Rat> cs(n + 1, Rat(0));
  cs[n] = 1;
  cs[0] -= 1;
  return Polynomial(std::move(cs));
}

void Polynomial::trim() {
  while (!coeffs_.empty() && sgn(coeffs_.back()) == 0) coeffs_.pop_back();
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  Polynomial p = *this;
  const Rat lead = p.coeffs_.back();
  for (auto& c : p.coeffs_) c /= lead;
  return p;
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  Integer den_lcm = 1;
  for (const auto& c : coeffs_) den_lcm = lcm(den_lcm, c.get_den());
  std::vector<Integer> ints;
  ints.reserve(coeffs_.size());
  Integer content = 0;
  for (const auto& c : coeffs_) {
    Integer z = c.get_num() * (den_lcm / c.get_den());
    content = gcd(content, z);
    ints.push_back(std::move(z));
  }
  if (sgn(ints.back()) < 0) content = -content;
  std::vector<Rat> out;
  out.reserve(ints.size());
  for (const auto& z : ints) out.emplace_back(Integer(z / content));
  return Polynomial(std::move(out));
}

Rat Polynomial::eval(const Rat& x) const {
  Rat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

Polynomial& Polynomial::operator+=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size(), Rat(0));
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  if (a.is_zero() || b.is_zero()) return {};
  std::vector<Rat> cs(a.coeffs_.size() + b.coeffs_.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.coeffs_.size(); ++i)
    for (std::size_t j = 0; j < b.coeffs_.size(); ++j) cs[i + j] += a.coeffs_[i] * b.coeffs_[j];
  return Polynomial(std::move(cs));
}

Polynomial operator*(Polynomial a, const Rat& s) {
  for (auto& c : a.coeffs_) c *= s;
  a.trim();
  return a;
}

std::pair<Polynomial, Polynomial> divmod(const Polynomial& a, const Polynomial& b) {
  if (b.is_zero()) throw std::domain_error("polynomial division by zero");
  std::vector<Rat> rem = a.coeffs();
  const std::size_t db = static_cast<std::size_t>(b.degree());
  if (rem.size() <= db) return {Polynomial{}, a};
  std::vector<Rat> quot(rem.size() - db, Rat(0));
  const Rat lead = b.leading();
  for (std::size_t k = rem.size(); k-- > db;) {
    if (sgn(rem[k]) == 0) continue;
    const Rat f = rem[k] / lead;
    quot[k - db] = f;
    for (std::size_t j = 0; j <= db; ++j) rem[k - db + j] -= f * b.coeffs()[j];
  }
  return {Polynomial(std::move(quot)), Polynomial(std::move(rem))};
}

Polynomial gcd(const Polynomial& a, const Polynomial& b) {
  Polynomial x = a.primitive();
  Polynomial y = b.primitive();
  while (!y.is_zero()) {
    Polynomial r = divmod(x, y).second.primitive();
    x = std::move(y);
    y = std::move(r);
  }
  return x.monic();
}

std::string to_string(const Polynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  for (long k = p.degree(); k >= 0; --k) {
    const Rat c = p.coeff(static_cast<std::size_t>(k));
    if (sgn(c) == 0) continue;
    const Rat mag = abs(c);
    if (out.empty()) {
      if (sgn(c) < 0) out += "-";
    } else {
      out += sgn(c) < 0 ? " - " : " + ";
    }
    const bool unit = mag == 1;
    if (!unit || k == 0) out += to_string(mag);
    if (k >= 1) out += "x";
    if (k >= 2) out += "^" + std::to_string(k);
  }
  return out;
}

}  // namespace soldyn
