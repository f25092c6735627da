#include "soldyn/rational.hpp"

#include <cctype>
#include <stdexcept>

namespace soldyn {

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

void hash_combine(std::size_t& seed, std::size_t h) {
  seed ^= h + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2);
}

}  // namespace

Rat parse_rat(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && body.front() == '-') {
    negative = true;
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{"1"} : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    throw std::invalid_argument("malformed rational: '" + std::string(text) + "'");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) {
    throw std::invalid_argument("zero denominator: '" + std::string(text) + "'");
  }
  if (negative) n = -n;
  Rat q(n, d);
  q.canonicalize();
  return q;
}

std::string to_string(const Rat& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string to_string(const QVec& v) {
  std::string out = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) out += ", ";
    out += to_string(v[i]);
  }
  return out + ")";
}

bool is_integer(const Rat& q) { return q.get_den() == 1; }

bool is_zero(const QVec& v) {
  for (const auto& x : v) {
    if (sgn(x) != 0) return false;
  }
  return true;
}

QVec unit_vector(std::size_t dim, std::size_t index) {
  QVec v(dim, Rat(0));
  v.at(index) = 1;
  return v;
}

std::size_t hash_value(const Integer& z) noexcept {
  const mpz_srcptr p = z.get_mpz_t();
  std::size_t h = static_cast<std::size_t>(p->_mp_size);
  const int limbs = p->_mp_size < 0 ? -p->_mp_size : p->_mp_size;
  for (int i = 0; i < limbs; ++i) {
    hash_combine(h, static_cast<std::size_t>(mpz_getlimbn(p, i)));
  }
  return h;
}

std::size_t hash_value(const Rat& q) noexcept {
  std::size_t h = hash_value(q.get_num());
  hash_combine(h, hash_value(q.get_den()));
  return h;
}

std::size_t QVecHash::operator()(const QVec& v) const noexcept {
  std::size_t h = v.size();
  for (const auto& x : v) hash_combine(h, hash_value(x));
  return h;
}

}  // namespace soldyn
