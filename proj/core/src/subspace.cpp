#include "soldyn/subspace.hpp"

#include "soldyn/exactlin.hpp"

#include <stdexcept>
#include <utility>

namespace soldyn {

struct RrefAccess {
  static Subspace build(std::vector<QVec> rows, std::size_t cols) {
    Subspace s(cols);
    std::size_t lead = 0;
    for (std::size_t col = 0; col < cols && lead < rows.size(); ++col) {
      std::size_t p = lead;
      while (p < rows.size() && sgn(rows[p][col]) == 0) ++p;
      if (p == rows.size()) continue;
      std::swap(rows[p], rows[lead]);
      const Rat piv = rows[lead][col];
      if (piv != 1) {
        for (std::size_t j = col; j < cols; ++j) rows[lead][j] /= piv;
      }
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == lead || sgn(rows[i][col]) == 0) continue;
        const Rat f = rows[i][col];
        for (std::size_t j = col; j < cols; ++j) rows[i][j] -= f * rows[lead][j];
      }
      s.pivots_.push_back(col);
      ++lead;
    }
    rows.resize(lead);
    s.basis_ = std::move(rows);
    return s;
  }
};

Subspace Subspace::full(std::size_t ambient) {
  std::vector<QVec> rows;
  rows.reserve(ambient);
  for (std::size_t i = 0; i < ambient; ++i) rows.push_back(unit_vector(ambient, i));
  return span(rows, ambient);
}

Subspace Subspace::span(const std::vector<QVec>& vectors, std::size_t ambient) {
  for (const auto& v : vectors) {
    if (v.size() != ambient) throw std::invalid_argument("vector length does not match ambient dimension");
  }
  return RrefAccess::build(vectors, ambient);
}

std::vector<std::size_t> Subspace::non_pivots() const {
  std::vector<std::size_t> out;
  std::size_t k = 0;
  for (std::size_t c = 0; c < ambient_; ++c) {
    if (k < pivots_.size() && pivots_[k] == c) {
      ++k;
    } else {
      out.push_back(c);
    }
  }
  return out;
}

QVec Subspace::reduce(const QVec& v) const {
  if (v.size() != ambient_) throw std::invalid_argument("vector length does not match ambient dimension");
  QVec w = v;
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    const Rat f = w[pivots_[i]];
    if (sgn(f) == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) {
      if (sgn(basis_[i][j]) != 0) w[j] -= f * basis_[i][j];
    }
  }
  return w;
}

bool Subspace::contains(const QVec& v) const { return soldyn::is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  if (other.ambient_ != ambient_) return false;
  for (const auto& b : other.basis_) {
    if (!contains(b)) return false;
  }
  return true;
}

QVec Subspace::coordinates(const QVec& v) const {
  if (!contains(v)) throw std::invalid_argument("vector is not in the subspace");
  QVec c(basis_.size());
  for (std::size_t i = 0; i < basis_.size(); ++i) c[i] = v[pivots_[i]];
  return c;
}

QVec Subspace::embed(const QVec& coords) const {
  if (coords.size() != basis_.size()) throw std::invalid_argument("coordinate length mismatch");
  QVec v(ambient_, Rat(0));
  for (std::size_t i = 0; i < basis_.size(); ++i) {
    if (sgn(coords[i]) == 0) continue;
    for (std::size_t j = 0; j < ambient_; ++j) v[j] += coords[i] * basis_[i][j];
  }
  return v;
}

Subspace Subspace::embed(const Subspace& inner) const {
  if (inner.ambient_ != dim()) throw std::invalid_argument("inner subspace has wrong ambient dimension");
  std::vector<QVec> rows;
  rows.reserve(inner.dim());
  for (const auto& b : inner.basis_) rows.push_back(embed(b));
  return span(rows, ambient_);
}

QVec Subspace::quotient_coordinates(const QVec& v) const {
  const QVec r = reduce(v);
  const auto free = non_pivots();
  QVec q(free.size());
  for (std::size_t i = 0; i < free.size(); ++i) q[i] = r[free[i]];
  return q;
}

Subspace Subspace::quotient_preimage(const Subspace& in_quotient) const {
  const auto free = non_pivots();
  if (in_quotient.ambient_ != free.size()) throw std::invalid_argument("quotient subspace has wrong ambient dimension");
  std::vector<QVec> rows = basis_;
  for (const auto& t : in_quotient.basis_) {
    QVec lift(ambient_, Rat(0));
    for (std::size_t i = 0; i < free.size(); ++i) lift[free[i]] = t[i];
    rows.push_back(std::move(lift));
  }
  return span(rows, ambient_);
}

Subspace Subspace::operator+(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("ambient dimension mismatch");
  std::vector<QVec> rows = basis_;
  rows.insert(rows.end(), other.basis_.begin(), other.basis_.end());
  return span(rows, ambient_);
}

Subspace Subspace::intersect(const Subspace& other) const {
  if (other.ambient_ != ambient_) throw std::invalid_argument("ambient dimension mismatch");
  if (is_zero() || other.is_full()) return *this;
  if (other.is_zero() || is_full()) return other;
  // x lies in `other` iff it is orthogonal to other's annihilator.
  const Subspace ann = kernel(other.basis_matrix());
  const RatMatrix constraints = ann.basis_matrix() * basis_matrix().transpose();
  const Subspace coeffs = kernel(constraints);
  std::vector<QVec> rows;
  rows.reserve(coeffs.dim());
  for (const auto& c : coeffs.basis()) rows.push_back(embed(c));
  return span(rows, ambient_);
}

Subspace Subspace::image(const RatMatrix& m) const {
  if (!m.is_square() || m.dim() != ambient_) throw std::invalid_argument("matrix does not act on this ambient space");
  std::vector<QVec> rows;
  rows.reserve(basis_.size());
  for (const auto& b : basis_) rows.push_back(m.apply(b));
  return span(rows, ambient_);
}

bool Subspace::is_invariant(const RatMatrix& m) const {
  for (const auto& b : basis_) {
    if (!contains(m.apply(b))) return false;
  }
  return true;
}

RatMatrix Subspace::basis_matrix() const { return RatMatrix::from_rows(basis_, ambient_); }

std::string to_string(const Subspace& s) {
  std::string out = "span{";
  for (std::size_t i = 0; i < s.dim(); ++i) {
    if (i) out += ", ";
    out += to_string(s.basis()[i]);
  }
  return out + "} in Q^" + std::to_string(s.ambient_dim());
}

}  // namespace soldyn
