#include "soldyn/matrix.hpp"

#include <utility>

namespace soldyn {

RatMatrix::RatMatrix(std::size_t rows, std::size_t cols)
    : rows_(rows), cols_(cols), data_(rows * cols, Rat(0)) {}

RatMatrix::RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows) {
  rows_ = rows.size();
  cols_ = rows_ == 0 ? 0 : rows.begin()->size();
  data_.reserve(rows_ * cols_);
  for (const auto& r : rows) {
    if (r.size() != cols_) throw std::invalid_argument("ragged matrix literal");
    for (const auto& x : r) data_.push_back(x);
  }
}

RatMatrix RatMatrix::identity(std::size_t n) {
  RatMatrix m(n, n);
  for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
  return m;
}

RatMatrix RatMatrix::diagonal(const QVec& diag) {
  RatMatrix m(diag.size(), diag.size());
  for (std::size_t i = 0; i < diag.size(); ++i) m(i, i) = diag[i];
  return m;
}

RatMatrix RatMatrix::from_rows(const std::vector<QVec>& rows, std::size_t cols) {
  RatMatrix m(rows.size(), cols);
  for (std::size_t i = 0; i < rows.size(); ++i) {
    if (rows[i].size() != cols) throw std::invalid_argument("row length mismatch");
    for (std::size_t j = 0; j < cols; ++j) m(i, j) = rows[i][j];
  }
  return m;
}

RatMatrix RatMatrix::from_columns(const std::vector<QVec>& cols, std::size_t rows) {
  RatMatrix m(rows, cols.size());
  for (std::size_t j = 0; j < cols.size(); ++j) {
    if (cols[j].size() != rows) throw std::invalid_argument("column length mismatch");
    for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
  }
  return m;
}

QVec RatMatrix::row(std::size_t i) const {
  return QVec(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
              data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
}

QVec RatMatrix::column(std::size_t j) const {
  QVec c(rows_);
  for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
  return c;
}

std::vector<QVec> RatMatrix::row_list() const {
  std::vector<QVec> out;
  out.reserve(rows_);
  for (std::size_t i = 0; i < rows_; ++i) out.push_back(row(i));
  return out;
}

RatMatrix RatMatrix::transpose() const {
  RatMatrix t(cols_, rows_);
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
  return t;
}

Rat RatMatrix::trace() const {
  Rat t = 0;
  for (std::size_t i = 0; i < std::min(rows_, cols_); ++i) t += (*this)(i, i);
  return t;
}

Rat RatMatrix::determinant() const {
  if (!is_square()) throw std::invalid_argument("determinant of non-square matrix");
  RatMatrix a = *this;
  const std::size_t n = rows_;
  Rat det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(a(p, k)) == 0) ++p;
    if (p == n) return Rat(0);
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) std::swap(a(p, j), a(k, j));
      det = -det;
    }
    det *= a(k, k);
    for (std::size_t i = k + 1; i < n; ++i) {
      if (sgn(a(i, k)) == 0) continue;
      const Rat f = a(i, k) / a(k, k);
      for (std::size_t j = k; j < n; ++j) a(i, j) -= f * a(k, j);
    }
  }
  return det;
}

RatMatrix RatMatrix::inverse() const {
  if (!is_square()) throw std::invalid_argument("inverse of non-square matrix");
  const std::size_t n = rows_;
  RatMatrix a = *this;
  RatMatrix inv = identity(n);
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t p = k;
    while (p < n && sgn(a(p, k)) == 0) ++p;
    if (p == n) throw SingularMatrix("matrix is singular");
    if (p != k) {
      for (std::size_t j = 0; j < n; ++j) {
        std::swap(a(p, j), a(k, j));
        std::swap(inv(p, j), inv(k, j));
      }
    }
    const Rat piv = a(k, k);
    for (std::size_t j = 0; j < n; ++j) {
      a(k, j) /= piv;
      inv(k, j) /= piv;
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i == k || sgn(a(i, k)) == 0) continue;
      const Rat f = a(i, k);
      for (std::size_t j = 0; j < n; ++j) {
        a(i, j) -= f * a(k, j);
        inv(i, j) -= f * inv(k, j);
      }
    }
  }
  return inv;
}

RatMatrix RatMatrix::pow(std::uint64_t e) const {
  if (!is_square()) throw std::invalid_argument("power of non-square matrix");
  RatMatrix result = identity(rows_);
  RatMatrix base = *this;
  while (e > 0) {
    if (e & 1U) result = result * base;
    e >>= 1U;
    if (e > 0) base = base * base;
  }
  return result;
}

RatMatrix RatMatrix::ipow(std::int64_t e) const {
  if (e >= 0) return pow(static_cast<std::uint64_t>(e));
  return inverse().pow(static_cast<std::uint64_t>(-e));
}

bool RatMatrix::is_identity() const {
  if (!is_square()) return false;
  for (std::size_t i = 0; i < rows_; ++i)
    for (std::size_t j = 0; j < cols_; ++j)
      if ((*this)(i, j) != (i == j ? 1 : 0)) return false;
  return true;
}

bool RatMatrix::is_zero() const {
  for (const auto& x : data_)
    if (sgn(x) != 0) return false;
  return true;
}

bool RatMatrix::is_integral() const {
  for (const auto& x : data_)
    if (!is_integer(x)) return false;
  return true;
}

QVec RatMatrix::apply(const QVec& v) const {
  if (v.size() != cols_) throw std::invalid_argument("vector length mismatch");
  QVec out(rows_, Rat(0));
  for (std::size_t i = 0; i < rows_; ++i) {
    Rat acc = 0;
    for (std::size_t j = 0; j < cols_; ++j) {
      if (sgn(v[j]) != 0) acc += (*this)(i, j) * v[j];
    }
    out[i] = std::move(acc);
  }
  return out;
}

RatMatrix& RatMatrix::operator+=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] += o.data_[k];
  return *this;
}

RatMatrix& RatMatrix::operator-=(const RatMatrix& o) {
  if (rows_ != o.rows_ || cols_ != o.cols_) throw std::invalid_argument("shape mismatch");
  for (std::size_t k = 0; k < data_.size(); ++k) data_[k] -= o.data_[k];
  return *this;
}

RatMatrix& RatMatrix::operator*=(const Rat& s) {
  for (auto& x : data_) x *= s;
  return *this;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
  if (a.cols_ != b.rows_) throw std::invalid_argument("shape mismatch in product");
  RatMatrix c(a.rows_, b.cols_);
  for (std::size_t i = 0; i < a.rows_; ++i) {
    for (std::size_t k = 0; k < a.cols_; ++k) {
      const Rat& aik = a(i, k);
      if (sgn(aik) == 0) continue;
      for (std::size_t j = 0; j < b.cols_; ++j) {
        if (sgn(b(k, j)) != 0) c(i, j) += aik * b(k, j);
      }
    }
  }
  return c;
}

bool operator==(const RatMatrix& a, const RatMatrix& b) {
  return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
}

std::string to_string(const RatMatrix& m) {
  std::string out = "[";
  for (std::size_t i = 0; i < m.rows(); ++i) {
    if (i) out += ", ";
    out += "[";
    for (std::size_t j = 0; j < m.cols(); ++j) {
      if (j) out += ", ";
      out += to_string(m(i, j));
    }
    out += "]";
  }
  return out + "]";
}

std::size_t RatMatrixHash::operator()(const RatMatrix& m) const noexcept {
  return QVecHash{}(m.data()) ^ (m.rows() * 0x9e3779b97f4a7c15ULL);
}

}  // namespace soldyn
