#pragma once

#include "soldyn/rational.hpp"

#include <cstddef>
#include <cstdint>
#include <initializer_list>
#include <stdexcept>
#include <string>
#include <vector>

namespace soldyn {

/// Raised when an inverse is requested for a singular matrix.
class SingularMatrix : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

/// Dense row-major matrix over Q.
///
/// Square instances are the dual action of an automorphism of B_r on
/// column vectors of Q^r. Rectangular instances show up as row lists
/// (e.g. a basis stacked for elimination).
class RatMatrix {
 public:
  RatMatrix() = default;
  RatMatrix(std::size_t rows, std::size_t cols);
  RatMatrix(std::initializer_list<std::initializer_list<Rat>> rows);

  static RatMatrix identity(std::size_t n);
  static RatMatrix zero(std::size_t n) { return RatMatrix(n, n); }
  static RatMatrix diagonal(const QVec& diag);
  static RatMatrix from_rows(const std::vector<QVec>& rows, std::size_t cols);
  static RatMatrix from_columns(const std::vector<QVec>& cols, std::size_t rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  std::size_t dim() const noexcept { return rows_; }
  bool is_square() const noexcept { return rows_ == cols_; }

  Rat& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const Rat& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  QVec row(std::size_t i) const;
  QVec column(std::size_t j) const;
  std::vector<QVec> row_list() const;

  RatMatrix transpose() const;
  Rat trace() const;
  /// Exact determinant by elimination; throws on non-square input.
  Rat determinant() const;
  bool is_invertible() const { return is_square() && sgn(determinant()) != 0; }
  RatMatrix inverse() const;
  /// Non-negative power by repeated squaring.
  RatMatrix pow(std::uint64_t e) const;
  /// Integer power; negative exponents go through the inverse.
  RatMatrix ipow(std::int64_t e) const;

  bool is_identity() const;
  bool is_zero() const;
  bool is_integral() const;

  QVec apply(const QVec& v) const;

  RatMatrix& operator+=(const RatMatrix& o);
  RatMatrix& operator-=(const RatMatrix& o);
  RatMatrix& operator*=(const Rat& s);

  friend RatMatrix operator+(RatMatrix a, const RatMatrix& b) { return a += b; }
  friend RatMatrix operator-(RatMatrix a, const RatMatrix& b) { return a -= b; }
  friend RatMatrix operator*(RatMatrix a, const Rat& s) { return a *= s; }
  friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
  friend QVec operator*(const RatMatrix& a, const QVec& v) { return a.apply(v); }
  friend bool operator==(const RatMatrix& a, const RatMatrix& b);
  friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

  const std::vector<Rat>& data() const noexcept { return data_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Rat> data_;
};

std::string to_string(const RatMatrix& m);

struct RatMatrixHash {
  std::size_t operator()(const RatMatrix& m) const noexcept;
};

}  // namespace soldyn
