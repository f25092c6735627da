#pragma once

#include "soldyn/matrix.hpp"
#include "soldyn/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace soldyn {

/// A Q-subspace of Q^n held in reduced row-echelon form.
///
/// The representation is canonical: equal subspaces compare equal
/// member-wise, so operator== is plain structural equality. Pivot columns
/// are strictly increasing and every pivot entry is 1 with zeros above and
/// below it.
class Subspace {
 public:
  Subspace() = default;
  /// The zero subspace of Q^ambient.
  explicit Subspace(std::size_t ambient) : ambient_(ambient) {}

  static Subspace zero(std::size_t ambient) { return Subspace(ambient); }
  static Subspace full(std::size_t ambient);
  static Subspace span(const std::vector<QVec>& vectors, std::size_t ambient);

  std::size_t ambient_dim() const noexcept { return ambient_; }
  std::size_t dim() const noexcept { return basis_.size(); }
  bool is_zero() const noexcept { return basis_.empty(); }
  bool is_full() const noexcept { return basis_.size() == ambient_; }

  const std::vector<QVec>& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }
  /// Standard coordinates not used as pivots; they index the quotient Q^n / this.
  std::vector<std::size_t> non_pivots() const;

  bool contains(const QVec& v) const;
  bool contains(const Subspace& other) const;

  /// Coordinates of v in the canonical basis (v must lie in the subspace).
  QVec coordinates(const QVec& v) const;
  /// Inverse of coordinates(): sum of coords[i] * basis[i].
  QVec embed(const QVec& coords) const;
  /// Image of a subspace of Q^dim() (given in basis coordinates) in Q^ambient.
  Subspace embed(const Subspace& inner) const;

  /// v minus its component along the basis; pivot coordinates become zero.
  QVec reduce(const QVec& v) const;
  /// Class of v in Q^n / this, in the non-pivot coordinates.
  QVec quotient_coordinates(const QVec& v) const;
  /// Preimage in Q^n of a subspace of the quotient given in non-pivot coordinates.
  Subspace quotient_preimage(const Subspace& in_quotient) const;

  Subspace operator+(const Subspace& other) const;
  Subspace intersect(const Subspace& other) const;
  /// { m v : v in this } for a square matrix m.
  Subspace image(const RatMatrix& m) const;
  bool is_invariant(const RatMatrix& m) const;

  /// Basis stacked as rows (dim x ambient).
  RatMatrix basis_matrix() const;

  friend bool operator==(const Subspace& a, const Subspace& b) {
    return a.ambient_ == b.ambient_ && a.basis_ == b.basis_;
  }
  friend bool operator!=(const Subspace& a, const Subspace& b) { return !(a == b); }

 private:
  friend struct RrefAccess;
  std::size_t ambient_ = 0;
  std::vector<QVec> basis_;
  std::vector<std::size_t> pivots_;
};

std::string to_string(const Subspace& s);

}  // namespace soldyn
