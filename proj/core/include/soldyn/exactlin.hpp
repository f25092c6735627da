#pragma once

// Exact linear algebra over Q used by every analysis in the library.

#include "soldyn/matrix.hpp"
#include "soldyn/polynomial.hpp"
#include "soldyn/rational.hpp"
#include "soldyn/subspace.hpp"

#include <span>
#include <stdexcept>
#include <vector>

namespace soldyn {

/// A matrix that was required to preserve a subspace does not.
class NotInvariant : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

struct RrefResult {
  Subspace row_space;
  std::size_t rank = 0;
};

/// Canonical row space of the given rows.
RrefResult rref(const std::vector<QVec>& rows, std::size_t cols);
RrefResult rref(const RatMatrix& m);

/// { v : m v = 0 }.
Subspace kernel(const RatMatrix& m);
std::size_t rank(const RatMatrix& m);

/// det(xI - m), monic of degree dim(m).
///
/// Faddeev-LeVerrier recurrence: N_0 = I, c_{n-k} = -tr(m N_{k-1}) / k,
/// N_k = m N_{k-1} + c_{n-k} I. Every intermediate is an exact rational
/// matrix and the only divisions are by the small integers k.
Polynomial charpoly(const RatMatrix& m);

/// Largest subspace of `seed` mapped onto itself by every generator.
/// Iterates V <- V ∩ gV ∩ g^{-1}V until the dimension stops dropping.
Subspace invariant_core(const Subspace& seed, std::span<const RatMatrix> gens);

/// Smallest subspace containing `start` that is invariant under every generator.
Subspace invariant_closure(const Subspace& start, std::span<const RatMatrix> gens);

/// Matrix of m on v in the canonical basis of v. Throws NotInvariant.
RatMatrix restrict_action(const RatMatrix& m, const Subspace& v);

/// Matrix of the induced map on Q^r / v in the basis given by the
/// non-pivot coordinates of v. Throws NotInvariant.
RatMatrix quotient_action(const RatMatrix& m, const Subspace& v);

}  // namespace soldyn
