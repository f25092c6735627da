#pragma once

// Explicit constructions used as fixtures: the unipotent tower alpha_k and
// the affine extension Gamma^+ of a matrix group.

#include "soldyn/genset.hpp"
#include "soldyn/matrix.hpp"

#include <cstddef>
#include <vector>

namespace soldyn::examples {

/// k x k upper-triangular matrix with ones on and above the diagonal.
RatMatrix tower_alpha(std::size_t k);

/// [[a, w], [0, 1]]: acts on Q^{n+1} by (q, t) -> (a q + t w, t).
RatMatrix gamma_plus_lift(const RatMatrix& a, const QVec& w);

/// Lifts of the base generators (zero translation) followed by pure
/// translations. Throws std::invalid_argument without a nonzero translation.
GenSet gamma_plus_genset(const GenSet& base, const std::vector<QVec>& translations);

/// [[1,1],[1,0]]
RatMatrix golden_mean();
/// [[0,-1],[1,0]]
RatMatrix rotation_order4();
/// [[1,1],[0,1]]
RatMatrix unipotent2();
/// Standard generators x = I + E_12, y = I + E_23 of the 3x3 Heisenberg group.
std::vector<RatMatrix> heisenberg_pair();

}  // namespace soldyn::examples
