#pragma once

// Floating-point orbits on T^r. Heuristic cross-checks only; the exact
// modules decide every verdict.

#include "soldyn/matrix.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace soldyn {

struct OrbitStats {
  std::size_t iterations = 0;
  /// Smallest torus distance from an orbit point to 0; in [0, sqrt(r)/2].
  double min_dist_to_zero = 0.0;
  /// max over the 2^r dyadic half-cells of |empirical frequency - 2^-r|.
  double discrepancy = 0.0;
  /// Orbit points, only when requested.
  std::vector<std::vector<double>> trajectory;
};

struct SimulationOptions {
  std::size_t iterations = 100000;
  /// Starting point; drawn uniformly from [0,1)^r with `seed` when unset.
  std::optional<std::vector<double>> x0;
  std::uint64_t seed = 0;
  bool keep_trajectory = false;
};

/// Iterates x -> m x mod 1 starting at x0 (x0 counts as the first point).
/// Requires torus_validate(m); throws std::invalid_argument otherwise.
OrbitStats torus_orbit_stats(const RatMatrix& m, const SimulationOptions& options);

/// Euclidean distance on R^r / Z^r from x to the origin.
double torus_distance_to_zero(const std::vector<double>& x);

}  // namespace soldyn
