#include "soldyn/simulate.hpp"

#include "soldyn/autdyn.hpp"

#include <algorithm>
#include <cmath>
#include <random>
#include <stdexcept>

namespace soldyn {

double torus_distance_to_zero(const std::vector<double>& x) {
  double acc = 0.0;
  for (double c : x) {
    const double f = c - std::floor(c);
    const double d = std::min(f, 1.0 - f);
    acc += d * d;
  }
  return std::sqrt(acc);
}

OrbitStats torus_orbit_stats(const RatMatrix& m, const SimulationOptions& options) {
  if (!torus_validate(m)) throw std::invalid_argument("simulation needs a unimodular integer matrix");
  if (options.iterations == 0) throw std::invalid_argument("iterations must be positive");
  const std::size_t r = m.dim();
  if (r > 20) throw std::invalid_argument("dimension too large for the 2^r cell grid");

  std::vector<double> a(r * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) a[i * r + j] = m(i, j).get_d();

  std::vector<double> x(r);
  if (options.x0) {
    if (options.x0->size() != r) throw std::invalid_argument("x0 has the wrong dimension");
    for (std::size_t i = 0; i < r; ++i) x[i] = (*options.x0)[i] - std::floor((*options.x0)[i]);
  } else {
    std::mt19937_64 rng(options.seed);
    std::uniform_real_distribution<double> unif(0.0, 1.0);
    for (auto& c : x) c = unif(rng);
  }

  OrbitStats stats;
  stats.iterations = options.iterations;
  stats.min_dist_to_zero = torus_distance_to_zero(x);
  std::vector<std::size_t> cells(std::size_t{1} << r, 0);
  std::vector<double> next(r);
  for (std::size_t t = 0; t < options.iterations; ++t) {
    std::size_t cell = 0;
    for (std::size_t i = 0; i < r; ++i) cell |= (x[i] >= 0.5 ? std::size_t{1} : 0) << i;
    ++cells[cell];
    stats.min_dist_to_zero = std::min(stats.min_dist_to_zero, torus_distance_to_zero(x));
    if (options.keep_trajectory) stats.trajectory.push_back(x);
    if (t + 1 == options.iterations) break;
    for (std::size_t i = 0; i < r; ++i) {
      double acc = 0.0;
      for (std::size_t j = 0; j < r; ++j) acc += a[i * r + j] * x[j];
      next[i] = acc - std::floor(acc);
    }
    x.swap(next);
  }
  const double expected = 1.0 / static_cast<double>(cells.size());
  for (std::size_t c : cells) {
    const double freq = static_cast<double>(c) / static_cast<double>(options.iterations);
    stats.discrepancy = std::max(stats.discrepancy, std::abs(freq - expected));
  }
  return stats;
}

}  // namespace soldyn
