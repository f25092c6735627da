#pragma once

// Test-only helpers: seeded random matrices, fixtures and independent oracles.
// Nothing here calls into the code paths it is used to check.

#include "soldyn/genset.hpp"
#include "soldyn/matrix.hpp"
#include "soldyn/polynomial.hpp"

#include <cstdint>
#include <random>
#include <vector>

namespace soldyn::testing {

using Rng = std::mt19937_64;

inline Rat rand_int(Rng& rng, int lo, int hi) {
  return Rat(std::uniform_int_distribution<int>(lo, hi)(rng));
}

inline RatMatrix random_int_matrix(Rng& rng, std::size_t r, int lo, int hi) {
  RatMatrix m(r, r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t j = 0; j < r; ++j) m(i, j) = rand_int(rng, lo, hi);
  return m;
}

inline RatMatrix random_invertible_int_matrix(Rng& rng, std::size_t r, int lo, int hi) {
  while (true) {
    RatMatrix m = random_int_matrix(rng, r, lo, hi);
    if (m.is_invertible()) return m;
  }
}

inline RatMatrix random_invertible_rat_matrix(Rng& rng, std::size_t r) {
  while (true) {
    RatMatrix m(r, r);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < r; ++j) {
        Rat q(rand_int(rng, -3, 3).get_num(), rand_int(rng, 1, 3).get_num());
        q.canonicalize();
        m(i, j) = q;
      }
    if (m.is_invertible()) return m;
  }
}

/// Product of `steps` random elementary matrices I ± E_ij and sign flips:
/// always a unimodular integer matrix.
inline RatMatrix random_unimodular(Rng& rng, std::size_t r, int steps) {
  RatMatrix m = RatMatrix::identity(r);
  std::uniform_int_distribution<std::size_t> idx(0, r - 1);
  for (int s = 0; s < steps; ++s) {
    RatMatrix e = RatMatrix::identity(r);
    const std::size_t i = idx(rng);
    const std::size_t j = idx(rng);
    if (i == j) {
      e(i, i) = -1;
    } else {
      e(i, j) = std::uniform_int_distribution<int>(0, 1)(rng) ? 1 : -1;
    }
    m = m * e;
  }
  return m;
}

/// Independent oracle: det(xI - m) by Laplace expansion with polynomial entries.
inline Polynomial cofactor_charpoly(const RatMatrix& m) {
  const std::size_t n = m.dim();
  std::vector<std::vector<Polynomial>> a(n, std::vector<Polynomial>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      a[i][j] = Polynomial::constant(-m(i, j));
      if (i == j) a[i][j] += Polynomial::monomial(1);
    }
  struct Rec {
    static Polynomial det(const std::vector<std::vector<Polynomial>>& b) {
      const std::size_t k = b.size();
      if (k == 0) return Polynomial::constant(1);
      Polynomial acc;
      for (std::size_t c = 0; c < k; ++c) {
        std::vector<std::vector<Polynomial>> minor;
        for (std::size_t i = 1; i < k; ++i) {
          std::vector<Polynomial> row;
          for (std::size_t j = 0; j < k; ++j)
            if (j != c) row.push_back(b[i][j]);
          minor.push_back(std::move(row));
        }
        Polynomial term = b[0][c] * det(minor);
        if (c % 2 == 0) acc += term; else acc -= term;
      }
      return acc;
    }
  };
  return Rec::det(a);
}

/// Independent oracle: does some nonzero integer vector with entries in
/// [-height, height] satisfy m^k v = v for some 1 <= k <= steps?
inline bool small_character_orbit_closes(const RatMatrix& m, int height, std::uint64_t steps) {
  const std::size_t r = m.dim();
  std::vector<RatMatrix> powers;
  RatMatrix p = RatMatrix::identity(r);
  for (std::uint64_t k = 1; k <= steps; ++k) {
    p = p * m;
    powers.push_back(p);
  }
  std::vector<int> v(r, -height);
  while (true) {
    bool nonzero = false;
    for (int c : v) nonzero = nonzero || c != 0;
    if (nonzero) {
      QVec q(r);
      for (std::size_t i = 0; i < r; ++i) q[i] = v[i];
      for (const auto& pk : powers)
        if (pk.apply(q) == q) return true;
    }
    std::size_t i = 0;
    while (i < r && v[i] == height) v[i++] = -height;
    if (i == r) return false;
    ++v[i];
  }
}

inline RatMatrix diag(std::initializer_list<long> entries) {
  QVec d;
  for (long e : entries) d.emplace_back(e);
  return RatMatrix::diagonal(d);
}

}  // namespace soldyn::testing
