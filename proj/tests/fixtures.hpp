#pragma once

// Group fixtures shared by the unit and acceptance suites.

#include "soldyn/examples.hpp"
#include "soldyn/genset.hpp"

#include "support.hpp"

#include <algorithm>
#include <string>
#include <vector>

namespace soldyn::testing {

struct NamedGroup {
  std::string name;
  GenSet group;
};

inline RatMatrix block_diag(const RatMatrix& a, const RatMatrix& b) {
  RatMatrix m(a.dim() + b.dim(), a.dim() + b.dim());
  for (std::size_t i = 0; i < a.dim(); ++i)
    for (std::size_t j = 0; j < a.dim(); ++j) m(i, j) = a(i, j);
  for (std::size_t i = 0; i < b.dim(); ++i)
    for (std::size_t j = 0; j < b.dim(); ++j) m(a.dim() + i, a.dim() + j) = b(i, j);
  return m;
}

inline RatMatrix scalar(std::size_t n, const Rat& s) { return RatMatrix::identity(n) * s; }

inline RatMatrix conj(const RatMatrix& p, const RatMatrix& m) { return p * m * p.inverse(); }

inline GenSet solenoid(std::vector<RatMatrix> gens) {
  const std::size_t n = gens.front().dim();
  return GenSet(n, Mode::solenoid, std::move(gens));
}

inline RatMatrix companion(const std::vector<long>& low_coeffs) {
  // monic polynomial x^n + c_{n-1} x^{n-1} + ... + c_0 given as c_0..c_{n-1}
  const std::size_t n = low_coeffs.size();
  RatMatrix m(n, n);
  for (std::size_t i = 1; i < n; ++i) m(i, i - 1) = 1;
  for (std::size_t i = 0; i < n; ++i) m(i, n - 1) = -low_coeffs[i];
  return m;
}

/// Nilpotent groups with ergodic action on B_r, r <= 4.
inline std::vector<NamedGroup> nilpotent_ergodic_fixtures() {
  using examples::heisenberg_pair;
  using examples::golden_mean;
  using examples::rotation_order4;
  using examples::unipotent2;
  const RatMatrix p2{{2, 1}, {1, 1}};
  const RatMatrix p3{{1, 2, 0}, {0, 1, 1}, {1, 0, 1}};
  const auto h = heisenberg_pair();
  const RatMatrix one{{1}};
  const RatMatrix a3{{2, 1, 0}, {0, 1, 1}, {0, 0, 3}};
  // b3 = 2 - (a-1) + (a-1)(a-2)/2 maps the eigenvalues 1,2,3 of a3 to 2,1,1
  const RatMatrix id3 = RatMatrix::identity(3);
  const RatMatrix b3 = id3 * Rat(2) - (a3 - id3) + (a3 - id3) * (a3 - id3 * Rat(2)) * Rat(1, 2);

  std::vector<NamedGroup> out;
  auto add = [&](std::string name, std::vector<RatMatrix> gens) { out.push_back({std::move(name), solenoid(std::move(gens))}); };
  add("diag(2,1)+diag(1,2)", {diag({2, 1}), diag({1, 2})});
  add("diag(3,1)+diag(1,3)", {diag({3, 1}), diag({1, 3})});
  add("three axis scalings", {diag({2, 1, 1}), diag({1, 2, 1}), diag({1, 1, 2})});
  add("four axis scalings", {diag({2, 1, 1, 1}), diag({1, 2, 1, 1}), diag({1, 1, 2, 1}), diag({1, 1, 1, 2})});
  add("diag(2,1)+diag(1,-1/2)", {diag({2, 1}), RatMatrix::diagonal({Rat(1), Rat(-1, 2)})});
  add("2I + unipotent", {scalar(2, 2), unipotent2()});
  add("2u + u", {unipotent2() * Rat(2), unipotent2()});
  add("2I3 + Heisenberg", {scalar(3, 2), h[0], h[1]});
  add("2x + y Heisenberg", {h[0] * Rat(2), h[1]});
  add("golden+1 | I2+2", {block_diag(golden_mean(), one), block_diag(RatMatrix::identity(2), RatMatrix{{2}})});
  add("golden+I2 | I2+diag(2,1) | I2+diag(1,3)",
      {block_diag(golden_mean(), RatMatrix::identity(2)), block_diag(RatMatrix::identity(2), diag({2, 1})),
       block_diag(RatMatrix::identity(2), diag({1, 3}))});
  add("golden+I2 | I2+2u", {block_diag(golden_mean(), RatMatrix::identity(2)),
                            block_diag(RatMatrix::identity(2), unipotent2() * Rat(2))});
  add("conjugated diag pair", {conj(p2, diag({2, 1})), conj(p2, diag({1, 2}))});
  add("conjugated axis scalings", {conj(p3, diag({2, 1, 1})), conj(p3, diag({1, 2, 1})), conj(p3, diag({1, 1, 2}))});
  add("[[2,1],[0,1]] + 3I-a", {RatMatrix{{2, 1}, {0, 1}}, RatMatrix{{1, -1}, {0, 2}}});
  add("a3 + interpolated b3", {a3, b3});
  add("rotation+1 | 2I2+1 | I2+3", {block_diag(rotation_order4(), one), block_diag(scalar(2, 2), one),
                                    block_diag(RatMatrix::identity(2), RatMatrix{{3}})});
  add("2u+I2 | diag(1,1,3,1) | diag(1,1,1,5)",
      {block_diag(unipotent2() * Rat(2), RatMatrix::identity(2)), diag({1, 1, 3, 1}), diag({1, 1, 1, 5})});
  add("Heisenberg+1 | 2I3+1 | I3+3", {block_diag(h[0], one), block_diag(h[1], one), block_diag(scalar(3, 2), one),
                                       block_diag(id3, RatMatrix{{3}})});
  add("1/2 I2 + conjugated unipotent", {scalar(2, Rat(1, 2)), conj(p2, unipotent2())});
  return out;
}

/// Finite groups acting irreducibly on Q^r.
inline std::vector<NamedGroup> irreducible_finite_fixtures() {
  const RatMatrix perm3{{0, 0, 1}, {1, 0, 0}, {0, 1, 0}};
  const RatMatrix p2{{1, 2}, {1, 3}};
  const RatMatrix p4{{1, 0, 1, 0}, {0, 1, 2, 0}, {0, 0, 1, 1}, {1, 0, 0, 2}};
  std::vector<NamedGroup> out;
  auto add = [&](std::string name, std::vector<RatMatrix> gens) { out.push_back({std::move(name), solenoid(std::move(gens))}); };
  add("rotation order 4", {examples::rotation_order4()});
  add("rotation order 3", {companion({1, 1})});
  add("rotation order 6", {companion({1, -1})});
  add("dihedral order 8", {examples::rotation_order4(), diag({1, -1})});
  add("signed permutations Q^3", {perm3, diag({-1, 1, 1})});
  add("Phi5 companion", {companion({1, 1, 1, 1})});
  add("Phi8 companion", {companion({1, 0, 0, 0})});
  add("Phi12 companion", {companion({1, 0, -1, 0})});
  add("conjugated dihedral", {conj(p2, examples::rotation_order4()), conj(p2, diag({1, -1}))});
  add("conjugated Phi10", {conj(p4, companion({1, -1, 1, -1}))});
  return out;
}

/// A random group that is distal by construction: either generated by
/// upper-triangular matrices with ±1 on the diagonal or by signed
/// permutations, then conjugated by a random rational matrix.
inline GenSet random_distal_group(Rng& rng, std::size_t r) {
  const std::size_t ngens = 1 + static_cast<std::size_t>(rng() % 2);
  std::vector<RatMatrix> gens;
  const bool triangular = rng() % 3 != 0;
  for (std::size_t k = 0; k < ngens; ++k) {
    RatMatrix m(r, r);
    if (triangular) {
      for (std::size_t i = 0; i < r; ++i) {
        m(i, i) = (rng() % 4 == 0) ? -1 : 1;
        for (std::size_t j = i + 1; j < r; ++j) m(i, j) = rand_int(rng, -2, 2);
      }
    } else {
      std::vector<std::size_t> perm(r);
      for (std::size_t i = 0; i < r; ++i) perm[i] = i;
      std::shuffle(perm.begin(), perm.end(), rng);
      for (std::size_t i = 0; i < r; ++i) m(i, perm[i]) = (rng() % 2) ? 1 : -1;
    }
    gens.push_back(m);
  }
  const RatMatrix p = random_invertible_rat_matrix(rng, r);
  for (auto& g : gens) g = conj(p, g);
  return solenoid(std::move(gens));
}

struct CommutingPair {
  std::string name;
  GenSet gamma;      // distal (finite or unipotent)
  RatMatrix beta;    // ergodic, commutes with every generator of gamma
};

inline std::vector<CommutingPair> commuting_distal_ergodic_pairs() {
  using examples::rotation_order4;
  using examples::unipotent2;
  const RatMatrix r3 = companion({1, 1});
  const RatMatrix h0 = examples::heisenberg_pair()[0];
  const RatMatrix id2 = RatMatrix::identity(2);
  const RatMatrix t3 = examples::tower_alpha(3);
  const RatMatrix p2{{2, 1}, {1, 1}};
  std::vector<CommutingPair> out;
  auto add = [&](std::string name, std::vector<RatMatrix> gamma, RatMatrix beta) {
    out.push_back({std::move(name), solenoid(std::move(gamma)), std::move(beta)});
  };
  add("rotation / 2I+R", {rotation_order4()}, id2 * Rat(2) + rotation_order4());
  add("rotation / 3I", {rotation_order4()}, scalar(2, 3));
  add("-I / golden", {scalar(2, -1)}, examples::golden_mean());
  add("order 3 / 2I+R3", {r3}, id2 * Rat(2) + r3);
  add("unipotent / 2u", {unipotent2()}, unipotent2() * Rat(2));
  add("unipotent / 3I", {unipotent2()}, scalar(2, 3));
  add("tower3 / 2*tower3^2", {t3}, t3 * t3 * Rat(2));
  add("Heisenberg x / 1/3 I", {h0}, scalar(3, Rat(1, 3)));
  add("rotation+1 / 2I2+3", {block_diag(rotation_order4(), RatMatrix{{1}})},
      block_diag(scalar(2, 2), RatMatrix{{3}}));
  add("conjugated unipotent / conjugated 2u", {conj(p2, unipotent2())}, conj(p2, unipotent2() * Rat(2)));
  (void)id2;
  return out;
}

}  // namespace soldyn::testing
