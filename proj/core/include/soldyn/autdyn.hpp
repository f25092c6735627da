#pragma once

// Dynamics of a single automorphism of B_r (or T^r), given by its dual matrix.

#include "soldyn/matrix.hpp"
#include "soldyn/subspace.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace soldyn {

struct ErgodicityCheck {
  bool ergodic = false;
  /// Order of a root of unity found among the eigenvalues (set when not ergodic).
  std::optional<std::uint64_t> witness_order;
};

struct DistalityCheck {
  bool distal = false;
  /// N such that m^N is unipotent (set when distal).
  std::optional<std::uint64_t> unipotence_exponent;
};

/// Ascending chain V_1 ⊆ ... ⊆ V_n of m-invariant subspaces. V_n is the dual
/// of the distal quotient; Q^r / V_n is the dual of the part where m is ergodic.
struct SplitReport {
  std::vector<Subspace> chain;
  std::size_t ergodic_part_dim = 0;

  const Subspace& distal_part() const { return chain.back(); }
};

struct AutoVerdict {
  bool ergodic = false;
  bool distal = false;
  std::optional<std::uint64_t> root_of_unity_witness;
  std::optional<std::uint64_t> unipotence_exponent;
  SplitReport split;
};

/// Ergodic iff no root of unity is an eigenvalue.
ErgodicityCheck is_ergodic_auto(const RatMatrix& m);

/// Distal iff quasi-unipotent.
DistalityCheck is_distal_auto(const RatMatrix& m);

/// Characters with a finite m-orbit: ker(m^M - I), M = M(r).
Subspace finite_orbit_subspace_auto(const RatMatrix& m);

SplitReport ergodic_distal_split(const RatMatrix& m);

/// Integer entries and determinant ±1, i.e. m is an automorphism of T^r.
bool torus_validate(const RatMatrix& m);

/// All of the above in one pass. Throws SingularMatrix if m is not invertible.
AutoVerdict analyze_auto(const RatMatrix& m);

}  // namespace soldyn
