#pragma once

// Finitely generated groups of automorphisms of B_r: finite orbits,
// ergodicity, the distal structure series and nilpotency.

#include "soldyn/genset.hpp"
#include "soldyn/matrix.hpp"
#include "soldyn/subspace.hpp"

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <variant>
#include <vector>

namespace soldyn {

struct OrbitResult {
  bool finite = false;
  /// Full orbit when finite; the part visited before the cap otherwise.
  std::vector<QVec> orbit;
};

/// BFS closure of {v} under the generators and their inverses.
/// Default cap is Minkowski's bound B(r), which any finite orbit respects.
OrbitResult vector_orbit(const GenSet& g, const QVec& v, std::optional<std::size_t> cap = std::nullopt);

struct ImageResult {
  bool finite = false;
  /// Distinct restricted matrices of the image (finite case).
  std::vector<RatMatrix> elements;
  /// Element of infinite order on the subspace (infinite case); its matrix
  /// is the restricted one.
  std::optional<Word> witness;
};

/// Is the image of the group acting on the invariant subspace s finite?
///
/// Every element of a finite subgroup of GL(d, Q) satisfies w^M(d) = I, and a
/// finitely generated torsion subgroup of GL(d, Q) is finite, so the BFS stops
/// either when the closure is exhausted (finite, at most B(d) elements) or at
/// the first element with w^M(d) != I (infinite). Throws NotInvariant.
ImageResult group_image_finite_on(const GenSet& g, const Subspace& s);

struct FiniteOrbitSubspace {
  /// Characters with a finite group orbit.
  Subspace W;
  /// The finite image of the group on W (restricted matrices).
  std::vector<RatMatrix> image;
  /// Infinite-order words used to cut the candidate space down to W.
  std::vector<Word> cuts;
};

FiniteOrbitSubspace finite_orbit_subspace_group(const GenSet& g);

struct GroupErgodicity {
  bool ergodic = false;
  Subspace W;
  /// Nonzero character with finite orbit (set when not ergodic).
  std::optional<QVec> witness;
  std::vector<QVec> witness_orbit;
};

/// Ergodic iff W = 0. The witness orbit is enumerated with `orbit_cap`
/// (default Minkowski's bound).
GroupErgodicity is_ergodic_group(const GenSet& g, std::optional<std::size_t> orbit_cap = std::nullopt);

/// The group acts on S_{i+1}/S_i through a finite group of this order.
struct FiniteAction {
  std::size_t order = 0;
  std::vector<RatMatrix> image;
};

/// Q^r / base is nonzero and carries no finite-orbit character: the dual
/// subgroup is invariant and the action on it is ergodic, so not distal.
struct Stalled {
  Subspace base;
  std::size_t quotient_dim = 0;
};

using LayerCertificate = std::variant<FiniteAction, Stalled>;

/// Dual form of the distal structure series: 0 = S_0 ⊂ S_1 ⊂ ... ⊂ S_n.
struct SeriesReport {
  std::vector<Subspace> chain;
  std::vector<LayerCertificate> layers;

  std::size_t finite_layers() const;
  bool stalled() const;
};

struct GroupVerdict {
  bool ergodic = false;
  bool distal = false;
  Subspace W;
  SeriesReport series;
  /// Infinite-order words met while computing the W of each layer.
  std::vector<Word> certificates;
};

GroupVerdict distal_series_group(const GenSet& g);

bool operator==(const FiniteAction& a, const FiniteAction& b);
bool operator==(const Stalled& a, const Stalled& b);
bool operator==(const SeriesReport& a, const SeriesReport& b);
bool operator==(const GroupVerdict& a, const GroupVerdict& b);

/// Left-normed commutators of the generators grouped by weight.
struct LowerCentralSeries {
  /// commutators[k] holds the distinct non-identity [x_1, ..., x_{k+1}].
  std::vector<std::vector<Word>> commutators;
  std::size_t nilpotency_class = 0;

  /// Generators of the k-th level: all commutators of weight > k.
  /// Level 0 is the whole group.
  std::vector<Word> level_generators(std::size_t k) const;
  /// Number of levels before the trivial one (== nilpotency_class).
  std::size_t depth() const { return nilpotency_class; }
};

struct NilpotencyCheck {
  bool nilpotent = false;
  LowerCentralSeries series;
  std::size_t class_cap = 0;
  /// A non-identity commutator of weight class_cap + 1 (when not nilpotent).
  std::optional<Word> witness;
};

/// If every left-normed commutator of weight c+1 in the generators is the
/// identity, the group is nilpotent of class <= c. Default cap is dim(g).
NilpotencyCheck verify_nilpotent(const GenSet& g, std::optional<std::size_t> class_cap = std::nullopt);

class NormalizationSuspect : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NoFiniteAlphaOrbit : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct ExtendedWitness {
  QVec chi;
  /// Orbit of chi under the group generated by g and a.
  std::vector<QVec> orbit;
};

/// Finds a nonzero character with finite orbit under <g, a>, starting from
/// the finite-orbit subspace W of g. Only a(W) = W is checked, not that a
/// normalizes g. Throws NormalizationSuspect (a(W) != W, or the combined
/// orbit turns out infinite) or NoFiniteAlphaOrbit (W = 0 or a has no
/// finite orbit inside W).
ExtendedWitness extend_nonergodic_witness(const GenSet& g, const RatMatrix& a);

/// Spins e_1..e_r and `trials` random vectors; returns the first proper
/// nonzero invariant subspace found. nullopt is evidence of irreducibility,
/// not a proof.
std::optional<Subspace> probe_irreducible(const GenSet& g, std::size_t trials, std::uint64_t seed = 1);

}  // namespace soldyn
