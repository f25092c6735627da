#include "soldyn/groupdyn.hpp"

#include "soldyn/autdyn.hpp"
#include "soldyn/cyclo.hpp"
#include "soldyn/exactlin.hpp"

#include <deque>
#include <random>
#include <unordered_set>

namespace soldyn {

namespace {

// Hard ceiling for closure enumeration beyond Minkowski's bound. Reaching it
// would mean a torsion-looking infinite image, which Schur's theorem rules out.
constexpr std::size_t kClosureGuard = 2'000'000;

}  // namespace

OrbitResult vector_orbit(const GenSet& g, const QVec& v, std::optional<std::size_t> cap) {
  const std::size_t limit = cap.value_or(minkowski_cap(g.dim()));
  OrbitResult res;
  std::unordered_set<QVec, QVecHash> seen;
  std::deque<QVec> queue;
  seen.insert(v);
  res.orbit.push_back(v);
  queue.push_back(v);
  while (!queue.empty()) {
    const QVec cur = std::move(queue.front());
    queue.pop_front();
    for (std::size_t k = 0; k < g.size(); ++k) {
      for (const RatMatrix* m : {&g.gens()[k], &g.inverses()[k]}) {
        QVec w = m->apply(cur);
        if (!seen.insert(w).second) continue;
        if (seen.size() > limit) {
          res.finite = false;
          return res;
        }
        res.orbit.push_back(w);
        queue.push_back(std::move(w));
      }
    }
  }
  res.finite = true;
  return res;
}

ImageResult group_image_finite_on(const GenSet& g, const Subspace& s) {
  ImageResult res;
  const std::size_t d = s.dim();
  if (d == 0) {
    res.finite = true;
    res.elements.push_back(RatMatrix::identity(0));
    return res;
  }
  const GenSet restricted = g.restricted_to(s);
  WordEnumerator it(restricted.gens(), d);
  while (auto w = it.next()) {
    if (!has_finite_order(w->matrix)) {
      res.finite = false;
      res.elements.clear();
      res.witness = std::move(*w);
      return res;
    }
    res.elements.push_back(w->matrix);
    if (res.elements.size() > kClosureGuard) {
      throw std::runtime_error("closure enumeration exceeded its guard without an infinite-order witness");
    }
  }
  res.finite = true;
  return res;
}

FiniteOrbitSubspace finite_orbit_subspace_group(const GenSet& g) {
  const std::size_t r = g.dim();
  FiniteOrbitSubspace out;
  Subspace seed = Subspace::full(r);
  for (const auto& m : g.gens()) {
    seed = seed.intersect(finite_order_kernel(m));
    if (seed.is_zero()) break;
  }
  Subspace s = invariant_core(seed, g.gens());
  while (true) {
    if (s.is_zero()) {
      out.W = s;
      out.image = {RatMatrix::identity(0)};
      return out;
    }
    ImageResult img = group_image_finite_on(g, s);
    if (img.finite) {
      out.W = s;
      out.image = std::move(img.elements);
      return out;
    }
    Word cut = make_word(g, img.witness->letters);
    s = invariant_core(s.intersect(finite_order_kernel(cut.matrix)), g.gens());
    out.cuts.push_back(std::move(cut));
  }
}

GroupErgodicity is_ergodic_group(const GenSet& g, std::optional<std::size_t> orbit_cap) {
  GroupErgodicity res;
  res.W = finite_orbit_subspace_group(g).W;
  res.ergodic = res.W.is_zero();
  if (!res.ergodic) {
    res.witness = res.W.basis().front();
    res.witness_orbit = vector_orbit(g, *res.witness, orbit_cap).orbit;
  }
  return res;
}

std::size_t SeriesReport::finite_layers() const {
  std::size_t n = 0;
  for (const auto& l : layers) n += std::holds_alternative<FiniteAction>(l) ? 1 : 0;
  return n;
}

bool SeriesReport::stalled() const {
  return !layers.empty() && std::holds_alternative<Stalled>(layers.back());
}

GroupVerdict distal_series_group(const GenSet& g) {
  const std::size_t r = g.dim();
  GroupVerdict v;
  Subspace current = Subspace::zero(r);
  v.series.chain.push_back(current);
  bool first = true;
  while (!current.is_full()) {
    FiniteOrbitSubspace layer = finite_orbit_subspace_group(g.quotient_by(current));
    for (auto& w : layer.cuts) v.certificates.push_back(make_word(g, w.letters));
    if (first) {
      v.W = current.quotient_preimage(layer.W);
      first = false;
    }
    if (layer.W.is_zero()) {
      v.series.layers.emplace_back(Stalled{current, r - current.dim()});
      break;
    }
    v.series.layers.emplace_back(FiniteAction{layer.image.size(), std::move(layer.image)});
    current = current.quotient_preimage(layer.W);
    v.series.chain.push_back(current);
  }
  v.distal = current.is_full();
  v.ergodic = v.W.is_zero();
  return v;
}

bool operator==(const FiniteAction& a, const FiniteAction& b) {
  return a.order == b.order && a.image == b.image;
}

bool operator==(const Stalled& a, const Stalled& b) {
  return a.base == b.base && a.quotient_dim == b.quotient_dim;
}

bool operator==(const SeriesReport& a, const SeriesReport& b) {
  return a.chain == b.chain && a.layers == b.layers;
}

bool operator==(const GroupVerdict& a, const GroupVerdict& b) {
  if (a.ergodic != b.ergodic || a.distal != b.distal || a.W != b.W || !(a.series == b.series)) return false;
  if (a.certificates.size() != b.certificates.size()) return false;
  for (std::size_t i = 0; i < a.certificates.size(); ++i) {
    if (a.certificates[i].letters != b.certificates[i].letters) return false;
  }
  return true;
}

std::vector<Word> LowerCentralSeries::level_generators(std::size_t k) const {
  std::vector<Word> out;
  for (std::size_t w = k; w < commutators.size(); ++w) {
    out.insert(out.end(), commutators[w].begin(), commutators[w].end());
  }
  return out;
}

NilpotencyCheck verify_nilpotent(const GenSet& g, std::optional<std::size_t> class_cap) {
  NilpotencyCheck res;
  res.class_cap = class_cap.value_or(g.dim());
  if (res.class_cap == 0) throw std::invalid_argument("class_cap must be at least 1");

  std::vector<Word> gens;
  for (std::size_t i = 0; i < g.size(); ++i) gens.push_back(make_word(g, {static_cast<int>(i + 1)}));

  auto distinct_nontrivial = [](std::vector<Word> words) {
    std::vector<Word> out;
    std::unordered_set<RatMatrix, RatMatrixHash> seen;
    for (auto& w : words) {
      if (w.matrix.is_identity() || !seen.insert(w.matrix).second) continue;
      out.push_back(std::move(w));
    }
    return out;
  };

  auto& comm = res.series.commutators;
  comm.push_back(distinct_nontrivial(gens));
  if (comm.back().empty()) {
    comm.pop_back();
    res.nilpotent = true;
    res.series.nilpotency_class = 0;
    return res;
  }
  for (std::size_t weight = 2; weight <= res.class_cap + 1; ++weight) {
    std::vector<Word> next;
    for (const auto& c : comm.back()) {
      for (const auto& x : comm.front()) next.push_back(commutator(c, x));
    }
    next = distinct_nontrivial(std::move(next));
    if (next.empty()) {
      res.nilpotent = true;
      res.series.nilpotency_class = weight - 1;
      return res;
    }
    comm.push_back(std::move(next));
  }
  res.nilpotent = false;
  res.witness = comm.back().front();
  res.series.nilpotency_class = 0;
  return res;
}

ExtendedWitness extend_nonergodic_witness(const GenSet& g, const RatMatrix& a) {
  if (!a.is_square() || a.dim() != g.dim()) throw std::invalid_argument("automorphism has the wrong dimension");
  if (!a.is_invertible()) throw SingularMatrix("automorphism is singular");
  const Subspace w = finite_orbit_subspace_group(g).W;
  if (w.is_zero()) throw NoFiniteAlphaOrbit("the group is ergodic: no finite-orbit character to extend");
  if (!w.is_invariant(a)) throw NormalizationSuspect("a does not preserve the finite-orbit subspace of the group");
  const Subspace fixed = finite_orbit_subspace_auto(restrict_action(a, w));
  if (fixed.is_zero()) throw NoFiniteAlphaOrbit("a has no finite orbit inside the finite-orbit subspace");

  ExtendedWitness out;
  out.chi = w.embed(fixed.basis().front());
  const GenSet combined = g.with_mode(Mode::solenoid).with_generator(a);
  OrbitResult orbit = vector_orbit(combined, out.chi);
  if (!orbit.finite) throw NormalizationSuspect("combined orbit is infinite; a does not normalize the group");
  out.orbit = std::move(orbit.orbit);
  return out;
}

std::optional<Subspace> probe_irreducible(const GenSet& g, std::size_t trials, std::uint64_t seed) {
  const std::size_t r = g.dim();
  if (r <= 1) return std::nullopt;
  auto spin = [&](const QVec& v) -> std::optional<Subspace> {
    if (is_zero(v)) return std::nullopt;
    Subspace s = invariant_closure(Subspace::span({v}, r), g.gens());
    if (!s.is_full()) return s;
    return std::nullopt;
  };
  for (std::size_t i = 0; i < r; ++i) {
    if (auto s = spin(unit_vector(r, i))) return s;
  }
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<int> coord(-5, 5);
  for (std::size_t t = 0; t < trials; ++t) {
    QVec v(r);
    for (auto& x : v) x = coord(rng);
    if (auto s = spin(v)) return s;
  }
  return std::nullopt;
}

}  // namespace soldyn
