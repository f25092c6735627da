#include "soldyn/ergfind.hpp"

#include "soldyn/autdyn.hpp"
#include "soldyn/exactlin.hpp"

#include <map>

namespace soldyn {

namespace {

// Expands a word over level generators into a word over the generators of g.
Word expand(const std::vector<Word>& level_gens, const Word& over_level, std::size_t dim) {
  Word out = identity_word(dim);
  for (int l : over_level.letters) {
    const Word& base = level_gens[static_cast<std::size_t>(std::abs(l)) - 1];
    out = concat(out, l > 0 ? base : inverse_word(base));
  }
  return out;
}

std::vector<RatMatrix> matrices_of(const std::vector<Word>& words) {
  std::vector<RatMatrix> out;
  out.reserve(words.size());
  for (const auto& w : words) out.push_back(w.matrix);
  return out;
}

bool level_is_distal(const LowerCentralSeries& series, std::size_t k, std::size_t dim) {
  const auto gens = series.level_generators(k);
  if (gens.empty()) return true;
  return distal_series_group(GenSet(dim, Mode::solenoid, matrices_of(gens))).distal;
}

class Search {
 public:
  Search(const GenSet& g, const SearchLimits& limits, ErgodicSearchResult& result)
      : g_(g), limits_(limits), result_(result) {}

  // Returns a word (over g's generators, full matrix) whose action on the
  // invariant subspace u has no root-of-unity eigenvalue.
  std::optional<Word> solve(const Subspace& u) {
    const std::size_t r = g_.dim();
    if (u.is_zero()) return identity_word(r);
    const GenSet gu = g_.restricted_to(u);
    const NilpotencyCheck nil = verify_nilpotent(gu, limits_.class_cap.value_or(r));
    if (!nil.nilpotent) {
      note("restriction to a " + std::to_string(u.dim()) + "-dim quotient dual failed the nilpotency check");
      return std::nullopt;
    }
    const auto pick = find_nondistal_element(gu, nil.series, limits_.word_cap);
    if (!pick) {
      note("no non-distal element up to word length " + std::to_string(limits_.word_cap) + " on a " +
           std::to_string(u.dim()) + "-dim quotient dual");
      return std::nullopt;
    }
    const Word alpha = make_word(g_, pick->element.letters);
    const RatMatrix alpha_u = restrict_action(alpha.matrix, u);
    const SplitReport split = ergodic_distal_split(alpha_u);
    const Subspace next = u.embed(split.distal_part());
    for (const auto& m : g_.gens()) {
      if (!next.is_invariant(m)) {
        note("split subspace of " + to_string(g_, alpha) + " is not invariant under the group");
        return std::nullopt;
      }
    }
    result_.filtration.push_back({next, alpha, pick->level});
    if (next.is_zero()) return alpha;

    const auto beta = solve(next);
    if (!beta) return std::nullopt;
    Word candidate = *beta;
    for (std::size_t j = 0; j <= limits_.power_cap; ++j) {
      if (is_ergodic_auto(restrict_action(candidate.matrix, u)).ergodic) return candidate;
      candidate = concat(alpha, candidate);
    }
    note("no j <= " + std::to_string(limits_.power_cap) + " made alpha^j * beta ergodic on a " +
         std::to_string(u.dim()) + "-dim quotient dual");
    return std::nullopt;
  }

 private:
  void note(std::string msg) { result_.diagnostics.push_back(std::move(msg)); }

  const GenSet& g_;
  const SearchLimits& limits_;
  ErgodicSearchResult& result_;
};

}  // namespace

std::optional<NondistalPick> find_nondistal_element(const GenSet& g, const LowerCentralSeries& series,
                                                    std::size_t max_len) {
  const std::size_t r = g.dim();
  for (std::size_t k = series.depth(); k >= 1; --k) {
    if (!level_is_distal(series, k, r)) continue;
    const auto level_gens = series.level_generators(k - 1);
    if (level_gens.empty()) continue;
    WordEnumerator it(matrices_of(level_gens), r, max_len);
    while (auto w = it.next()) {
      if (!is_distal_auto(w->matrix).distal) {
        Word full = expand(level_gens, *w, r);
        return NondistalPick{std::move(full), k};
      }
    }
  }
  return std::nullopt;
}

ErgodicSearchResult find_ergodic_nilpotent(const GenSet& g, const SearchLimits& limits) {
  const NilpotencyCheck nil = verify_nilpotent(g, limits.class_cap);
  if (!nil.nilpotent) {
    throw NotNilpotent("group is not nilpotent of class <= " + std::to_string(nil.class_cap), nil.witness);
  }
  if (!is_ergodic_group(g).ergodic) throw NotErgodicGroup("group action is not ergodic");

  ErgodicSearchResult result;
  Search search(g, limits, result);
  if (auto w = search.solve(Subspace::full(g.dim()))) {
    if (is_ergodic_auto(w->matrix).ergodic) {
      result.found = std::move(*w);
      return result;
    }
    result.diagnostics.push_back("constructive candidate " + to_string(g, *w) + " failed the final ergodicity check");
  }

  result.from_fallback = true;
  WordEnumerator it(g.gens(), g.dim(), limits.word_cap);
  while (auto w = it.next()) {
    if (is_ergodic_auto(w->matrix).ergodic) {
      result.found = std::move(*w);
      return result;
    }
  }
  result.diagnostics.push_back("exhaustive scan up to word length " + std::to_string(limits.word_cap) +
                               " found no ergodic element");
  throw CapsExhausted("search caps exhausted without an ergodic element", std::move(result));
}

}  // namespace soldyn
