#pragma once

// Search for a single ergodic element inside an ergodic nilpotent group.

#include "soldyn/genset.hpp"
#include "soldyn/groupdyn.hpp"
#include "soldyn/subspace.hpp"

#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace soldyn {

struct NondistalPick {
  Word element;
  /// k such that element lies in level k-1 and level k acts distally.
  std::size_t level = 0;
};

/// Walks the commutator levels from the deepest to the shallowest and, within
/// level k-1, enumerates words over its generators up to `max_len`. Returns
/// the first element that is not distal while level k is distal, or nullopt
/// (every element tried is distal). Letters refer to the generators of g.
std::optional<NondistalPick> find_nondistal_element(const GenSet& g, const LowerCentralSeries& series,
                                                    std::size_t max_len);

struct SearchLimits {
  /// Word length for the non-distal element search and the exhaustive fallback.
  std::size_t word_cap = 4;
  /// Largest j tried in the alpha^j * beta combination step.
  std::size_t power_cap = 8;
  /// Class cap handed to verify_nilpotent; dimension when unset.
  std::optional<std::size_t> class_cap;
};

/// One step of the filtration: `quotient_dual` is the annihilator of K_i,
/// i.e. the dual of B_r / K_i. The steps run from K_1 outward, so these
/// subspaces strictly decrease and the last one is {0}.
struct FiltrationStep {
  Subspace quotient_dual;
  Word alpha;
  std::size_t level = 0;
};

struct ErgodicSearchResult {
  std::optional<Word> found;
  std::vector<FiltrationStep> filtration;
  /// True when the constructive path failed and the exhaustive scan found the word.
  bool from_fallback = false;
  std::vector<std::string> diagnostics;
};

class NotErgodicGroup : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class NotNilpotent : public std::runtime_error {
 public:
  explicit NotNilpotent(const std::string& what, std::optional<Word> witness = std::nullopt)
      : std::runtime_error(what), witness_(std::move(witness)) {}
  const std::optional<Word>& witness() const noexcept { return witness_; }

 private:
  std::optional<Word> witness_;
};

class CapsExhausted : public std::runtime_error {
 public:
  CapsExhausted(const std::string& what, ErgodicSearchResult partial)
      : std::runtime_error(what), partial_(std::move(partial)) {}
  const ErgodicSearchResult& partial() const noexcept { return partial_; }

 private:
  ErgodicSearchResult partial_;
};

/// Builds the ergodic/distal filtration from non-distal elements, then
/// combines bottom-up by trying alpha_i^j * beta for j = 0..power_cap.
/// Falls back to an exhaustive scan of words up to word_cap. A returned word
/// is always re-checked with is_ergodic_auto on the full space.
ErgodicSearchResult find_ergodic_nilpotent(const GenSet& g, const SearchLimits& limits = {});

}  // namespace soldyn
