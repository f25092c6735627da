#pragma once

#include "soldyn/matrix.hpp"
#include "soldyn/subspace.hpp"

#include <cstddef>
#include <deque>
#include <optional>
#include <string>
#include <string_view>
#include <unordered_set>
#include <vector>

namespace soldyn {

/// Dual lattice Z^r (torus T^r) or Q^r (solenoid B_r).
enum class Mode { torus, solenoid };

std::string_view to_string(Mode mode);
/// Accepts "torus" or "solenoid"; throws std::invalid_argument otherwise.
Mode parse_mode(std::string_view text);

/// A finitely generated group of automorphisms, given by invertible dual matrices.
class GenSet {
 public:
  /// Validates: at least one generator, all square of size dim >= 1 and
  /// invertible (SingularMatrix otherwise), torus mode requires unimodular
  /// integer generators (std::invalid_argument otherwise).
  GenSet(std::size_t dim, Mode mode, std::vector<RatMatrix> gens,
         std::vector<std::string> labels = {});

  /// Same generators acting on an invariant subspace (basis coordinates).
  /// The result is always in solenoid mode.
  GenSet restricted_to(const Subspace& s) const;
  /// Induced action on Q^r / s (non-pivot coordinates). Solenoid mode.
  GenSet quotient_by(const Subspace& s) const;
  GenSet with_mode(Mode mode) const;
  GenSet with_generator(const RatMatrix& extra, std::string label = {}) const;

  std::size_t dim() const noexcept { return dim_; }
  Mode mode() const noexcept { return mode_; }
  std::size_t size() const noexcept { return gens_.size(); }
  const std::vector<RatMatrix>& gens() const noexcept { return gens_; }
  const std::vector<RatMatrix>& inverses() const noexcept { return inverses_; }
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  const RatMatrix& gen(std::size_t i) const { return gens_.at(i); }
  /// Label of generator i, or "g<i+1>" when no labels were given.
  std::string label(std::size_t i) const;

 private:
  struct Unchecked {};
  GenSet(Unchecked, std::size_t dim, std::vector<RatMatrix> gens, std::vector<std::string> labels);

  std::size_t dim_ = 0;
  Mode mode_ = Mode::solenoid;
  std::vector<RatMatrix> gens_;
  std::vector<RatMatrix> inverses_;
  std::vector<std::string> labels_;
};

/// A group element named by a word in the generators.
///
/// Letters are signed 1-based generator indices: +k is generator k-1 and
/// -k its inverse. The product is read left to right, so the matrix of
/// "g1*g2" is G1 * G2.
struct Word {
  std::vector<int> letters;
  RatMatrix matrix;

  std::size_t length() const noexcept { return letters.size(); }
};

RatMatrix evaluate(const GenSet& g, const std::vector<int>& letters);
Word make_word(const GenSet& g, std::vector<int> letters);
Word identity_word(std::size_t dim);
Word inverse(const GenSet& g, const Word& w);
/// a * b
Word concat(const Word& a, const Word& b);
Word inverse_word(const Word& w);
Word power(const Word& w, std::size_t n);
/// [a, b] = a^-1 b^-1 a b
Word commutator(const Word& a, const Word& b);
std::vector<int> inverse_letters(const std::vector<int>& letters);
/// e.g. "g1*g2^-1", "e" for the empty word.
std::string to_string(const GenSet& g, const Word& w);
std::string to_string(const Word& w);

/// Breadth-first enumeration of group elements over an alphabet of matrices.
///
/// Words are freely reduced, visited shortest first and, within a length,
/// in letter order 1, -1, 2, -2, ... Elements are deduplicated by exact
/// matrix equality, so each element is reported once under its first word.
/// The identity (empty word) comes first.
class WordEnumerator {
 public:
  /// `max_len` unset means unbounded.
  WordEnumerator(std::vector<RatMatrix> alphabet, std::size_t dim,
                 std::optional<std::size_t> max_len = std::nullopt);

  std::optional<Word> next();
  std::size_t distinct_count() const noexcept { return seen_.size(); }
  bool exhausted() const noexcept { return started_ && frontier_.empty(); }

 private:
  std::vector<RatMatrix> letters_;  // index 2k: gen k, 2k+1: inverse of gen k
  std::size_t dim_;
  std::optional<std::size_t> max_len_;
  bool started_ = false;
  std::deque<Word> frontier_;
  std::size_t letter_cursor_ = 0;
  std::unordered_set<RatMatrix, RatMatrixHash> seen_;
};

/// All distinct elements reachable by words of length <= max_len, BFS order.
std::vector<Word> element_enumerate(const GenSet& g, std::size_t max_len);

}  // namespace soldyn
