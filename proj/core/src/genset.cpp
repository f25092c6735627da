#include "soldyn/genset.hpp"

#include "soldyn/autdyn.hpp"
#include "soldyn/exactlin.hpp"

#include <algorithm>
#include <cstdlib>
#include <stdexcept>

namespace soldyn {

std::string_view to_string(Mode mode) { return mode == Mode::torus ? "torus" : "solenoid"; }

Mode parse_mode(std::string_view text) {
  if (text == "torus") return Mode::torus;
  if (text == "solenoid") return Mode::solenoid;
  throw std::invalid_argument("unknown mode '" + std::string(text) + "' (expected torus or solenoid)");
}

GenSet::GenSet(std::size_t dim, Mode mode, std::vector<RatMatrix> gens, std::vector<std::string> labels)
    : dim_(dim), mode_(mode), gens_(std::move(gens)), labels_(std::move(labels)) {
  if (dim_ == 0) throw std::invalid_argument("dimension must be positive");
  if (gens_.empty()) throw std::invalid_argument("a generating set needs at least one generator");
  if (!labels_.empty() && labels_.size() != gens_.size()) {
    throw std::invalid_argument("labels must match the number of generators");
  }
  inverses_.reserve(gens_.size());
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const auto& m = gens_[i];
    if (!m.is_square() || m.dim() != dim_) {
      throw std::invalid_argument("generator " + std::to_string(i + 1) + " is not " +
                                  std::to_string(dim_) + "x" + std::to_string(dim_));
    }
    if (mode_ == Mode::torus && !torus_validate(m)) {
      if (!m.is_invertible()) throw SingularMatrix("generator " + std::to_string(i + 1) + " is singular");
      throw std::invalid_argument("generator " + std::to_string(i + 1) +
                                  " is not a unimodular integer matrix (torus mode)");
    }
    inverses_.push_back(m.inverse());  // throws SingularMatrix
  }
}

GenSet::GenSet(Unchecked, std::size_t dim, std::vector<RatMatrix> gens, std::vector<std::string> labels)
    : dim_(dim), mode_(Mode::solenoid), gens_(std::move(gens)), labels_(std::move(labels)) {
  inverses_.reserve(gens_.size());
  for (const auto& m : gens_) inverses_.push_back(m.inverse());
}

GenSet GenSet::restricted_to(const Subspace& s) const {
  std::vector<RatMatrix> out;
  out.reserve(gens_.size());
  for (const auto& m : gens_) out.push_back(restrict_action(m, s));
  return GenSet(Unchecked{}, s.dim(), std::move(out), labels_);
}

GenSet GenSet::quotient_by(const Subspace& s) const {
  std::vector<RatMatrix> out;
  out.reserve(gens_.size());
  for (const auto& m : gens_) out.push_back(quotient_action(m, s));
  return GenSet(Unchecked{}, dim_ - s.dim(), std::move(out), labels_);
}

GenSet GenSet::with_mode(Mode mode) const { return GenSet(dim_, mode, gens_, labels_); }

GenSet GenSet::with_generator(const RatMatrix& extra, std::string label) const {
  auto gens = gens_;
  gens.push_back(extra);
  auto labels = labels_;
  if (!labels.empty()) labels.push_back(label.empty() ? "g" + std::to_string(gens.size()) : std::move(label));
  return GenSet(dim_, mode_, std::move(gens), std::move(labels));
}

std::string GenSet::label(std::size_t i) const {
  if (i < labels_.size() && !labels_[i].empty()) return labels_[i];
  return "g" + std::to_string(i + 1);
}

RatMatrix evaluate(const GenSet& g, const std::vector<int>& letters) {
  RatMatrix m = RatMatrix::identity(g.dim());
  for (int l : letters) {
    if (l == 0 || static_cast<std::size_t>(std::abs(l)) > g.size()) {
      throw std::out_of_range("word letter " + std::to_string(l) + " out of range");
    }
    const std::size_t k = static_cast<std::size_t>(std::abs(l)) - 1;
    m = m * (l > 0 ? g.gens()[k] : g.inverses()[k]);
  }
  return m;
}

Word make_word(const GenSet& g, std::vector<int> letters) {
  RatMatrix m = evaluate(g, letters);
  return {std::move(letters), std::move(m)};
}

Word identity_word(std::size_t dim) { return {{}, RatMatrix::identity(dim)}; }

std::vector<int> inverse_letters(const std::vector<int>& letters) {
  std::vector<int> out(letters.rbegin(), letters.rend());
  for (int& l : out) l = -l;
  return out;
}

Word inverse(const GenSet& g, const Word& w) { return make_word(g, inverse_letters(w.letters)); }

Word inverse_word(const Word& w) { return {inverse_letters(w.letters), w.matrix.inverse()}; }

Word concat(const Word& a, const Word& b) {
  Word out;
  out.letters = a.letters;
  // free reduction at the seam
  std::size_t skip = 0;
  while (!out.letters.empty() && skip < b.letters.size() && out.letters.back() == -b.letters[skip]) {
    out.letters.pop_back();
    ++skip;
  }
  out.letters.insert(out.letters.end(), b.letters.begin() + static_cast<std::ptrdiff_t>(skip), b.letters.end());
  out.matrix = a.matrix * b.matrix;
  return out;
}

Word power(const Word& w, std::size_t n) {
  Word out = identity_word(w.matrix.dim());
  for (std::size_t i = 0; i < n; ++i) out = concat(out, w);
  return out;
}

Word commutator(const Word& a, const Word& b) {
  return concat(concat(inverse_word(a), inverse_word(b)), concat(a, b));
}

std::string to_string(const GenSet& g, const Word& w) {
  if (w.letters.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += "*";
    const int l = w.letters[i];
    out += g.label(static_cast<std::size_t>(std::abs(l)) - 1);
    if (l < 0) out += "^-1";
  }
  return out;
}

std::string to_string(const Word& w) {
  if (w.letters.empty()) return "e";
  std::string out;
  for (std::size_t i = 0; i < w.letters.size(); ++i) {
    if (i) out += "*";
    const int l = w.letters[i];
    out += "g" + std::to_string(std::abs(l));
    if (l < 0) out += "^-1";
  }
  return out;
}

WordEnumerator::WordEnumerator(std::vector<RatMatrix> alphabet, std::size_t dim,
                               std::optional<std::size_t> max_len)
    : dim_(dim), max_len_(max_len) {
  letters_.reserve(2 * alphabet.size());
  for (auto& m : alphabet) {
    RatMatrix inv = m.inverse();
    letters_.push_back(std::move(m));
    letters_.push_back(std::move(inv));
  }
}

std::optional<Word> WordEnumerator::next() {
  if (!started_) {
    started_ = true;
    Word e = identity_word(dim_);
    seen_.insert(e.matrix);
    frontier_.push_back(e);
    return e;
  }
  while (!frontier_.empty()) {
    const Word& base = frontier_.front();
    if (max_len_ && base.length() >= *max_len_) {
      frontier_.pop_front();
      letter_cursor_ = 0;
      continue;
    }
    while (letter_cursor_ < letters_.size()) {
      const std::size_t idx = letter_cursor_++;
      const int letter = static_cast<int>(idx / 2 + 1) * (idx % 2 == 0 ? 1 : -1);
      if (!base.letters.empty() && base.letters.back() == -letter) continue;
      RatMatrix m = base.matrix * letters_[idx];
      if (!seen_.insert(m).second) continue;
      Word w;
      w.letters = base.letters;
      w.letters.push_back(letter);
      w.matrix = std::move(m);
      frontier_.push_back(w);
      return w;
    }
    frontier_.pop_front();
    letter_cursor_ = 0;
  }
  return std::nullopt;
}

std::vector<Word> element_enumerate(const GenSet& g, std::size_t max_len) {
  WordEnumerator it(g.gens(), g.dim(), max_len);
  std::vector<Word> out;
  while (auto w = it.next()) out.push_back(std::move(*w));
  return out;
}

}  // namespace soldyn
