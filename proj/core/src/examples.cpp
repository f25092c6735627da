#include "soldyn/examples.hpp"

#include <stdexcept>

namespace soldyn::examples {

RatMatrix tower_alpha(std::size_t k) {
  if (k == 0) throw std::invalid_argument("tower_alpha requires k >= 1");
  RatMatrix m(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i; j < k; ++j) m(i, j) = 1;
  return m;
}

RatMatrix gamma_plus_lift(const RatMatrix& a, const QVec& w) {
  if (!a.is_square() || w.size() != a.dim()) throw std::invalid_argument("translation length must match the matrix");
  if (!a.is_invertible()) throw SingularMatrix("gamma_plus_lift requires an invertible matrix");
  const std::size_t n = a.dim();
  RatMatrix m(n + 1, n + 1);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) m(i, j) = a(i, j);
    m(i, n) = w[i];
  }
  m(n, n) = 1;
  return m;
}

GenSet gamma_plus_genset(const GenSet& base, const std::vector<QVec>& translations) {
  bool any_nonzero = false;
  for (const auto& t : translations) any_nonzero = any_nonzero || !is_zero(t);
  if (!any_nonzero) throw std::invalid_argument("gamma_plus_genset needs at least one nonzero translation");
  const std::size_t n = base.dim();
  std::vector<RatMatrix> gens;
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < base.size(); ++i) {
    gens.push_back(gamma_plus_lift(base.gen(i), QVec(n, Rat(0))));
    labels.push_back(base.label(i));
  }
  const RatMatrix id = RatMatrix::identity(n);
  for (std::size_t i = 0; i < translations.size(); ++i) {
    gens.push_back(gamma_plus_lift(id, translations[i]));
    labels.push_back("t" + std::to_string(i + 1));
  }
  return GenSet(n + 1, base.mode(), std::move(gens), std::move(labels));
}

RatMatrix golden_mean() { return {{1, 1}, {1, 0}}; }
RatMatrix rotation_order4() { return {{0, -1}, {1, 0}}; }
RatMatrix unipotent2() { return {{1, 1}, {0, 1}}; }

std::vector<RatMatrix> heisenberg_pair() {
  return {RatMatrix{{1, 1, 0}, {0, 1, 0}, {0, 0, 1}}, RatMatrix{{1, 0, 0}, {0, 1, 1}, {0, 0, 1}}};
}

}  // namespace soldyn::examples
