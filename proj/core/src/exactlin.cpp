#include "soldyn/exactlin.hpp"

namespace soldyn {

RrefResult rref(const std::vector<QVec>& rows, std::size_t cols) {
  Subspace s = Subspace::span(rows, cols);
  const std::size_t r = s.dim();
  return {std::move(s), r};
}

RrefResult rref(const RatMatrix& m) { return rref(m.row_list(), m.cols()); }

std::size_t rank(const RatMatrix& m) { return rref(m).rank; }

Subspace kernel(const RatMatrix& m) {
  const Subspace rows = rref(m).row_space;
  const auto free = rows.non_pivots();
  const auto& piv = rows.pivots();
  std::vector<QVec> basis;
  basis.reserve(free.size());
  for (std::size_t f : free) {
    QVec v(m.cols(), Rat(0));
    v[f] = 1;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -rows.basis()[i][f];
    basis.push_back(std::move(v));
  }
  return Subspace::span(basis, m.cols());
}

Polynomial charpoly(const RatMatrix& m) {
  if (!m.is_square()) throw std::invalid_argument("charpoly of non-square matrix");
  const std::size_t n = m.dim();
  std::vector<Rat> c(n + 1, Rat(0));
  c[n] = 1;
  RatMatrix acc = RatMatrix::identity(n);  // N_{k-1}
  for (std::size_t k = 1; k <= n; ++k) {
    const RatMatrix am = m * acc;
    c[n - k] = -am.trace() / Rat(static_cast<long>(k));
    acc = am;
    for (std::size_t i = 0; i < n; ++i) acc(i, i) += c[n - k];
  }
  return Polynomial(std::move(c));
}

Subspace invariant_core(const Subspace& seed, std::span<const RatMatrix> gens) {
  std::vector<RatMatrix> inverses;
  inverses.reserve(gens.size());
  for (const auto& g : gens) inverses.push_back(g.inverse());
  Subspace v = seed;
  while (!v.is_zero()) {
    Subspace next = v;
    for (std::size_t i = 0; i < gens.size() && !next.is_zero(); ++i) {
      next = next.intersect(v.image(gens[i])).intersect(v.image(inverses[i]));
    }
    if (next.dim() == v.dim()) break;
    v = std::move(next);
  }
  return v;
}

Subspace invariant_closure(const Subspace& start, std::span<const RatMatrix> gens) {
  Subspace v = start;
  while (true) {
    Subspace next = v;
    for (const auto& g : gens) next = next + v.image(g);
    if (next.dim() == v.dim()) return v;
    v = std::move(next);
  }
}

RatMatrix restrict_action(const RatMatrix& m, const Subspace& v) {
  if (!m.is_square() || m.dim() != v.ambient_dim()) throw std::invalid_argument("matrix does not act on the subspace's ambient space");
  std::vector<QVec> cols;
  cols.reserve(v.dim());
  for (const auto& b : v.basis()) {
    const QVec w = m.apply(b);
    if (!v.contains(w)) throw NotInvariant("subspace is not invariant under the matrix");
    cols.push_back(v.coordinates(w));
  }
  return RatMatrix::from_columns(cols, v.dim());
}

RatMatrix quotient_action(const RatMatrix& m, const Subspace& v) {
  if (!m.is_square() || m.dim() != v.ambient_dim()) throw std::invalid_argument("matrix does not act on the subspace's ambient space");
  if (!v.is_invariant(m)) throw NotInvariant("subspace is not invariant under the matrix");
  const auto free = v.non_pivots();
  std::vector<QVec> cols;
  cols.reserve(free.size());
  for (std::size_t f : free) cols.push_back(v.quotient_coordinates(m.column(f)));
  return RatMatrix::from_columns(cols, free.size());
}

}  // namespace soldyn
