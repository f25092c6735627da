#include "soldyn/autdyn.hpp"

#include "soldyn/cyclo.hpp"
#include "soldyn/exactlin.hpp"

namespace soldyn {

ErgodicityCheck is_ergodic_auto(const RatMatrix& m) {
  const auto order = root_of_unity_eigenvalue(m);
  return {!order.has_value(), order};
}

DistalityCheck is_distal_auto(const RatMatrix& m) {
  const auto qu = is_quasi_unipotent(m);
  return {qu.quasi_unipotent, qu.exponent};
}

Subspace finite_orbit_subspace_auto(const RatMatrix& m) {
  const std::size_t r = m.dim();
  if (r == 0) return Subspace::zero(0);
  return finite_order_kernel(m);
}

SplitReport ergodic_distal_split(const RatMatrix& m) {
  const std::size_t r = m.dim();
  SplitReport report;
  Subspace current = finite_orbit_subspace_auto(m);
  report.chain.push_back(current);
  while (!current.is_full() && !current.is_zero()) {
    const Subspace next_in_quotient = finite_orbit_subspace_auto(quotient_action(m, current));
    if (next_in_quotient.is_zero()) break;
    current = current.quotient_preimage(next_in_quotient);
    report.chain.push_back(current);
  }
  report.ergodic_part_dim = r - current.dim();
  return report;
}

bool torus_validate(const RatMatrix& m) {
  if (!m.is_square() || !m.is_integral()) return false;
  const Rat det = m.determinant();
  return det == 1 || det == -1;
}

AutoVerdict analyze_auto(const RatMatrix& m) {
  if (!m.is_invertible()) throw SingularMatrix("automorphism matrix is singular");
  AutoVerdict v;
  const auto erg = is_ergodic_auto(m);
  const auto dist = is_distal_auto(m);
  v.ergodic = erg.ergodic;
  v.root_of_unity_witness = erg.witness_order;
  v.distal = dist.distal;
  v.unipotence_exponent = dist.unipotence_exponent;
  v.split = ergodic_distal_split(m);
  return v;
}

}  // namespace soldyn
