#pragma once

// Roots of unity in the spectrum of rational matrices.

#include "soldyn/matrix.hpp"
#include "soldyn/polynomial.hpp"
#include "soldyn/subspace.hpp"

#include <cstdint>
#include <optional>
#include <vector>

namespace soldyn {

std::uint64_t euler_phi(std::uint64_t n);

/// Possible orders of roots of unity that can be eigenvalues of an r x r
/// rational matrix, plus the two universal constants derived from them.
struct OrderSet {
  std::size_t r = 0;
  /// All n with phi(n) <= r, ascending.
  std::vector<std::uint64_t> orders;
  /// lcm(orders): m^M = I for every finite-order m in GL(r, Q).
  std::uint64_t exponent_M = 1;
  /// Minkowski's bound: every finite subgroup of GL(r, Q) has order dividing it.
  Integer minkowski_B = 1;
};

/// Throws std::invalid_argument for r == 0.
const OrderSet& order_set(std::size_t r);

/// Exponent M(r); M(0) is defined as 1.
std::uint64_t exponent_M(std::size_t r);
/// Minkowski's bound saturated to std::size_t, for use as a BFS cap. B(0) = 1.
std::size_t minkowski_cap(std::size_t r);

/// n-th cyclotomic polynomial by exact division of x^n - 1.
Polynomial cyclotomic_poly(std::uint64_t n);

/// Smallest n with Phi_n dividing the characteristic polynomial, if any.
std::optional<std::uint64_t> root_of_unity_eigenvalue(const RatMatrix& m);

struct QuasiUnipotence {
  bool quasi_unipotent = false;
  /// N with (m^N - I) nilpotent; set when quasi_unipotent.
  std::optional<std::uint64_t> exponent;
};

/// Decides whether some power of m is unipotent: the characteristic
/// polynomial must be a product of Phi_n with phi(n) <= r.
QuasiUnipotence is_quasi_unipotent(const RatMatrix& m);

/// gcd(cp, x^M(r) - 1): the product of the distinct Phi_n, phi(n) <= r,
/// dividing cp. Avoids forming x^M - 1.
Polynomial root_of_unity_factor(const Polynomial& cp, std::size_t r);

/// p(m) by Horner's rule.
RatMatrix evaluate_at(const Polynomial& p, const RatMatrix& m);

/// m^M(r) == I, decided as root_of_unity_factor(charpoly(m))(m) == 0.
bool has_finite_order(const RatMatrix& m);

/// ker(m^M(r) - I), computed as the kernel of root_of_unity_factor(charpoly(m))(m).
Subspace finite_order_kernel(const RatMatrix& m);

}  // namespace soldyn
