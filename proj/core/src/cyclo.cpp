#include "soldyn/cyclo.hpp"

#include "soldyn/exactlin.hpp"

#include <limits>
#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <stdexcept>

namespace soldyn {

std::uint64_t euler_phi(std::uint64_t n) {
  if (n == 0) return 0;
  std::uint64_t result = n;
  std::uint64_t m = n;
  for (std::uint64_t p = 2; p * p <= m; ++p) {
    if (m % p != 0) continue;
    while (m % p == 0) m /= p;
    result -= result / p;
  }
  if (m > 1) result -= result / m;
  return result;
}

namespace {

bool is_prime(std::uint64_t p) {
  if (p < 2) return false;
  for (std::uint64_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

OrderSet build_order_set(std::size_t r) {
  OrderSet s;
  s.r = r;
  // phi(n) >= sqrt(n / 2), so phi(n) <= r forces n <= 2 r^2.
  const std::uint64_t limit = 2 * static_cast<std::uint64_t>(r) * r + 1;
  for (std::uint64_t n = 1; n <= limit; ++n) {
    if (euler_phi(n) <= r) {
      s.orders.push_back(n);
      s.exponent_M = std::lcm(s.exponent_M, n);
    }
  }
  Integer b = 1;
  for (std::uint64_t p = 2; p <= r + 1; ++p) {
    if (!is_prime(p)) continue;
    std::uint64_t e = 0;
    for (std::uint64_t q = p - 1; q <= r; q *= p) e += r / q;
    Integer pe;
    mpz_ui_pow_ui(pe.get_mpz_t(), p, e);
    b *= pe;
  }
  s.minkowski_B = b;
  return s;
}

}  // namespace

const OrderSet& order_set(std::size_t r) {
  if (r == 0) throw std::invalid_argument("order_set requires r >= 1");
  static std::mutex mu;
  static std::map<std::size_t, std::unique_ptr<OrderSet>> cache;
  std::lock_guard lock(mu);
  auto& slot = cache[r];
  if (!slot) slot = std::make_unique<OrderSet>(build_order_set(r));
  return *slot;
}

std::uint64_t exponent_M(std::size_t r) { return r == 0 ? 1 : order_set(r).exponent_M; }

std::size_t minkowski_cap(std::size_t r) {
  if (r == 0) return 1;
  const Integer& b = order_set(r).minkowski_B;
  if (!b.fits_ulong_p()) return std::numeric_limits<std::size_t>::max();
  return static_cast<std::size_t>(b.get_ui());
}

Polynomial cyclotomic_poly(std::uint64_t n) {
  if (n == 0) throw std::invalid_argument("cyclotomic_poly requires n >= 1");
  static std::mutex mu;
  static std::map<std::uint64_t, Polynomial> cache;
  {
    std::lock_guard lock(mu);
    if (auto it = cache.find(n); it != cache.end()) return it->second;
  }
  Polynomial p = Polynomial::x_pow_minus_one(n);
  for (std::uint64_t d = 1; d < n; ++d) {
    if (n % d != 0) continue;
    auto [q, rem] = divmod(p, cyclotomic_poly(d));
    if (!rem.is_zero()) throw std::logic_error("cyclotomic division left a remainder");
    p = std::move(q);
  }
  std::lock_guard lock(mu);
  cache.emplace(n, p);
  return p;
}

std::optional<std::uint64_t> root_of_unity_eigenvalue(const RatMatrix& m) {
  if (m.dim() == 0) return std::nullopt;
  const Polynomial cp = charpoly(m);
  for (std::uint64_t n : order_set(m.dim()).orders) {
    if (!gcd(cp, cyclotomic_poly(n)).is_one()) return n;
  }
  return std::nullopt;
}

QuasiUnipotence is_quasi_unipotent(const RatMatrix& m) {
  const std::size_t r = m.dim();
  if (r == 0) return {true, 1};
  Polynomial rest = charpoly(m);
  for (std::uint64_t n : order_set(r).orders) {
    const Polynomial phi = cyclotomic_poly(n);
    while (rest.degree() >= phi.degree()) {
      auto [q, rem] = divmod(rest, phi);
      if (!rem.is_zero()) break;
      rest = std::move(q);
    }
    if (rest.degree() == 0) return {true, exponent_M(r)};
  }
  return {false, std::nullopt};
}

Polynomial root_of_unity_factor(const Polynomial& cp, std::size_t r) {
  Polynomial out = Polynomial::constant(1);
  if (r == 0) return out;
  for (std::uint64_t n : order_set(r).orders) {
    const Polynomial phi = cyclotomic_poly(n);
    if (phi.degree() > cp.degree()) continue;
    if (divmod(cp, phi).second.is_zero()) out = out * phi;
  }
  return out;
}

RatMatrix evaluate_at(const Polynomial& p, const RatMatrix& m) {
  const std::size_t r = m.dim();
  RatMatrix acc = RatMatrix::zero(r);
  const RatMatrix id = RatMatrix::identity(r);
  const auto& c = p.coeffs();
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * m + id * *it;
  return acc;
}

bool has_finite_order(const RatMatrix& m) {
  return evaluate_at(root_of_unity_factor(charpoly(m), m.dim()), m).is_zero();
}

Subspace finite_order_kernel(const RatMatrix& m) {
  if (m.dim() == 0) return Subspace::zero(0);
  return kernel(evaluate_at(root_of_unity_factor(charpoly(m), m.dim()), m));
}

}  // namespace soldyn
