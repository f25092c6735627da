#pragma once

// Exact rational scalars backed by GMP.

#include <gmpxx.h>

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

namespace soldyn {

using Integer = mpz_class;
/// Always canonical (lowest terms, positive denominator) after any arithmetic.
using Rat = mpq_class;
/// Column vector of rationals; a character of B_r when it lives in Q^r.
using QVec = std::vector<Rat>;

/// Parses "p" or "p/q" (optional leading '-', decimal digits only, q != 0).
/// Throws std::invalid_argument on anything else.
Rat parse_rat(std::string_view text);

/// "p" when the denominator is 1, otherwise "p/q".
std::string to_string(const Rat& q);
std::string to_string(const QVec& v);

bool is_integer(const Rat& q);
bool is_zero(const QVec& v);

QVec unit_vector(std::size_t dim, std::size_t index);

std::size_t hash_value(const Integer& z) noexcept;
std::size_t hash_value(const Rat& q) noexcept;

struct QVecHash {
  std::size_t operator()(const QVec& v) const noexcept;
};

}  // namespace soldyn
