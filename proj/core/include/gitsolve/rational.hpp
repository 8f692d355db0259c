#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include <gmpxx.h>

namespace gitsolve {

using Rational = mpq_class;
using RationalVector = std::vector<Rational>;
// Row-major: each inner vector is a row.
using RationalMatrix = std::vector<RationalVector>;

using IntVector = std::vector<std::int64_t>;
using IntMatrix = std::vector<IntVector>;

RationalVector to_rational(std::span<const std::int64_t> v);

// Smallest positive multiple of v with integer entries and gcd 1. The
// direction is preserved; the zero vector maps to zeros.
IntVector primitive_integer(std::span<const Rational> v);

// As above, then flips the sign so the first nonzero entry is positive.
IntVector primitive_line(std::span<const Rational> v);

std::int64_t to_int64(const Rational& q);  // throws DomainError if not integral or out of range

Rational dot(std::span<const Rational> a, std::span<const Rational> b);

bool is_zero(std::span<const Rational> v);

// "p/q" or "p"
std::string to_string(const Rational& q);
std::string to_string(std::span<const Rational> v);  // "(a, b, c)"
std::string to_string(std::span<const std::int64_t> v);

}  // namespace gitsolve
