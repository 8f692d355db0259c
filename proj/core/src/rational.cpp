#include "gitsolve/rational.hpp"

#include <limits>
#include <numeric>

#include "gitsolve/errors.hpp"

namespace gitsolve {

RationalVector to_rational(std::span<const std::int64_t> v) {
  RationalVector out;
  out.reserve(v.size());
  for (auto x : v) out.emplace_back(static_cast<long>(x));
  return out;
}

IntVector primitive_integer(std::span<const Rational> v) {
  mpz_class lcm_den = 1;
  for (const auto& q : v) {
    if (q != 0) mpz_lcm(lcm_den.get_mpz_t(), lcm_den.get_mpz_t(), q.get_den_mpz_t());
  }
  std::vector<mpz_class> scaled;
  scaled.reserve(v.size());
  mpz_class g = 0;
  for (const auto& q : v) {
    mpz_class n = q.get_num() * (lcm_den / q.get_den());
    mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), n.get_mpz_t());
    scaled.push_back(std::move(n));
  }
  IntVector out(v.size(), 0);
  if (g == 0) return out;
  for (std::size_t i = 0; i < v.size(); ++i) {
    mpz_class n = scaled[i] / g;
    if (!n.fits_slong_p()) throw DomainError("primitive_integer: entry exceeds 64-bit range");
    out[i] = n.get_si();
  }
  return out;
}

IntVector primitive_line(std::span<const Rational> v) {
  IntVector out = primitive_integer(v);
  for (auto x : out) {
    if (x == 0) continue;
    if (x < 0) {
      for (auto& y : out) y = -y;
    }
    break;
  }
  return out;
}

std::int64_t to_int64(const Rational& q) {
  if (q.get_den() != 1 || !q.get_num().fits_slong_p()) {
    throw DomainError("value " + q.get_str() + " is not a 64-bit integer");
  }
  return q.get_num().get_si();
}

Rational dot(std::span<const Rational> a, std::span<const Rational> b) {
  Rational s = 0;
  for (std::size_t i = 0; i < a.size() && i < b.size(); ++i) s += a[i] * b[i];
  return s;
}

bool is_zero(std::span<const Rational> v) {
  for (const auto& q : v) {
    if (q != 0) return false;
  }
  return true;
}

std::string to_string(const Rational& q) { return q.get_str(); }

std::string to_string(std::span<const Rational> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += v[i].get_str();
  }
  return s + ")";
}

std::string to_string(std::span<const std::int64_t> v) {
  std::string s = "(";
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (i) s += ", ";
    s += std::to_string(v[i]);
  }
  return s + ")";
}

}  // namespace gitsolve
