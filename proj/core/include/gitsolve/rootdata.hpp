#pragma once

// Root data of the simple algebraic groups: Dynkin classification, Cartan
// matrices, the character lattice M and the one-parameter-subgroup lattice
// N, their pairing, and Weyl group actions.
//
// Conventions used throughout the library:
//   * cartan[i][j] = 2(a_i, a_j) / (a_j, a_j) = <a_i, a_j^v>. Row i is the
//     simple root a_i written in fundamental-weight coordinates, and
//     s_j(a_i) = a_i - cartan[i][j] a_j.
//   * Characters (Weight) are stored in the fundamental-weight basis of M.
//   * One-parameter subgroups are stored in the fundamental-coweight basis
//     of N, so the closed fundamental chamber is the non-negative orthant.
//   * Simple roots are numbered as in Bourbaki.

#include <compare>
#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "gitsolve/rational.hpp"

namespace gitsolve::rootdata {

struct DynkinType {
  char letter = 'A';
  int rank = 1;

  // Accepts "A2", "b3", "E8", ... Throws ParseError on anything else,
  // including valid letters with an invalid rank.
  static DynkinType parse(std::string_view text);

  std::string name() const { return std::string(1, letter) + std::to_string(rank); }
  auto operator<=>(const DynkinType&) const = default;
};

// Throws ParseError naming the pair when (letter, rank) is not a Dynkin type.
void validate(const DynkinType& t);

struct Weight {
  IntVector coeffs;

  std::size_t rank() const { return coeffs.size(); }
  auto operator<=>(const Weight&) const = default;
};

class OneParameterSubgroup {
 public:
  OneParameterSubgroup() = default;
  // Divides by the gcd; the direction is kept, so (-2, 4) becomes (-1, 2).
  explicit OneParameterSubgroup(IntVector coweight_coeffs);
  // Positive rescaling of a rational coweight vector to a primitive integer one.
  static OneParameterSubgroup from_rational(std::span<const Rational> coweight_coeffs);

  const IntVector& coeffs() const { return coeffs_; }
  std::size_t rank() const { return coeffs_.size(); }
  bool is_zero() const;
  bool in_fundamental_chamber() const;

  auto operator<=>(const OneParameterSubgroup&) const = default;

 private:
  IntVector coeffs_;
};

enum class CoordSystem {
  FundamentalWeight,    // M
  SimpleRoot,           // M
  L,                    // M, type A only, length r+1
  FundamentalCoweight,  // N
  Coroot,               // N
  H,                    // N, type A only, length r+1, entries sum to zero
  T,                    // N, type A only: basis T_i = H_i - H_{i+1} (the simple coroots)
};

std::string_view to_string(CoordSystem c);

class SimpleGroup {
 public:
  SimpleGroup(char letter, int rank);

  const DynkinType& dynkin() const { return type_; }
  char group_type() const { return type_.letter; }
  int rnk() const { return type_.rank; }
  std::string name() const { return type_.name(); }

  const IntMatrix& cartan() const { return cartan_; }
  const RationalMatrix& cartan_inverse() const { return cartan_inv_; }

  // Table-style simple roots: Euclidean coordinates for A-D and F4, fundamental
  // weight coordinates for E and G2.
  const std::vector<RationalVector>& simple_roots_display() const { return display_roots_; }
  CoordSystem display_root_coordinates() const { return display_coords_; }

  // Fundamental coweights in the simple-coroot basis, cleared to primitive
  // integer vectors. Their non-negative span is the fundamental chamber.
  const IntMatrix& chamber_generators() const { return chamber_gens_; }

  // s_i as integer matrices acting on fundamental-weight column vectors.
  const std::vector<IntMatrix>& weyl_generators() const { return weyl_gens_; }

  // Positive roots in fundamental-weight coordinates, sorted by height.
  const std::vector<Weight>& positive_roots() const { return positive_roots_; }

  Weight reflect(int i, const Weight& w) const;
  IntVector reflect_coweight(int i, std::span<const std::int64_t> coweight) const;
  OneParameterSubgroup reflect(int i, const OneParameterSubgroup& lam) const;

  // Coordinates of w in the simple-root basis (solves cartan^T x = w).
  RationalVector root_coordinates(const Weight& w) const;

  // Non-fatal notes about the group (e.g. D2 is only semisimple).
  const std::vector<std::string>& warnings() const { return warnings_; }

 private:
  DynkinType type_;
  IntMatrix cartan_;
  RationalMatrix cartan_inv_;
  std::vector<RationalVector> display_roots_;
  CoordSystem display_coords_ = CoordSystem::FundamentalWeight;
  IntMatrix chamber_gens_;
  std::vector<IntMatrix> weyl_gens_;
  std::vector<Weight> positive_roots_;
  std::vector<std::string> warnings_;
};

SimpleGroup make_group(char letter, int rank);
SimpleGroup make_group(std::string_view name);

IntMatrix cartan_matrix(const DynkinType& t);

const IntMatrix& fundamental_chamber_generators(const SimpleGroup& g);

// <chi, lam>. Rational in general; an integer whenever lam lies in the
// coroot lattice. Throws DomainError on a rank mismatch.
Rational pairing(const SimpleGroup& g, const Weight& chi, const OneParameterSubgroup& lam);
Rational pairing(const SimpleGroup& g, const Weight& chi, std::span<const Rational> coweight);

// Breadth-first closure under the simple reflections. Sorted ascending.
std::vector<Weight> weyl_orbit(const SimpleGroup& g, const Weight& w,
                               std::uint64_t guard = 1'000'000);

// |W| from the degree product formula.
std::uint64_t weyl_group_order_formula(const DynkinType& t);

// |W| by enumerating the orbit of rho (a regular orbit). Throws
// ResourceGuardError once more than `guard` elements are seen.
std::uint64_t enumerate_weyl_group_order(const SimpleGroup& g, std::uint64_t guard);

// Enumerates when the group is small enough, otherwise uses the formula.
std::uint64_t weyl_group_order(const SimpleGroup& g, std::uint64_t guard = 1'000'000);

Weight dominant_representative(const SimpleGroup& g, Weight w);
bool is_dominant(const Weight& w);

// Exact change of basis. Throws DomainError when the systems live in
// different lattices, when an H/L/T system is requested outside type A, or
// when an H vector does not sum to zero.
RationalVector convert_coordinates(const SimpleGroup& g, std::span<const Rational> v,
                                   CoordSystem from, CoordSystem to);

// L-coordinates of a character with the given coordinate sum (type A).
// The result is integral when the weight is congruent to the degree.
RationalVector to_l_form(const SimpleGroup& g, const Weight& w, std::int64_t degree);

// H-coordinates of a one-parameter subgroup, cleared to a primitive integer
// vector (type A).
IntVector to_h_form(const SimpleGroup& g, const OneParameterSubgroup& lam);

}  // namespace gitsolve::rootdata
