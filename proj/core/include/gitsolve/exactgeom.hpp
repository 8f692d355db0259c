#pragma once

// Exact rational linear algebra and polyhedral primitives. No floating point.

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "gitsolve/rational.hpp"

namespace gitsolve::exactgeom {

// --- linear algebra -------------------------------------------------------

std::size_t rank(const RationalMatrix& a);

// Basis of {x : a x = 0}; `cols` is needed when `a` has no rows.
RationalMatrix kernel(const RationalMatrix& a, std::size_t cols);

// Some x with a x = b, or nullopt when the system is inconsistent.
std::optional<RationalVector> solve(const RationalMatrix& a, std::span<const Rational> b,
                                    std::size_t cols);

// Throws DomainError when `a` is not square and invertible.
RationalMatrix inverse(const RationalMatrix& a);

RationalMatrix transpose(const RationalMatrix& a);
RationalVector multiply(const RationalMatrix& a, std::span<const Rational> x);

// --- feasibility ----------------------------------------------------------

// A positively homogeneous system over x in Q^dim:
//   e . x == 0 for e in equalities,  w . x >= 0 for weak,  s . x > 0 for strict.
// Every row must have length dim.
struct ConeSystem {
  std::size_t dim = 0;
  RationalMatrix equalities;
  RationalMatrix weak;
  RationalMatrix strict;
};

bool satisfies(const ConeSystem& sys, std::span<const Rational> x);

// Returns a witness satisfying every constraint (strict ones strictly), or
// nullopt if none exists. Strict rows are homogenized to s . x >= 1, which is
// exact because the system is a cone. Phase-one simplex with Bland's rule.
std::optional<RationalVector> lp_feasible(const ConeSystem& sys);

// True iff the origin is a strictly positive combination of all the points,
// i.e. lies in the relative interior of their convex hull. Throws
// DomainError on an empty list.
bool zero_in_relative_interior(const std::vector<RationalVector>& points);

// --- central hyperplane arrangements --------------------------------------

enum class FaceKind { Ray, Cell, Face };

struct ArrangementFaceWitness {
  RationalVector point;               // primitive integer entries
  FaceKind kind = FaceKind::Ray;
  std::vector<std::size_t> zero_set;  // indices into `normals` with n . point == 0
  std::vector<int> signs;             // sign of n . point for every normal
};

// Rays of the arrangement {n^perp} together with the walls of the cone
// {x : c . x >= 0 for c in chamber}, restricted to that cone. Each kernel
// line of a rank dim-1 subset of constraints is oriented into the chamber.
// Sorted by the primitive integer point. Empty when the cone has no interior.
std::vector<ArrangementFaceWitness> arrangement_rays(const RationalMatrix& normals,
                                                     const RationalMatrix& chamber,
                                                     std::size_t dim);

// One interior witness per full-dimensional cell of the arrangement inside
// the open chamber, found by depth-first sign assignment with LP pruning.
// Sorted by sign vector. Throws ResourceGuardError past `max_cells`.
std::vector<ArrangementFaceWitness> arrangement_cells(const RationalMatrix& normals,
                                                      const RationalMatrix& chamber,
                                                      std::size_t dim,
                                                      std::uint64_t max_cells = 1'000'000);

// One relative-interior witness for every nonzero face of the arrangement
// restricted to the closed cone, that is one per realised sign vector. The
// cone must be pointed (rows of full rank) or empty. Kind is Ray or Cell when
// the zero set spans a hyperplane or nothing, Face otherwise.
std::vector<ArrangementFaceWitness> arrangement_faces(const RationalMatrix& normals,
                                                      const RationalMatrix& chamber,
                                                      std::size_t dim,
                                                      std::uint64_t max_faces = 1'000'000);

}  // namespace gitsolve::exactgeom
