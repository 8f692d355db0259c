#include <gtest/gtest.h>

#include <random>
#include <set>

#include "gitsolve/errors.hpp"
#include "gitsolve/exactgeom.hpp"
#include "gitsolve/gitsolver.hpp"
#include "gitsolve/repsupport.hpp"
#include "oracles.hpp"

using namespace gitsolve;
using namespace gitsolve::exactgeom;

namespace {

RationalMatrix identity(std::size_t n) {
  RationalMatrix m(n, RationalVector(n, 0));
  for (std::size_t i = 0; i < n; ++i) m[i][i] = 1;
  return m;
}

RationalVector q(std::initializer_list<long> xs) {
  RationalVector v;
  for (auto x : xs) v.emplace_back(x);
  return v;
}

int sign_of(const Rational& x) { return sgn(x); }

}  // namespace

TEST(LinearAlgebra, RankKernelSolveInverse) {
  const RationalMatrix a{q({1, 2, 3}), q({2, 4, 6}), q({0, 1, 1})};
  EXPECT_EQ(rank(a), 2u);
  const auto k = kernel(a, 3);
  ASSERT_EQ(k.size(), 1u);
  EXPECT_TRUE(is_zero(multiply(a, k[0])));
  const auto x = solve(a, q({6, 12, 2}), 3);
  ASSERT_TRUE(x);
  EXPECT_EQ(multiply(a, *x), q({6, 12, 2}));
  EXPECT_FALSE(solve(a, q({1, 0, 0}), 3));
  const RationalMatrix b{q({2, -1}), q({-1, 2})};
  const auto inv = inverse(b);
  EXPECT_EQ(inv[0][0], Rational(2, 3));
  EXPECT_EQ(inv[0][1], Rational(1, 3));
  EXPECT_EQ(transpose(RationalMatrix{q({1, 2})}), (RationalMatrix{q({1}), q({2})}));
}

TEST(LinearAlgebra, KernelOfEmptyMatrixIsWholeSpace) {
  EXPECT_EQ(kernel({}, 3).size(), 3u);
}

TEST(LpFeasible, StrictSystems) {
  ConeSystem sys;
  sys.dim = 2;
  sys.strict = {q({1, 0}), q({-1, 1})};
  const auto x = lp_feasible(sys);
  ASSERT_TRUE(x);
  EXPECT_TRUE(satisfies(sys, *x));
  sys.strict.push_back(q({0, -1}));
  EXPECT_FALSE(lp_feasible(sys));
}

TEST(LpFeasible, EqualitiesAndWeak) {
  ConeSystem sys;
  sys.dim = 3;
  sys.equalities = {q({1, 1, 1})};
  sys.weak = {q({1, 0, 0}), q({0, 1, 0})};
  sys.strict = {q({1, -1, 0})};
  const auto x = lp_feasible(sys);
  ASSERT_TRUE(x);
  EXPECT_TRUE(satisfies(sys, *x));
  EXPECT_GT((*x)[0], 0);
  EXPECT_LT((*x)[2], 0);

  ConeSystem none;
  none.dim = 2;
  none.equalities = {q({1, 0}), q({0, 1})};
  none.strict = {q({1, 1})};
  EXPECT_FALSE(lp_feasible(none));
}

TEST(LpFeasible, EmptySystemIsFeasible) {
  ConeSystem sys;
  sys.dim = 2;
  EXPECT_TRUE(lp_feasible(sys));
}

TEST(RelativeInterior, Examples) {
  EXPECT_TRUE(zero_in_relative_interior({q({0, 0})}));
  EXPECT_TRUE(zero_in_relative_interior({q({1, 0}), q({-1, 0})}));
  EXPECT_FALSE(zero_in_relative_interior({q({1, 0}), q({0, 1})}));
  EXPECT_TRUE(zero_in_relative_interior({q({1, 0}), q({0, 1}), q({-1, -1})}));
  // Origin on an edge of the triangle.
  EXPECT_FALSE(zero_in_relative_interior({q({1, 0}), q({-1, 0}), q({0, 1})}));
  EXPECT_FALSE(zero_in_relative_interior({q({1, 1})}));
  EXPECT_THROW(zero_in_relative_interior({}), std::invalid_argument);
}

TEST(RelativeInterior, AgreesWithFacetOracle) {
  std::mt19937 rng(2024);
  int positives = 0;
  for (int trial = 0; trial < 400; ++trial) {
    const auto pts = oracles::random_point_set(rng);
    const bool expected = oracles::zero_in_relint_by_facets(pts);
    positives += expected ? 1 : 0;
    ASSERT_EQ(zero_in_relative_interior(pts), expected) << "trial " << trial;
  }
  // The generator must exercise both outcomes.
  EXPECT_GT(positives, 20);
  EXPECT_LT(positives, 380);
}

TEST(Arrangement, OneLineInThePlane) {
  const RationalMatrix normals{q({1, -1})};
  const auto cells = arrangement_cells(normals, {}, 2);
  ASSERT_EQ(cells.size(), 2u);
  const auto rays = arrangement_rays(normals, {}, 2);
  ASSERT_EQ(rays.size(), 2u);
  for (const auto& r : rays) {
    EXPECT_EQ(r.kind, FaceKind::Ray);
    EXPECT_EQ(r.zero_set, (std::vector<std::size_t>{0}));
  }
}

TEST(Arrangement, NoNormalsGivesOneCell) {
  const auto cells = arrangement_cells({}, {}, 3);
  ASSERT_EQ(cells.size(), 1u);
  EXPECT_EQ(cells[0].kind, FaceKind::Cell);
  const auto chamber = identity(2);
  EXPECT_EQ(arrangement_cells({}, chamber, 2).size(), 1u);
  EXPECT_EQ(arrangement_rays({}, chamber, 2).size(), 2u);
}

TEST(Arrangement, GenericLinesThroughQuadrant) {
  // k lines through the origin with normals (k_i, -1) cut the positive
  // quadrant into k + 1 sectors.
  const auto chamber = identity(2);
  for (int k = 0; k <= 6; ++k) {
    RationalMatrix normals;
    for (int i = 1; i <= k; ++i) normals.push_back(q({i, -1}));
    // Duplicates and scalar multiples must not create new faces.
    if (k > 0) normals.push_back(q({-2, 2}));
    const auto cells = arrangement_cells(normals, chamber, 2);
    EXPECT_EQ(cells.size(), static_cast<std::size_t>(k + 1)) << "k=" << k;
    const auto rays = arrangement_rays(normals, chamber, 2);
    EXPECT_EQ(rays.size(), static_cast<std::size_t>(k + 2)) << "k=" << k;
  }
}

TEST(Arrangement, WitnessesAreConsistent) {
  std::mt19937 rng(99);
  std::uniform_int_distribution<int> coord(-3, 3);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t dim = 2 + static_cast<std::size_t>(trial % 2);
    RationalMatrix normals;
    for (int i = 0; i < 5; ++i) {
      RationalVector n(dim);
      for (auto& x : n) x = coord(rng);
      normals.push_back(n);
    }
    const auto chamber = identity(dim);
    for (const auto& f : arrangement_cells(normals, chamber, dim)) {
      EXPECT_EQ(f.kind, FaceKind::Cell);
      for (std::size_t i = 0; i < normals.size(); ++i) {
        EXPECT_EQ(sign_of(dot(normals[i], f.point)), f.signs[i]);
        if (!is_zero(normals[i])) EXPECT_NE(f.signs[i], 0);
      }
      for (const auto& x : f.point) EXPECT_GT(x, 0);
    }
    for (const auto& f : arrangement_rays(normals, chamber, dim)) {
      EXPECT_FALSE(is_zero(f.point));
      for (const auto& x : f.point) EXPECT_GE(x, 0);
      for (std::size_t i = 0; i < normals.size(); ++i)
        EXPECT_EQ(sign_of(dot(normals[i], f.point)), f.signs[i]);
      for (auto z : f.zero_set) EXPECT_EQ(f.signs[z], 0);
    }
  }
}

TEST(Arrangement, CellSignVectorsAreDistinct) {
  const RationalMatrix normals{q({1, 0, -1}), q({0, 1, -1}), q({1, -1, 0}), q({1, 1, -3})};
  const auto cells = arrangement_cells(normals, {}, 3);
  std::set<std::vector<int>> seen;
  for (const auto& c : cells) EXPECT_TRUE(seen.insert(c.signs).second);
}

TEST(Arrangement, CellGuard) {
  RationalMatrix normals;
  for (int i = 1; i <= 8; ++i) normals.push_back(q({i, -1}));
  EXPECT_THROW(arrangement_cells(normals, {}, 2, 4), ResourceGuardError);
}

TEST(Arrangement, A2ThreeOmegaOneConfiguration) {
  const auto g = rootdata::make_group('A', 2);
  const auto p = solver::new_problem(g, repsupport::parse_highest_weight(g, "3,0,0"), false);
  bool has_01 = false, has_10 = false;
  for (const auto& r : p.rays()) {
    if (r.point == q({0, 1})) has_01 = true;
    if (r.point == q({1, 0})) has_10 = true;
  }
  EXPECT_TRUE(has_01);
  EXPECT_TRUE(has_10);
  // The coweight (1, 2) lies on no weight hyperplane and so is inside some cell.
  bool found = false;
  for (const auto& c : p.cells()) {
    bool same = true;
    for (std::size_t i = 0; i < p.normals().size(); ++i) {
      if (sign_of(dot(p.normals()[i], q({1, 2}))) != c.signs[i]) same = false;
    }
    found = found || same;
  }
  EXPECT_TRUE(found);
}

TEST(ArrangementFaces, QuadrantWithDiagonal) {
  // Faces of the closed quadrant cut by x = y: two sectors and three rays.
  const RationalMatrix normals{q({1, -1})};
  const auto faces = arrangement_faces(normals, identity(2), 2);
  ASSERT_EQ(faces.size(), 3u);  // sign vectors -, 0, +
  int rays = 0, cells = 0;
  for (const auto& f : faces) {
    rays += f.kind == FaceKind::Ray;
    cells += f.kind == FaceKind::Cell;
  }
  EXPECT_EQ(rays, 1);
  EXPECT_EQ(cells, 2);
}

TEST(ArrangementFaces, ThreeCoordinatePlanesInTheWholeSpace) {
  const RationalMatrix normals{q({1, 0, 0}), q({0, 1, 0}), q({0, 0, 1})};
  // Every sign vector except the origin: 3^3 - 1.
  EXPECT_EQ(arrangement_faces(normals, {}, 3).size(), 26u);
  // Lines through the origin leave a nonzero common kernel.
  const RationalMatrix two{q({1, 0, 0}), q({0, 1, 0})};
  EXPECT_EQ(arrangement_faces(two, {}, 3).size(), 9u);
}

TEST(ArrangementFaces, ContainRaysAndCellsSignVectors) {
  std::mt19937 rng(17);
  std::uniform_int_distribution<int> coord(-2, 2);
  for (int trial = 0; trial < 30; ++trial) {
    RationalMatrix normals;
    for (int i = 0; i < 4; ++i) normals.push_back(q({coord(rng), coord(rng), coord(rng)}));
    const auto chamber = identity(3);
    const auto faces = arrangement_faces(normals, chamber, 3);
    std::set<std::vector<int>> face_signs;
    for (const auto& f : faces) {
      EXPECT_TRUE(face_signs.insert(f.signs).second);
      EXPECT_FALSE(is_zero(f.point));
      for (const auto& x : f.point) EXPECT_GE(x, 0);
    }
    for (const auto& r : arrangement_rays(normals, chamber, 3)) EXPECT_TRUE(face_signs.count(r.signs));
    for (const auto& c : arrangement_cells(normals, chamber, 3)) EXPECT_TRUE(face_signs.count(c.signs));
  }
}

TEST(ArrangementFaces, Guard) {
  const RationalMatrix normals{q({1, 0, 0}), q({0, 1, 0}), q({0, 0, 1})};
  EXPECT_THROW(arrangement_faces(normals, {}, 3, 10), ResourceGuardError);
}
