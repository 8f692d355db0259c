#include <algorithm>
#include <functional>
#include <set>

#include "gitsolve/errors.hpp"
#include "gitsolve/exactgeom.hpp"

namespace gitsolve::exactgeom {
namespace {

int sign(const Rational& q) { return q > 0 ? 1 : (q < 0 ? -1 : 0); }

// Drops zero normals and repeated hyperplanes (positive or negative multiples).
RationalMatrix distinct_hyperplanes(const RationalMatrix& normals) {
  std::set<IntVector> seen;
  RationalMatrix out;
  for (const auto& n : normals) {
    if (is_zero(n)) continue;
    IntVector key = primitive_line(n);
    if (seen.insert(key).second) out.push_back(to_rational(key));
  }
  std::sort(out.begin(), out.end());
  return out;
}

bool in_cone(const RationalMatrix& chamber, std::span<const Rational> x) {
  for (const auto& c : chamber) {
    if (dot(c, x) < 0) return false;
  }
  return true;
}

bool chamber_has_interior(const RationalMatrix& chamber, std::size_t dim) {
  ConeSystem sys;
  sys.dim = dim;
  sys.strict = chamber;
  return lp_feasible(sys).has_value();
}

ArrangementFaceWitness make_witness(const RationalMatrix& normals, RationalVector point,
                                    FaceKind kind) {
  ArrangementFaceWitness w;
  w.point = std::move(point);
  w.kind = kind;
  w.signs.reserve(normals.size());
  for (std::size_t i = 0; i < normals.size(); ++i) {
    const int s = sign(dot(normals[i], w.point));
    w.signs.push_back(s);
    if (s == 0) w.zero_set.push_back(i);
  }
  return w;
}

// Reduces `row` against an echelon basis; returns true if it was independent
// (and then appends the reduced row to the basis).
bool extend_basis(RationalMatrix& basis, std::vector<std::size_t>& pivots, RationalVector row) {
  for (std::size_t b = 0; b < basis.size(); ++b) {
    const Rational f = row[pivots[b]];
    if (f == 0) continue;
    for (std::size_t j = 0; j < row.size(); ++j) row[j] -= f * basis[b][j];
  }
  for (std::size_t j = 0; j < row.size(); ++j) {
    if (row[j] == 0) continue;
    const Rational inv = 1 / row[j];
    for (auto& x : row) x *= inv;
    // Keep earlier basis rows reduced in the new pivot column.
    for (std::size_t b = 0; b < basis.size(); ++b) {
      const Rational f = basis[b][j];
      if (f == 0) continue;
      for (std::size_t k = 0; k < row.size(); ++k) basis[b][k] -= f * row[k];
    }
    basis.push_back(std::move(row));
    pivots.push_back(j);
    return true;
  }
  return false;
}

}  // namespace

std::vector<ArrangementFaceWitness> arrangement_rays(const RationalMatrix& normals,
                                                     const RationalMatrix& chamber,
                                                     std::size_t dim) {
  if (dim == 0 || !chamber_has_interior(chamber, dim)) return {};
  RationalMatrix constraints = distinct_hyperplanes(normals);
  for (const auto& c : chamber) {
    if (!is_zero(c)) constraints.push_back(c);
  }

  std::set<IntVector> rays;
  auto record_line = [&](const RationalMatrix& basis) {
    const RationalMatrix k = kernel(basis, dim);
    if (k.size() != 1) return;
    RationalVector v = k.front();
    if (in_cone(chamber, v)) rays.insert(primitive_integer(v));
    for (auto& x : v) x = -x;
    if (in_cone(chamber, v)) rays.insert(primitive_integer(v));
  };

  // Independent (dim-1)-subsets, built incrementally so dependent prefixes
  // are pruned early.
  RationalMatrix basis;
  std::vector<std::size_t> pivots;
  std::function<void(std::size_t)> choose = [&](std::size_t start) {
    if (basis.size() + 1 == dim) {
      record_line(basis);
      return;
    }
    const std::size_t need = dim - 1 - basis.size();
    for (std::size_t i = start; i + need <= constraints.size(); ++i) {
      RationalMatrix saved_basis = basis;
      std::vector<std::size_t> saved_pivots = pivots;
      if (extend_basis(basis, pivots, constraints[i])) choose(i + 1);
      basis = std::move(saved_basis);
      pivots = std::move(saved_pivots);
    }
  };
  choose(0);

  std::vector<ArrangementFaceWitness> out;
  out.reserve(rays.size());
  for (const auto& r : rays) out.push_back(make_witness(normals, to_rational(r), FaceKind::Ray));
  return out;
}

std::vector<ArrangementFaceWitness> arrangement_cells(const RationalMatrix& normals,
                                                      const RationalMatrix& chamber,
                                                      std::size_t dim,
                                                      std::uint64_t max_cells) {
  if (dim == 0) return {};
  ConeSystem base;
  base.dim = dim;
  base.strict = chamber;
  auto root = lp_feasible(base);
  if (!root) return {};

  const RationalMatrix planes = distinct_hyperplanes(normals);
  std::vector<RationalVector> found;
  std::vector<int> signs;

  // Invariant: `witness` satisfies the open chamber and signs[0..k) strictly.
  std::function<void(std::size_t, const RationalVector&)> descend =
      [&](std::size_t k, const RationalVector& witness) {
        if (k == planes.size()) {
          if (found.size() >= max_cells) {
            throw ResourceGuardError("arrangement_cells: more than " +
                                     std::to_string(max_cells) + " cells");
          }
          found.push_back(witness);
          return;
        }
        const int current = sign(dot(planes[k], witness));
        for (int s : {1, -1}) {
          signs.push_back(s);
          if (s == current) {
            descend(k + 1, witness);
          } else {
            ConeSystem sys = base;
            for (std::size_t i = 0; i <= k; ++i) {
              RationalVector row = planes[i];
              if (signs[i] < 0) {
                for (auto& x : row) x = -x;
              }
              sys.strict.push_back(std::move(row));
            }
            if (auto w = lp_feasible(sys)) descend(k + 1, *w);
          }
          signs.pop_back();
        }
      };
  descend(0, *root);

  std::vector<ArrangementFaceWitness> out;
  out.reserve(found.size());
  for (auto& p : found) {
    out.push_back(make_witness(normals, to_rational(primitive_integer(p)), FaceKind::Cell));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.signs, a.point) < std::tie(b.signs, b.point);
  });
  return out;
}

std::vector<ArrangementFaceWitness> arrangement_faces(const RationalMatrix& normals,
                                                      const RationalMatrix& chamber,
                                                      std::size_t dim,
                                                      std::uint64_t max_faces) {
  if (dim == 0) return {};
  ConeSystem base;
  base.dim = dim;
  base.weak = chamber;
  if (!chamber.empty()) {
    // Nonzero points of a pointed cone are exactly those with a positive row sum.
    RationalVector total(dim, 0);
    for (const auto& c : chamber)
      for (std::size_t j = 0; j < dim; ++j) total[j] += c[j];
    base.strict.push_back(std::move(total));
  }

  const RationalMatrix planes = distinct_hyperplanes(normals);
  std::vector<RationalVector> found;
  std::vector<int> signs;

  auto system_for = [&](std::size_t upto) {
    ConeSystem sys = base;
    for (std::size_t i = 0; i < upto; ++i) {
      RationalVector row = planes[i];
      if (signs[i] < 0) {
        for (auto& x : row) x = -x;
      }
      (signs[i] == 0 ? sys.equalities : sys.strict).push_back(std::move(row));
    }
    return sys;
  };

  // Invariant: `witness` satisfies the base system and signs[0..k) exactly.
  std::function<void(std::size_t, const RationalVector&)> descend =
      [&](std::size_t k, const RationalVector& witness) {
        if (k == planes.size()) {
          if (is_zero(witness)) {
            // Only reachable without a chamber: the common kernel of the planes.
            const RationalMatrix ker = kernel(planes, dim);
            if (ker.empty()) return;
            found.push_back(ker.front());
          } else {
            found.push_back(witness);
          }
          if (found.size() > max_faces) {
            throw ResourceGuardError("arrangement_faces: more than " +
                                     std::to_string(max_faces) + " faces");
          }
          return;
        }
        const int current = sign(dot(planes[k], witness));
        for (int s : {1, 0, -1}) {
          signs.push_back(s);
          if (s == current) {
            descend(k + 1, witness);
          } else if (auto w = lp_feasible(system_for(k + 1))) {
            descend(k + 1, *w);
          }
          signs.pop_back();
        }
      };
  auto root = lp_feasible(base);
  if (!root) return {};
  descend(0, *root);

  std::vector<ArrangementFaceWitness> out;
  out.reserve(found.size());
  for (auto& p : found) {
    auto w = make_witness(normals, to_rational(primitive_integer(p)), FaceKind::Face);
    RationalMatrix zeros;
    for (auto i : w.zero_set) zeros.push_back(normals[i]);
    const std::size_t r = rank(zeros);
    if (r == 0) w.kind = FaceKind::Cell;
    else if (r + 1 == dim) w.kind = FaceKind::Ray;
    out.push_back(std::move(w));
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) {
    return std::tie(a.signs, a.point) < std::tie(b.signs, b.point);
  });
  return out;
}

}  // namespace gitsolve::exactgeom
