#include <stdexcept>

#include "gitsolve/errors.hpp"
#include "gitsolve/exactgeom.hpp"

namespace gitsolve::exactgeom {
namespace {

// Phase-one simplex on  M y = b, y >= 0, b >= 0  with one artificial per row.
// Columns [0, n_struct) are structural; artificials follow. Returns the
// structural part of a feasible y, or nullopt.
class PhaseOne {
 public:
  PhaseOne(RationalMatrix rows, RationalVector rhs, std::size_t n_struct)
      : tab_(std::move(rows)), rhs_(std::move(rhs)), n_struct_(n_struct), basis_(tab_.size()) {
    const std::size_t m = tab_.size();
    for (std::size_t i = 0; i < m; ++i) {
      basis_[i] = n_struct_ + i;
    }
    // Reduced costs of "minimize the sum of artificials", sign-flipped so a
    // positive entry means the column improves the objective.
    gain_.assign(n_struct_, 0);
    objective_ = 0;
    for (std::size_t i = 0; i < m; ++i) {
      for (std::size_t j = 0; j < n_struct_; ++j) gain_[j] += tab_[i][j];
      objective_ += rhs_[i];
    }
  }

  std::optional<RationalVector> run() {
    while (objective_ > 0) {
      // Bland: lowest-index improving column.
      std::size_t enter = n_struct_;
      for (std::size_t j = 0; j < n_struct_; ++j) {
        if (gain_[j] > 0) {
          enter = j;
          break;
        }
      }
      if (enter == n_struct_) break;

      std::size_t leave = tab_.size();
      Rational best;
      for (std::size_t i = 0; i < tab_.size(); ++i) {
        if (tab_[i][enter] <= 0) continue;
        Rational ratio = rhs_[i] / tab_[i][enter];
        if (leave == tab_.size() || ratio < best ||
            (ratio == best && basis_[i] < basis_[leave])) {
          best = std::move(ratio);
          leave = i;
        }
      }
      // The phase-one objective is bounded below by zero, so some row qualifies.
      if (leave == tab_.size()) throw std::logic_error("phase one: unbounded ray");
      pivot(leave, enter);
    }
    if (objective_ != 0) return std::nullopt;

    RationalVector y(n_struct_, 0);
    for (std::size_t i = 0; i < tab_.size(); ++i) {
      if (basis_[i] < n_struct_) y[basis_[i]] = rhs_[i];
    }
    return y;
  }

 private:
  void pivot(std::size_t r, std::size_t c) {
    const Rational inv = 1 / tab_[r][c];
    for (auto& x : tab_[r]) x *= inv;
    rhs_[r] *= inv;
    for (std::size_t i = 0; i < tab_.size(); ++i) {
      if (i == r || tab_[i][c] == 0) continue;
      const Rational f = tab_[i][c];
      for (std::size_t j = 0; j < n_struct_; ++j) {
        if (tab_[r][j] != 0) tab_[i][j] -= f * tab_[r][j];
      }
      rhs_[i] -= f * rhs_[r];
    }
    // Artificial columns are not stored: once they leave they never re-enter.
    const Rational f = gain_[c];
    for (std::size_t j = 0; j < n_struct_; ++j) {
      if (tab_[r][j] != 0) gain_[j] -= f * tab_[r][j];
    }
    objective_ -= f * rhs_[r];
    basis_[r] = c;
  }

  RationalMatrix tab_;
  RationalVector rhs_;
  std::size_t n_struct_;
  std::vector<std::size_t> basis_;
  RationalVector gain_;
  Rational objective_;
};

}  // namespace

bool satisfies(const ConeSystem& sys, std::span<const Rational> x) {
  if (x.size() != sys.dim) return false;
  for (const auto& e : sys.equalities) {
    if (dot(e, x) != 0) return false;
  }
  for (const auto& w : sys.weak) {
    if (dot(w, x) < 0) return false;
  }
  for (const auto& s : sys.strict) {
    if (dot(s, x) <= 0) return false;
  }
  return true;
}

std::optional<RationalVector> lp_feasible(const ConeSystem& sys) {
  const std::size_t n = sys.dim;
  auto check_row = [n](const RationalVector& r) {
    if (r.size() != n) throw DomainError("lp_feasible: constraint length differs from dim");
  };
  for (const auto& r : sys.equalities) check_row(r);
  for (const auto& r : sys.weak) check_row(r);
  for (const auto& r : sys.strict) check_row(r);

  // x = u - v with u, v >= 0; one surplus column per inequality.
  const std::size_t n_ineq = sys.weak.size() + sys.strict.size();
  const std::size_t n_struct = 2 * n + n_ineq;
  RationalMatrix rows;
  RationalVector rhs;
  rows.reserve(sys.equalities.size() + n_ineq);

  auto push = [&](const RationalVector& a, std::size_t surplus, int b) {
    RationalVector row(n_struct, 0);
    for (std::size_t j = 0; j < n; ++j) {
      row[j] = a[j];
      row[n + j] = -a[j];
    }
    if (surplus < n_ineq) row[2 * n + surplus] = -1;
    rows.push_back(std::move(row));
    rhs.emplace_back(b);
  };
  for (const auto& e : sys.equalities) push(e, n_ineq, 0);
  std::size_t k = 0;
  for (const auto& w : sys.weak) push(w, k++, 0);
  for (const auto& s : sys.strict) push(s, k++, 1);

  if (rows.empty()) return RationalVector(n, 0);

  auto y = PhaseOne(std::move(rows), std::move(rhs), n_struct).run();
  if (!y) return std::nullopt;
  RationalVector x(n);
  for (std::size_t j = 0; j < n; ++j) x[j] = (*y)[j] - (*y)[n + j];
  if (!satisfies(sys, x)) throw std::logic_error("lp_feasible: witness failed re-substitution");
  return x;
}

bool zero_in_relative_interior(const std::vector<RationalVector>& points) {
  if (points.empty()) throw DomainError("zero_in_relative_interior: empty point list");
  const std::size_t k = points.size();
  const std::size_t d = points.front().size();
  ConeSystem sys;
  sys.dim = k;
  for (std::size_t c = 0; c < d; ++c) {
    RationalVector row(k);
    for (std::size_t i = 0; i < k; ++i) {
      if (points[i].size() != d) throw DomainError("zero_in_relative_interior: ragged points");
      row[i] = points[i][c];
    }
    if (!is_zero(row)) sys.equalities.push_back(std::move(row));
  }
  for (std::size_t i = 0; i < k; ++i) {
    RationalVector e(k, 0);
    e[i] = 1;
    sys.strict.push_back(std::move(e));
  }
  return lp_feasible(sys).has_value();
}

}  // namespace gitsolve::exactgeom
