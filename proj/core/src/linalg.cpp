#include <utility>

#include "gitsolve/errors.hpp"
#include "gitsolve/exactgeom.hpp"

namespace gitsolve::exactgeom {
namespace {

// In-place reduced row echelon form; returns pivot columns.
std::vector<std::size_t> rref(RationalMatrix& m, std::size_t cols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < cols && row < m.size(); ++col) {
    std::size_t sel = row;
    while (sel < m.size() && m[sel][col] == 0) ++sel;
    if (sel == m.size()) continue;
    std::swap(m[row], m[sel]);
    const Rational inv = 1 / m[row][col];
    for (std::size_t j = col; j < m[row].size(); ++j) m[row][j] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == row || m[i][col] == 0) continue;
      const Rational f = m[i][col];
      for (std::size_t j = col; j < m[i].size(); ++j) m[i][j] -= f * m[row][j];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

std::size_t rank(const RationalMatrix& a) {
  if (a.empty()) return 0;
  RationalMatrix m = a;
  return rref(m, m.front().size()).size();
}

RationalMatrix kernel(const RationalMatrix& a, std::size_t cols) {
  RationalMatrix m = a;
  const auto pivots = rref(m, cols);
  std::vector<bool> is_pivot(cols, false);
  for (auto p : pivots) is_pivot[p] = true;
  RationalMatrix basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    RationalVector v(cols, 0);
    v[free] = 1;
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m[r][free];
    basis.push_back(std::move(v));
  }
  return basis;
}

std::optional<RationalVector> solve(const RationalMatrix& a, std::span<const Rational> b,
                                    std::size_t cols) {
  if (a.size() != b.size()) throw DomainError("solve: row count mismatch");
  RationalMatrix m = a;
  for (std::size_t i = 0; i < m.size(); ++i) m[i].push_back(b[i]);
  const auto pivots = rref(m, cols);
  for (std::size_t r = pivots.size(); r < m.size(); ++r) {
    if (m[r][cols] != 0) return std::nullopt;
  }
  RationalVector x(cols, 0);
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = m[r][cols];
  return x;
}

RationalMatrix inverse(const RationalMatrix& a) {
  const std::size_t n = a.size();
  RationalMatrix m = a;
  for (std::size_t i = 0; i < n; ++i) {
    if (m[i].size() != n) throw DomainError("inverse: matrix is not square");
    m[i].resize(2 * n, 0);
    m[i][n + i] = 1;
  }
  if (rref(m, n).size() != n) throw DomainError("inverse: matrix is singular");
  RationalMatrix out(n);
  for (std::size_t i = 0; i < n; ++i) out[i].assign(m[i].begin() + n, m[i].end());
  return out;
}

RationalMatrix transpose(const RationalMatrix& a) {
  if (a.empty()) return {};
  RationalMatrix t(a.front().size(), RationalVector(a.size()));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < a[i].size(); ++j) t[j][i] = a[i][j];
  }
  return t;
}

RationalVector multiply(const RationalMatrix& a, std::span<const Rational> x) {
  RationalVector y;
  y.reserve(a.size());
  for (const auto& row : a) y.push_back(dot(row, x));
  return y;
}

}  // namespace gitsolve::exactgeom
