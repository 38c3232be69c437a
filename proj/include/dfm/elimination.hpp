#pragma once

#include <cstddef>
#include <optional>
#include <utility>
#include <vector>

#include "dfm/matrix.hpp"

namespace dfm {

/// Row echelon form produced by fraction-free elimination.
template <Field F>
struct Echelon {
  Matrix<F> u;
  std::vector<std::size_t> pivot_cols;  ///< pivot column of row k
  int sign = 1;                         ///< (-1)^(row swaps)
};

/// Bareiss fraction-free forward elimination. The pivot in each column is
/// the first nonzero entry at or below the current row, so results do not
/// depend on entry sizes and runs are reproducible.
template <Field F>
Echelon<F> fraction_free_echelon(Matrix<F> a) {
  Echelon<F> e;
  const std::size_t rows = a.rows(), cols = a.cols();
  F prev(1);
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && is_zero(a(p, c))) ++p;
    if (p == rows) continue;
    if (p != r) {
      for (std::size_t j = 0; j < cols; ++j) std::swap(a(p, j), a(r, j));
      e.sign = -e.sign;
    }
    const F piv = a(r, c);
    for (std::size_t i = r + 1; i < rows; ++i) {
      const F lead = a(i, c);
      for (std::size_t j = c + 1; j < cols; ++j) {
        F v = piv * a(i, j);
        if (!is_zero(lead)) v = v - lead * a(r, j);
        a(i, j) = v / prev;
      }
      a(i, c) = F{};
    }
    prev = piv;
    e.pivot_cols.push_back(c);
    ++r;
  }
  e.u = std::move(a);
  return e;
}

template <Field F>
std::size_t rank(const Matrix<F>& a) {
  return fraction_free_echelon(a).pivot_cols.size();
}

/// Determinant via Bareiss: the last pivot of a full-rank elimination.
template <Field F>
F determinant(const Matrix<F>& a) {
  if (!a.is_square()) throw DimensionMismatch("determinant of " + a.shape());
  const std::size_t n = a.rows();
  if (n == 0) return F(1);
  Echelon<F> e = fraction_free_echelon(a);
  if (e.pivot_cols.size() < n) return F{};
  F d = e.u(n - 1, n - 1);
  return e.sign < 0 ? -d : d;
}

template <Field F>
struct RankNullspace {
  std::size_t rank = 0;
  std::vector<std::vector<F>> nullspace;  ///< basis of {v : A v = 0}
};

/// Rank and a nullspace basis. One basis vector per free column, with a 1
/// in that column and zeros in the other free columns.
template <Field F>
RankNullspace<F> rank_and_nullspace(const Matrix<F>& a) {
  Echelon<F> e = fraction_free_echelon(a);
  const std::size_t cols = a.cols();
  RankNullspace<F> out;
  out.rank = e.pivot_cols.size();
  std::vector<bool> is_pivot(cols, false);
  for (auto c : e.pivot_cols) is_pivot[c] = true;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    std::vector<F> x(cols);
    x[free] = F(1);
    for (std::size_t k = out.rank; k-- > 0;) {
      const std::size_t pc = e.pivot_cols[k];
      F s{};
      for (std::size_t j = pc + 1; j < cols; ++j) {
        if (!is_zero(x[j]) && !is_zero(e.u(k, j))) s = s + e.u(k, j) * x[j];
      }
      x[pc] = is_zero(s) ? F{} : -(s / e.u(k, pc));
    }
    out.nullspace.push_back(std::move(x));
  }
  return out;
}

/// Indices of a maximal set of linearly independent columns (first by order).
template <Field F>
std::vector<std::size_t> independent_columns(const Matrix<F>& a) {
  return fraction_free_echelon(a).pivot_cols;
}

/// Unique solution of the square system A x = b, or nullopt if A is singular.
template <Field F>
std::optional<std::vector<F>> solve(const Matrix<F>& a, const std::vector<F>& b) {
  if (!a.is_square() || b.size() != a.rows()) throw DimensionMismatch("solve " + a.shape());
  const std::size_t n = a.rows();
  Matrix<F> aug(n, n + 1);
  aug.set_block(0, 0, a);
  for (std::size_t i = 0; i < n; ++i) aug(i, n) = b[i];
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(aug(p, c))) ++p;
    if (p == n) return std::nullopt;
    if (p != c)
      for (std::size_t j = 0; j <= n; ++j) std::swap(aug(p, j), aug(c, j));
    const F inv = F(1) / aug(c, c);
    for (std::size_t j = c; j <= n; ++j) aug(c, j) = aug(c, j) * inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || is_zero(aug(i, c))) continue;
      const F f = aug(i, c);
      for (std::size_t j = c; j <= n; ++j) aug(i, j) = aug(i, j) - f * aug(c, j);
    }
  }
  std::vector<F> x(n);
  for (std::size_t i = 0; i < n; ++i) x[i] = aug(i, n);
  return x;
}

/// Inverse by Gauss-Jordan, or nullopt if singular.
template <Field F>
std::optional<Matrix<F>> inverse(const Matrix<F>& a) {
  if (!a.is_square()) throw DimensionMismatch("inverse of " + a.shape());
  const std::size_t n = a.rows();
  Matrix<F> aug(n, 2 * n);
  aug.set_block(0, 0, a);
  aug.set_block(0, n, Matrix<F>::identity(n));
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t p = c;
    while (p < n && is_zero(aug(p, c))) ++p;
    if (p == n) return std::nullopt;
    if (p != c)
      for (std::size_t j = 0; j < 2 * n; ++j) std::swap(aug(p, j), aug(c, j));
    const F inv = F(1) / aug(c, c);
    for (std::size_t j = 0; j < 2 * n; ++j) aug(c, j) = aug(c, j) * inv;
    for (std::size_t i = 0; i < n; ++i) {
      if (i == c || is_zero(aug(i, c))) continue;
      const F f = aug(i, c);
      for (std::size_t j = 0; j < 2 * n; ++j) aug(i, j) = aug(i, j) - f * aug(c, j);
    }
  }
  return aug.block(0, n, n, n);
}

}  // namespace dfm
