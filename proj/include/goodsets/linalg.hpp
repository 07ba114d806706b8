#pragma once

#include <algorithm>
#include <optional>
#include <span>
#include <stdexcept>
#include <utility>
#include <vector>

#include "goodsets/errors.hpp"
#include "goodsets/matrix.hpp"
#include "goodsets/rational.hpp"

namespace goodsets {

namespace detail {

// Rows scaled by the lcm of their denominators; row space is unchanged.
inline std::vector<std::vector<Integer>> integer_rows(const RationalMatrix& m) {
  std::vector<std::vector<Integer>> out(m.rows(), std::vector<Integer>(m.cols()));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Integer l = 1;
    for (const auto& v : m.row(r)) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), v.get_den_mpz_t());
    for (std::size_t c = 0; c < m.cols(); ++c) out[r][c] = m(r, c).get_num() * (l / m(r, c).get_den());
  }
  return out;
}

// Reduced row echelon form of [a | b] in place; returns pivot columns of the left block.
inline std::vector<std::size_t> gauss_jordan(std::vector<std::vector<Rational>>& rows, std::size_t left_cols) {
  std::vector<std::size_t> pivots;
  std::size_t r = 0;
  for (std::size_t c = 0; c < left_cols && r < rows.size(); ++c) {
    std::size_t p = r;
    while (p < rows.size() && rows[p][c] == 0) ++p;
    if (p == rows.size()) continue;
    std::swap(rows[p], rows[r]);
    Rational inv = 1 / rows[r][c];
    for (auto& v : rows[r]) v *= inv;
    for (std::size_t i = 0; i < rows.size(); ++i) {
      if (i == r || rows[i][c] == 0) continue;
      Rational factor = rows[i][c];
      for (std::size_t j = c; j < rows[i].size(); ++j) rows[i][j] -= factor * rows[r][j];
    }
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

}  // namespace detail

/// Exact rank over the rationals.
///
/// Fraction-free (Bareiss) elimination on the integer-scaled rows: every intermediate entry
/// is a minor of the input, so each division by the previous pivot is exact.
inline std::size_t rank(const RationalMatrix& m) {
  auto a = detail::integer_rows(m);
  const std::size_t rows = m.rows(), cols = m.cols();
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t p = r;
    while (p < rows && a[p][c] == 0) ++p;
    if (p == rows) continue;
    std::swap(a[p], a[r]);
    for (std::size_t i = r + 1; i < rows; ++i) {
      for (std::size_t j = c + 1; j < cols; ++j) {
        a[i][j] = a[r][c] * a[i][j] - a[i][c] * a[r][j];
        mpz_divexact(a[i][j].get_mpz_t(), a[i][j].get_mpz_t(), prev.get_mpz_t());
      }
      a[i][c] = 0;
    }
    prev = a[r][c];
    ++r;
  }
  return r;
}

/// Some exact solution of m*x = b, or nullopt when the system is inconsistent.
/// Free variables are set to zero, so a square invertible m yields its unique solution.
inline std::optional<std::vector<Rational>> solve(const RationalMatrix& m, std::span<const Rational> b) {
  if (b.size() != m.rows()) throw ShapeError("solve: right-hand side length differs from row count");
  std::vector<std::vector<Rational>> aug(m.rows(), std::vector<Rational>(m.cols() + 1));
  for (std::size_t r = 0; r < m.rows(); ++r) {
    std::copy(m.row(r).begin(), m.row(r).end(), aug[r].begin());
    aug[r][m.cols()] = b[r];
  }
  auto pivots = detail::gauss_jordan(aug, m.cols());
  for (std::size_t r = pivots.size(); r < aug.size(); ++r)
    if (aug[r][m.cols()] != 0) return std::nullopt;
  std::vector<Rational> x(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) x[pivots[r]] = aug[r][m.cols()];
  return x;
}

inline RationalMatrix invert(const RationalMatrix& m) {
  if (!m.square()) throw ShapeError("invert: matrix is not square");
  const std::size_t n = m.rows();
  std::vector<std::vector<Rational>> aug(n, std::vector<Rational>(2 * n));
  for (std::size_t r = 0; r < n; ++r) {
    std::copy(m.row(r).begin(), m.row(r).end(), aug[r].begin());
    aug[r][n + r] = 1;
  }
  auto pivots = detail::gauss_jordan(aug, n);
  if (pivots.size() != n) throw SingularError(pivots.size());
  RationalMatrix inv(n, n);
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t c = 0; c < n; ++c) inv(r, c) = aug[r][n + c];
  if (m * inv != RationalMatrix::identity(n)) throw std::logic_error("invert: M * M^-1 != I");
  return inv;
}

/// max over rows of the sum of absolute entries (the induced sup-norm).
inline Rational max_row_abs_sum(const RationalMatrix& m) {
  Rational best = 0;
  for (std::size_t r = 0; r < m.rows(); ++r) {
    Rational s = 0;
    for (const auto& v : m.row(r)) s += abs_value(v);
    if (s > best) best = s;
  }
  return best;
}

}  // namespace goodsets
