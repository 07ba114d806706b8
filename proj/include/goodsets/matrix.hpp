#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <vector>

#include "goodsets/errors.hpp"
#include "goodsets/rational.hpp"

namespace goodsets {

// Dense row-major matrix of exact rationals. Always at least 1x1.
class RationalMatrix {
 public:
  RationalMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {
    if (rows == 0 || cols == 0) throw ShapeError("matrix dimensions must be positive");
  }

  RationalMatrix(std::initializer_list<std::initializer_list<long>> init)
      : RationalMatrix(init.size(), init.size() ? init.begin()->size() : 0) {
    std::size_t r = 0;
    for (const auto& row : init) {
      if (row.size() != cols_) throw ShapeError("ragged matrix initializer");
      std::size_t c = 0;
      for (long v : row) (*this)(r, c++) = v;
      ++r;
    }
  }

  static RationalMatrix identity(std::size_t n) {
    RationalMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool square() const noexcept { return rows_ == cols_; }

  Rational& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rational& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const Rational> row(std::size_t r) const { return {data_.data() + r * cols_, cols_}; }

  RationalMatrix transpose() const {
    RationalMatrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  RationalMatrix select_rows(std::span<const std::size_t> keep) const {
    RationalMatrix out(keep.size(), cols_);
    for (std::size_t i = 0; i < keep.size(); ++i)
      for (std::size_t c = 0; c < cols_; ++c) out(i, c) = (*this)(keep[i], c);
    return out;
  }

  RationalMatrix select_cols(std::span<const std::size_t> keep) const {
    RationalMatrix out(rows_, keep.size());
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t j = 0; j < keep.size(); ++j) out(r, j) = (*this)(r, keep[j]);
    return out;
  }

  friend bool operator==(const RationalMatrix&, const RationalMatrix&) = default;

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rational> data_;
};

inline RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw ShapeError("matrix product: inner dimensions differ");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

inline std::vector<Rational> operator*(const RationalMatrix& a, std::span<const Rational> x) {
  if (a.cols() != x.size()) throw ShapeError("matrix-vector product: length mismatch");
  std::vector<Rational> out(a.rows());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) out[i] += a(i, j) * x[j];
  return out;
}

}  // namespace goodsets
