#pragma once

// Dense exact matrices over Q and Z. Sizes in this project never exceed a few
// hundred rows, so everything is plain row-major storage.

#include "d4/arith.hpp"

#include <cstddef>
#include <optional>
#include <vector>

namespace d4 {

template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_rows(const std::vector<std::vector<T>>& rows) {
    if (rows.empty()) return Matrix();
    Matrix m(rows.size(), rows.front().size());
    for (std::size_t i = 0; i < rows.size(); ++i) {
      ensure(rows[i].size() == m.cols_, "Matrix::from_rows: ragged input");
      for (std::size_t j = 0; j < m.cols_; ++j) m(i, j) = rows[i][j];
    }
    return m;
  }

  static Matrix from_columns(const std::vector<std::vector<T>>& cols) {
    return from_rows(cols).transposed();
  }

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }

  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  std::vector<T> row(std::size_t i) const {
    return std::vector<T>(data_.begin() + static_cast<std::ptrdiff_t>(i * cols_),
                          data_.begin() + static_cast<std::ptrdiff_t>((i + 1) * cols_));
  }
  std::vector<T> column(std::size_t j) const {
    std::vector<T> c(rows_);
    for (std::size_t i = 0; i < rows_; ++i) c[i] = (*this)(i, j);
    return c;
  }

  Matrix transposed() const {
    Matrix t(cols_, rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) t(j, i) = (*this)(i, j);
    return t;
  }

  Matrix operator*(const Matrix& o) const {
    ensure(cols_ == o.rows_, "Matrix product: shape mismatch");
    Matrix p(rows_, o.cols_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t k = 0; k < cols_; ++k) {
        const T& a = (*this)(i, k);
        if (a == 0) continue;
        for (std::size_t j = 0; j < o.cols_; ++j) p(i, j) += a * o(k, j);
      }
    return p;
  }

  std::vector<T> operator*(const std::vector<T>& v) const {
    ensure(cols_ == v.size(), "Matrix-vector product: shape mismatch");
    std::vector<T> out(rows_);
    for (std::size_t i = 0; i < rows_; ++i)
      for (std::size_t j = 0; j < cols_; ++j) out[i] += (*this)(i, j) * v[j];
    return out;
  }

  bool operator==(const Matrix& o) const {
    return rows_ == o.rows_ && cols_ == o.cols_ && data_ == o.data_;
  }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t i = 0; i < rows_; ++i) std::swap((*this)(i, a), (*this)(i, b));
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RatMatrix = Matrix<Rational>;
using IntMatrix = Matrix<Integer>;

RatMatrix to_rational(const IntMatrix& m);

/// Reduced row echelon form in place; returns pivot columns.
std::vector<std::size_t> rref(RatMatrix& m);

std::size_t rank(RatMatrix m);
std::size_t rank(const std::vector<IntVector>& vectors);

Rational determinant(RatMatrix m);
Integer determinant(const IntMatrix& m);

std::optional<RatMatrix> inverse(const RatMatrix& m);

/// Some solution x of m x = b, or nullopt when inconsistent.
std::optional<RatVector> solve(const RatMatrix& m, const RatVector& b);

/// Primitive integer basis of {x : m x = 0}.
std::vector<IntVector> integer_kernel(const RatMatrix& m);

/// Indices of a maximal linearly independent subset, chosen greedily in order.
std::vector<std::size_t> independent_subset(const std::vector<IntVector>& vectors);

/// Adjugate of a square integer matrix (adj(m) * m = det(m) * I).
IntMatrix adjugate(const IntMatrix& m);

struct SmithForm {
  IntMatrix left;      ///< unimodular U
  IntMatrix diagonal;  ///< D = U * M * V, diagonal with d_1 | d_2 | ...
  IntMatrix right;     ///< unimodular V
  std::vector<Integer> invariants() const;
};

SmithForm smith_normal_form(const IntMatrix& m);

}  // namespace d4
