#pragma once

#include <cstddef>
#include <vector>

#include "wishdiff/numeric.hpp"

namespace wishdiff {

// Row-major dense matrix. Small sizes only (n <= a few dozen).
template <typename T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols, const T& fill = T(0))
      : rows_(rows), cols_(cols), data_(rows * cols, fill) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  T& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const T& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  // Leading square block / column subset helpers.
  Matrix block(std::size_t rows, std::size_t cols) const {
    Matrix out(rows, cols);
    for (std::size_t r = 0; r < rows; ++r)
      for (std::size_t c = 0; c < cols; ++c) out(r, c) = (*this)(r, c);
    return out;
  }

  Matrix transposed() const {
    Matrix out(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) out(c, r) = (*this)(r, c);
    return out;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<T> data_;
};

using RationalMatrix = Matrix<Rational>;
using BigFloatMatrix = Matrix<BigFloat>;

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b);

// Exact determinant by Gaussian elimination over the rationals.
Rational determinant(RationalMatrix m);

// Replace column `col` of a square matrix by `column`.
RationalMatrix replace_column(RationalMatrix m, std::size_t col, const std::vector<Rational>& column);

// Inverse of an upper-triangular matrix by back substitution. Throws
// DomainError on a zero diagonal entry.
RationalMatrix upper_triangular_inverse(const RationalMatrix& u);

// Determinant by LU with partial pivoting.
BigFloat determinant(BigFloatMatrix m);

BigFloatMatrix inverse(BigFloatMatrix m);

}  // namespace wishdiff
