#include "wishdiff/linalg.hpp"

#include <utility>

#include "wishdiff/errors.hpp"

namespace wishdiff {

RationalMatrix operator*(const RationalMatrix& a, const RationalMatrix& b) {
  if (a.cols() != b.rows()) throw DomainError("matrix product: shape mismatch");
  RationalMatrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      if (a(i, k) == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j) out(i, j) += a(i, k) * b(k, j);
    }
  return out;
}

Rational determinant(RationalMatrix m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DomainError("determinant: matrix is not square");
  Rational det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    while (pivot < n && m(pivot, k) == 0) ++pivot;
    if (pivot == n) return 0;
    if (pivot != k) {
      for (std::size_t c = k; c < n; ++c) std::swap(m(k, c), m(pivot, c));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      if (m(r, k) == 0) continue;
      const Rational f = m(r, k) / m(k, k);
      for (std::size_t c = k; c < n; ++c) m(r, c) -= f * m(k, c);
    }
  }
  return det;
}

RationalMatrix replace_column(RationalMatrix m, std::size_t col,
                              const std::vector<Rational>& column) {
  if (column.size() != m.rows()) throw DomainError("replace_column: length mismatch");
  for (std::size_t r = 0; r < m.rows(); ++r) m(r, col) = column[r];
  return m;
}

RationalMatrix upper_triangular_inverse(const RationalMatrix& u) {
  const std::size_t n = u.rows();
  RationalMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) {
    if (u(i, i) == 0) throw DomainError("upper_triangular_inverse: zero diagonal entry");
  }
  // Column j of the inverse solves U x = e_j; x is zero below row j.
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t ii = j + 1; ii-- > 0;) {
      Rational acc = ii == j ? Rational(1) : Rational(0);
      for (std::size_t k = ii + 1; k <= j; ++k) acc -= u(ii, k) * inv(k, j);
      inv(ii, j) = acc / u(ii, ii);
    }
  }
  return inv;
}

BigFloat determinant(BigFloatMatrix m) {
  const std::size_t n = m.rows();
  if (m.cols() != n) throw DomainError("determinant: matrix is not square");
  BigFloat det = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t r = k + 1; r < n; ++r)
      if (abs(m(r, k)) > abs(m(pivot, k))) pivot = r;
    if (m(pivot, k) == 0) return 0;
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) std::swap(m(k, c), m(pivot, c));
      det = -det;
    }
    det *= m(k, k);
    for (std::size_t r = k + 1; r < n; ++r) {
      const BigFloat f = m(r, k) / m(k, k);
      for (std::size_t c = k; c < n; ++c) m(r, c) -= f * m(k, c);
    }
  }
  return det;
}

BigFloatMatrix inverse(BigFloatMatrix m) {
  const std::size_t n = m.rows();
  BigFloatMatrix inv(n, n);
  for (std::size_t i = 0; i < n; ++i) inv(i, i) = 1;
  for (std::size_t k = 0; k < n; ++k) {
    std::size_t pivot = k;
    for (std::size_t r = k + 1; r < n; ++r)
      if (abs(m(r, k)) > abs(m(pivot, k))) pivot = r;
    if (m(pivot, k) == 0) throw NumericError("inverse: singular matrix");
    if (pivot != k) {
      for (std::size_t c = 0; c < n; ++c) {
        std::swap(m(k, c), m(pivot, c));
        std::swap(inv(k, c), inv(pivot, c));
      }
    }
    const BigFloat p = m(k, k);
    for (std::size_t c = 0; c < n; ++c) {
      m(k, c) /= p;
      inv(k, c) /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == k) continue;
      const BigFloat f = m(r, k);
      if (f == 0) continue;
      for (std::size_t c = 0; c < n; ++c) {
        m(r, c) -= f * m(k, c);
        inv(r, c) -= f * inv(k, c);
      }
    }
  }
  return inv;
}

}  // namespace wishdiff
