#pragma once

// Exact finite-n spectral statistics of H = a1 W1 - a2 W2: the moment
// matrix of the derivative basis, the normalization, the correlation
// kernel and the spectral density, all as exact rationals.

#include <vector>

#include "wishdiff/diagonal_law.hpp"
#include "wishdiff/exppoly.hpp"
#include "wishdiff/linalg.hpp"

namespace wishdiff {

// h~_jk = int x^{k-1} f~_j(x) dx split over the two half lines, for
// j = 1..n and k = 1..cols (cols >= n; extra columns serve the moments).
struct MomentMatrix {
  EnsembleParams params;
  int cols = 0;
  RationalMatrix neg;    // n x cols, (j-1, k-1)
  RationalMatrix pos;
  RationalMatrix total;

  int n() const { return params.n; }
  // 1-based accessors.
  const Rational& h(int j, int k) const { return total(j - 1, k - 1); }
  const Rational& h_neg(int j, int k) const { return neg(j - 1, k - 1); }
  const Rational& h_pos(int j, int k) const { return pos(j - 1, k - 1); }

  RationalMatrix square() const { return total.block(n(), n()); }
  // Column k (1-based) of the selected matrix, rows j = 1..n.
  std::vector<Rational> column(const RationalMatrix& m, int k) const;
};

namespace exact {

// Closed forms of the split moments. For j <= k these are the finite
// nu-sums; for j > k the integration-by-parts boundary value
// (-1)^{k-1}(k-1)! f~_{j-k}(0), with opposite signs on the two sides.
Rational moment_closed_form_neg(const EnsembleParams& p, int j, int k);
Rational moment_closed_form_pos(const EnsembleParams& p, int j, int k);

// Builds the matrix by direct exp-poly integration of f~_j and checks every
// entry against the closed forms. ConsistencyError on any mismatch.
MomentMatrix build_moment_matrix(const DiagonalLaw& law, int extra_cols = 0);
MomentMatrix build_moment_matrix(const EnsembleParams& p, int extra_cols = 0);

// C~ = (n! prod_j h~_jj)^{-1}. DomainError if a diagonal entry vanishes.
Rational normalization(const MomentMatrix& mm);

// (-1)^{n(n-1)/2} / prod_{j=1..n} Gamma(j+1).
Rational normalization_closed_form(int n);

}  // namespace exact

// S(x, y) = sum_{i,j} B[i][j] x^{i-1} f~_j(y).
struct SpectralKernel {
  EnsembleParams params;
  RationalMatrix coeff;                          // B, n x n
  std::vector<exppoly::PiecewiseExpPoly> basis;  // f~_1 .. f~_n

  BigFloat operator()(const BigFloat& x, const BigFloat& y) const;
  BigFloat operator()(const Rational& x, const Rational& y) const;
};

namespace exact {

// B = n! C~ Cof(h~)^T: each column-replaced determinant of the kernel
// formula expanded along the replaced column. Cofactors come from the exact
// back-substitution inverse of the upper-triangular h~.
SpectralKernel build_kernel(const DiagonalLaw& law, const MomentMatrix& mm);
SpectralKernel build_kernel(const EnsembleParams& p);

// p(x) = S(x, x) / n.
exppoly::PiecewiseExpPoly density(const SpectralKernel& kernel);
exppoly::PiecewiseExpPoly density(const EnsembleParams& p);

// int S(x, x) dx.
Rational kernel_trace(const SpectralKernel& kernel);

// Coefficient matrix of int S(x, v) S(v, y) dv in the same x^{i-1} f~_j(y)
// basis, computed with exp-poly products and moment integrals.
RationalMatrix compose_kernel(const SpectralKernel& kernel);

// R_r(x_1..x_r) = det[S(x_a, x_b)]. DomainError unless 1 <= r <= n.
BigFloat correlation(const SpectralKernel& kernel, const std::vector<BigFloat>& points);

}  // namespace exact

// Everything built once for one parameter set.
struct ExactEnsemble {
  DiagonalLaw law;
  MomentMatrix moments;
  SpectralKernel kernel;
  exppoly::PiecewiseExpPoly density;

  static ExactEnsemble build(const EnsembleParams& p, int extra_cols = 0);
};

}  // namespace wishdiff
