#include "wishdiff/exact_spectral.hpp"

#include <string>
#include <utility>

#include "wishdiff/errors.hpp"
#include "wishdiff/specfun.hpp"

namespace wishdiff {

using exppoly::PiecewiseExpPoly;
using exppoly::Region;
using specfun::binomial;
using specfun::gamma_int;

std::vector<Rational> MomentMatrix::column(const RationalMatrix& m, int k) const {
  std::vector<Rational> c(static_cast<std::size_t>(n()));
  for (int j = 0; j < n(); ++j) c[static_cast<std::size_t>(j)] = m(static_cast<std::size_t>(j), static_cast<std::size_t>(k - 1));
  return c;
}

namespace exact {

namespace {

Rational boundary_term(const EnsembleParams& p, int j, int k) {
  // (-1)^{k-1} (k-1)! f~_{j-k}(0)
  Rational v = gamma_int(k) * diagonal_law::ftilde_zero_left_form(p, j - k);
  return (k - 1) % 2 == 0 ? v : Rational(-v);
}

}  // namespace

Rational moment_closed_form_neg(const EnsembleParams& p, int j, int k) {
  if (j > k) return boundary_term(p, j, k);
  const Rational s = p.a1 + p.a2;
  Rational sum = 0;
  for (int nu = 1; nu <= p.n2; ++nu) {
    sum += binomial(p.n1 + p.n2 - nu - 1, p.n1 - 1) * pow(p.a1, p.n2 - nu) /
           pow(s, p.n1 + p.n2 - nu) * gamma_int(nu + k - j) / gamma_int(nu);
  }
  Rational v = sum * binomial(k - 1, j - 1) * pow(p.a2, p.n1 + k - j) * gamma_int(j);
  return (k - 1) % 2 == 0 ? v : Rational(-v);
}

Rational moment_closed_form_pos(const EnsembleParams& p, int j, int k) {
  if (j > k) return -boundary_term(p, j, k);
  const Rational s = p.a1 + p.a2;
  Rational sum = 0;
  for (int nu = 1; nu <= p.n1; ++nu) {
    sum += binomial(p.n1 + p.n2 - nu - 1, p.n2 - 1) * pow(p.a2, p.n1 - nu) /
           pow(s, p.n1 + p.n2 - nu) * gamma_int(nu + k - j) / gamma_int(nu);
  }
  Rational v = sum * binomial(k - 1, j - 1) * pow(p.a1, p.n2 + k - j) * gamma_int(j);
  return (j - 1) % 2 == 0 ? v : Rational(-v);
}

MomentMatrix build_moment_matrix(const DiagonalLaw& law, int extra_cols) {
  const EnsembleParams& p = law.params();
  if (extra_cols < 0) throw DomainError("build_moment_matrix: extra_cols must be >= 0");
  if (law.count() < p.n) throw DomainError("build_moment_matrix: law holds fewer than n derivatives");
  MomentMatrix mm;
  mm.params = p;
  mm.cols = p.n + extra_cols;
  const auto rows = static_cast<std::size_t>(p.n);
  const auto cols = static_cast<std::size_t>(mm.cols);
  mm.neg = RationalMatrix(rows, cols);
  mm.pos = RationalMatrix(rows, cols);
  mm.total = RationalMatrix(rows, cols);
  for (int j = 1; j <= p.n; ++j) {
    const PiecewiseExpPoly& f = law.ftilde(j);
    for (int k = 1; k <= mm.cols; ++k) {
      const auto r = static_cast<std::size_t>(j - 1);
      const auto c = static_cast<std::size_t>(k - 1);
      mm.neg(r, c) = moment_integral(f, static_cast<unsigned>(k - 1), Region::Negative);
      mm.pos(r, c) = moment_integral(f, static_cast<unsigned>(k - 1), Region::Positive);
      mm.total(r, c) = mm.neg(r, c) + mm.pos(r, c);
      if (mm.neg(r, c) != moment_closed_form_neg(p, j, k) ||
          mm.pos(r, c) != moment_closed_form_pos(p, j, k)) {
        throw ConsistencyError("h~_" + std::to_string(j) + "," + std::to_string(k) +
                               ": closed form differs from direct integral");
      }
      if (j > k && mm.total(r, c) != 0) {
        throw ConsistencyError("h~ is not upper triangular at (" + std::to_string(j) + "," +
                               std::to_string(k) + ")");
      }
    }
  }
  return mm;
}

MomentMatrix build_moment_matrix(const EnsembleParams& p, int extra_cols) {
  return build_moment_matrix(DiagonalLaw::build(p), extra_cols);
}

Rational normalization(const MomentMatrix& mm) {
  Rational prod = gamma_int(mm.n() + 1);
  for (int j = 1; j <= mm.n(); ++j) {
    if (mm.h(j, j) == 0) throw DomainError("normalization: degenerate parameters (zero h~_jj)");
    prod *= mm.h(j, j);
  }
  return Rational(1) / prod;
}

Rational normalization_closed_form(int n) {
  Rational prod = 1;
  for (int j = 1; j <= n; ++j) prod *= gamma_int(j + 1);
  const long sign_exp = static_cast<long>(n) * (n - 1) / 2;
  return sign_exp % 2 == 0 ? Rational(1) / prod : Rational(-1) / prod;
}

SpectralKernel build_kernel(const DiagonalLaw& law, const MomentMatrix& mm) {
  const int n = mm.n();
  const RationalMatrix h = mm.square();
  const RationalMatrix inv = upper_triangular_inverse(h);
  Rational det = 1;
  for (int j = 0; j < n; ++j) det *= h(static_cast<std::size_t>(j), static_cast<std::size_t>(j));
  const Rational scale = gamma_int(n + 1) * normalization(mm);

  SpectralKernel kernel;
  kernel.params = mm.params;
  kernel.coeff = RationalMatrix(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
  for (std::size_t i = 0; i < static_cast<std::size_t>(n); ++i) {
    for (std::size_t j = 0; j < static_cast<std::size_t>(n); ++j) {
      // Cofactor of h~ at (j, i) is det(h~) * inverse(i, j).
      const Rational cofactor = det * inv(i, j);
      kernel.coeff(i, j) = scale * cofactor;
    }
  }
  for (int j = 1; j <= n; ++j) kernel.basis.push_back(law.ftilde(j));
  return kernel;
}

SpectralKernel build_kernel(const EnsembleParams& p) {
  const DiagonalLaw law = DiagonalLaw::build(p);
  return build_kernel(law, build_moment_matrix(law));
}

PiecewiseExpPoly density(const SpectralKernel& kernel) {
  const std::size_t n = kernel.basis.size();
  PiecewiseExpPoly p;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (kernel.coeff(i, j) == 0) continue;
      p = p + kernel.coeff(i, j) * shifted(kernel.basis[j], static_cast<unsigned>(i));
    }
  }
  return ratio(1, static_cast<long>(n)) * p;
}

PiecewiseExpPoly density(const EnsembleParams& p) { return density(build_kernel(p)); }

Rational kernel_trace(const SpectralKernel& kernel) {
  const std::size_t n = kernel.basis.size();
  Rational tr = 0;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      tr += kernel.coeff(i, j) *
            moment_integral(kernel.basis[j], static_cast<unsigned>(i), Region::Both);
  return tr;
}

RationalMatrix compose_kernel(const SpectralKernel& kernel) {
  const std::size_t n = kernel.basis.size();
  // G[j][k] = int f~_j(v) v^{k-1} dv, each side as a product of exp-polys.
  RationalMatrix g(n, n);
  for (std::size_t k = 0; k < n; ++k) {
    exppoly::Side mono;
    mono.add(1, static_cast<unsigned>(k), 0);
    for (std::size_t j = 0; j < n; ++j) {
      const auto& f = kernel.basis[j];
      g(j, k) = moment_integral(multiply(f.neg, mono), 0, Region::Negative) +
                moment_integral(multiply(f.pos, mono), 0, Region::Positive);
    }
  }
  return kernel.coeff * g * kernel.coeff;
}

BigFloat correlation(const SpectralKernel& kernel, const std::vector<BigFloat>& points) {
  const std::size_t r = points.size();
  if (r < 1 || r > kernel.basis.size()) {
    throw DomainError("correlation: need 1 <= r <= n points (got " + std::to_string(r) + ")");
  }
  BigFloatMatrix m(r, r);
  for (std::size_t a = 0; a < r; ++a)
    for (std::size_t b = 0; b < r; ++b) m(a, b) = kernel(points[a], points[b]);
  return determinant(std::move(m));
}

}  // namespace exact

namespace {

template <typename X>
BigFloat kernel_value(const SpectralKernel& k, const X& x, const X& y) {
  const std::size_t n = k.basis.size();
  std::vector<BigFloat> fy(n);
  for (std::size_t j = 0; j < n; ++j) fy[j] = exppoly::evaluate(k.basis[j], y);
  BigFloat sum = 0;
  BigFloat xp = 1;
  const BigFloat xb = BigFloat(x);
  for (std::size_t i = 0; i < n; ++i) {
    BigFloat row = 0;
    for (std::size_t j = 0; j < n; ++j) row += to_bigfloat(k.coeff(i, j)) * fy[j];
    sum += xp * row;
    xp *= xb;
  }
  return sum;
}

}  // namespace

BigFloat SpectralKernel::operator()(const BigFloat& x, const BigFloat& y) const {
  return kernel_value(*this, x, y);
}

BigFloat SpectralKernel::operator()(const Rational& x, const Rational& y) const {
  const std::size_t n = basis.size();
  std::vector<BigFloat> fy(n);
  for (std::size_t j = 0; j < n; ++j) fy[j] = exppoly::evaluate(basis[j], y);
  BigFloat sum = 0;
  Rational xp = 1;
  for (std::size_t i = 0; i < n; ++i) {
    BigFloat row = 0;
    for (std::size_t j = 0; j < n; ++j) row += to_bigfloat(coeff(i, j)) * fy[j];
    sum += to_bigfloat(xp) * row;
    xp *= x;
  }
  return sum;
}

ExactEnsemble ExactEnsemble::build(const EnsembleParams& p, int extra_cols) {
  p.validate();
  DiagonalLaw law = DiagonalLaw::build(p);
  MomentMatrix mm = exact::build_moment_matrix(law, extra_cols);
  SpectralKernel kernel = exact::build_kernel(law, mm);
  PiecewiseExpPoly dens = exact::density(kernel);
  return {std::move(law), std::move(mm), std::move(kernel), std::move(dens)};
}

}  // namespace wishdiff
