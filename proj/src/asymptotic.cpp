#include "wishdiff/asymptotic.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <cmath>

#include "wishdiff/errors.hpp"

namespace wishdiff {

namespace {

using cd = std::complex<double>;

BigFloat real_cbrt(const BigFloat& x) {
  if (x < 0) return -boost::multiprecision::cbrt(-x);
  return boost::multiprecision::cbrt(x);
}

cd cubic_value(const CubicCoeffs<cd>& g, cd s) { return ((g.g3 * s + g.g2) * s + g.g1) * s + g.g0; }
cd cubic_slope(const CubicCoeffs<cd>& g, cd s) { return (3.0 * g.g3 * s + 2.0 * g.g2) * s + g.g1; }

// Real roots of p (degree >= 1) via companion-matrix eigenvalues, each
// refined by bisection on the exact coefficients in BigFloat.
std::vector<double> real_roots(const RationalPoly& p) {
  const int d = p.degree();
  Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(d, d);
  const double lead = to_double(p.coefficient(d));
  for (int i = 0; i < d; ++i) companion(0, i) = -to_double(p.coefficient(d - 1 - i)) / lead;
  for (int i = 1; i < d; ++i) companion(i, i - 1) = 1;
  const Eigen::VectorXcd eig = companion.eigenvalues();

  std::vector<double> out;
  for (int i = 0; i < d; ++i) {
    const cd r = eig(i);
    const double scale = std::max(1.0, std::abs(r));
    if (std::abs(r.imag()) > 1e-6 * scale) continue;
    // Bracket a sign change around the estimate, then bisect.
    double step = 1e-9 * scale;
    BigFloat lo(r.real() - step);
    BigFloat hi(r.real() + step);
    int expand = 0;
    while (sign(p(lo)) == sign(p(hi)) && expand < 60) {
      step *= 4;
      lo = BigFloat(r.real() - step);
      hi = BigFloat(r.real() + step);
      ++expand;
    }
    if (sign(p(lo)) == sign(p(hi))) continue;  // even-multiplicity root: no crossing
    const int lo_sign = sign(p(lo));
    for (int k = 0; k < 60; ++k) {
      const BigFloat mid = (lo + hi) / 2;
      (sign(p(mid)) == lo_sign ? lo : hi) = mid;
    }
    out.push_back(to_double((lo + hi) / 2));
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end(), [](double a, double b) {
              return std::abs(a - b) <= 1e-12 * std::max(1.0, std::abs(a));
            }),
            out.end());
  return out;
}

}  // namespace

AsymptoticModel::AsymptoticModel(const Rational& c1, const Rational& c2, const Rational& alpha1,
                                 const Rational& alpha2)
    : c1_(c1), c2_(c2), alpha1_(alpha1), alpha2_(alpha2) {
  if (c1 <= 0 || c1 > 1 || c2 <= 0 || c2 > 1) throw DomainError("asymptotic: c1, c2 must lie in (0, 1]");
  if (alpha1 <= 0 || alpha2 <= 0) throw DomainError("asymptotic: alpha1, alpha2 must be positive");
  const Rational a12 = alpha1 * alpha2;
  g_.g3 = RationalPoly{0, c1 * c2 * a12};
  g_.g2 = RationalPoly{(c1 * c2 - c1 - c2) * a12, c2 * alpha2 - c1 * alpha1};
  g_.g1 = RationalPoly{(1 - c1) * alpha1 - (1 - c2) * alpha2, -1};
  g_.g0 = RationalPoly{-1};
  const RationalPoly zeta = g_.g2 * g_.g2 - Rational(3) * g_.g1 * g_.g3;
  const RationalPoly eta = Rational(2) * g_.g2.pow(3) - Rational(9) * g_.g1 * g_.g2 * g_.g3 +
                           Rational(27) * g_.g0 * g_.g3 * g_.g3;
  disc_ = eta * eta - Rational(4) * zeta.pow(3);
  const auto division = disc_.divmod(RationalPoly::monomial(1, 2));
  if (!division.remainder.is_zero()) {
    throw ConsistencyError("asymptotic: discriminant is not divisible by z^2");
  }
  quartic_ = division.quotient;
  locate_support();
}

AsymptoticModel AsymptoticModel::from_unscaled(const EnsembleParams& p) {
  p.validate();
  return AsymptoticModel(ratio(p.n, p.n1), ratio(p.n, p.n2), p.n1 * p.a1, p.n2 * p.a2);
}

void AsymptoticModel::locate_support() {
  roots_ = real_roots(quartic_);
  if (roots_.size() < 2) throw DomainError("asymptotic: degenerate model (fewer than two real support edges)");
  if (roots_.size() > 2) {
    warnings_.push_back("discriminant quartic has " + std::to_string(roots_.size()) +
                        " real roots; using the outermost pair as the support");
  }
  support_ = {roots_.front(), roots_.back()};
}

CubicCoeffs<cd> AsymptoticModel::cubic_coeffs(cd z) const {
  auto at = [&](const RationalPoly& p) { return to_double(p.coefficient(0)) + to_double(p.coefficient(1)) * z; };
  return {at(g_.g0), at(g_.g1), at(g_.g2), at(g_.g3)};
}

CubicCoeffs<Rational> AsymptoticModel::cubic_coeffs(const Rational& z) const {
  return {g_.g0(z), g_.g1(z), g_.g2(z), g_.g3(z)};
}

cd AsymptoticModel::stieltjes(cd z) const {
  if (!(z.imag() > 0)) throw DomainError("stieltjes: Im z must be positive");
  const auto g = cubic_coeffs(z);
  Eigen::Matrix3cd companion = Eigen::Matrix3cd::Zero();
  companion(0, 0) = -g.g2 / g.g3;
  companion(0, 1) = -g.g1 / g.g3;
  companion(0, 2) = -g.g0 / g.g3;
  companion(1, 0) = 1;
  companion(2, 1) = 1;
  const Eigen::Vector3cd roots = Eigen::ComplexEigenSolver<Eigen::Matrix3cd>(companion, false).eigenvalues();
  std::vector<cd> upper;
  for (int i = 0; i < 3; ++i) {
    cd s = roots(i);
    for (int k = 0; k < 4; ++k) {
      const cd slope = cubic_slope(g, s);
      if (slope == 0.0) break;
      s -= cubic_value(g, s) / slope;
    }
    if (s.imag() > 0) upper.push_back(s);
  }
  if (upper.size() != 1) {
    throw NumericError("stieltjes: expected one root with Im s > 0, found " + std::to_string(upper.size()));
  }
  return upper.front();
}

BigFloat AsymptoticModel::density_formula(const BigFloat& x) const {
  const BigFloat g3 = to_bigfloat(g_.g3.coefficient(1)) * x;
  const BigFloat g2 = to_bigfloat(g_.g2.coefficient(0)) + to_bigfloat(g_.g2.coefficient(1)) * x;
  const BigFloat g1 = to_bigfloat(g_.g1.coefficient(0)) - x;
  const BigFloat g0 = -1;
  const BigFloat zeta = g2 * g2 - 3 * g1 * g3;
  const BigFloat eta = 2 * g2 * g2 * g2 - 9 * g1 * g2 * g3 + 27 * g0 * g3 * g3;
  const BigFloat disc = eta * eta - 4 * zeta * zeta * zeta;
  if (disc < 0) return 0;
  const BigFloat G = real_cbrt((eta + sqrt(disc)) / 2);
  if (abs(G) < BigFloat("1e-300")) throw NumericError("asymptotic density: G vanishes");
  const BigFloat pi = boost::math::constants::pi<BigFloat>();
  const BigFloat v = (G - zeta / G) / (2 * sqrt(BigFloat(3)) * pi * g3);
  return x < 0 ? BigFloat(-v) : v;
}

BigFloat AsymptoticModel::density(const BigFloat& x) const {
  if (x < support_.lo || x > support_.hi) return 0;
  if (x == 0) {
    const BigFloat h = BigFloat("1e-9") * (support_.hi - support_.lo);
    return (density_formula(h) + density_formula(-h)) / 2;
  }
  return density_formula(x);
}

double AsymptoticModel::density(double x) const { return to_double(density(BigFloat(x))); }

double AsymptoticModel::mass(double lo, double hi) const {
  lo = std::max(lo, support_.lo);
  hi = std::min(hi, support_.hi);
  if (!(lo < hi)) return 0;
  auto f = [&](double x) { return density(x); };
  // Square-root edges are integrable endpoint singularities for tanh-sinh.
  boost::math::quadrature::tanh_sinh<double> integrator;
  auto piece = [&](double a, double b) { return integrator.integrate(f, a, b, 1e-10); };
  if (lo < 0 && hi > 0) return piece(lo, 0) + piece(0, hi);
  return piece(lo, hi);
}

}  // namespace wishdiff
