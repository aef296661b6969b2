#pragma once

// Large-n spectral density of alpha1 W1/n1 - alpha2 W2/n2 with
// c_j = n/n_j held fixed. The Stieltjes transform s solves the cubic
// g3 s^3 + g2 s^2 + g1 s + g0 = 0 whose coefficients are linear in z.

#include <complex>
#include <string>
#include <vector>

#include "wishdiff/diagonal_law.hpp"
#include "wishdiff/numeric.hpp"
#include "wishdiff/polynomial.hpp"

namespace wishdiff {

template <typename T>
struct CubicCoeffs {
  T g0, g1, g2, g3;
};

struct SupportInterval {
  double lo;
  double hi;
};

class AsymptoticModel {
 public:
  // DomainError unless c1, c2 in (0, 1] and alpha1, alpha2 > 0, or if the
  // discriminant quartic has fewer than two real roots.
  AsymptoticModel(const Rational& c1, const Rational& c2, const Rational& alpha1, const Rational& alpha2);

  // c_j = n/n_j, alpha_j = n_j a_j.
  static AsymptoticModel from_unscaled(const EnsembleParams& p);

  const Rational& c1() const { return c1_; }
  const Rational& c2() const { return c2_; }
  const Rational& alpha1() const { return alpha1_; }
  const Rational& alpha2() const { return alpha2_; }

  CubicCoeffs<std::complex<double>> cubic_coeffs(std::complex<double> z) const;
  CubicCoeffs<Rational> cubic_coeffs(const Rational& z) const;
  // Coefficients as polynomials in z.
  const CubicCoeffs<RationalPoly>& cubic_polys() const { return g_; }

  // The root with Im s > 0 for Im z > 0. DomainError for Im z <= 0;
  // NumericError when no unique upper-half-plane root exists.
  std::complex<double> stieltjes(std::complex<double> z) const;

  // eta^2 - 4 zeta^3 (degree 6) and its quotient by z^2 (the quartic).
  const RationalPoly& discriminant() const { return disc_; }
  const RationalPoly& quartic() const { return quartic_; }

  const SupportInterval& support() const { return support_; }
  // Real roots of the quartic in increasing order.
  const std::vector<double>& quartic_roots() const { return roots_; }
  // Non-empty when the quartic has four real roots (outermost pair used).
  const std::vector<std::string>& warnings() const { return warnings_; }

  // 0 outside the support. At 0 the average of the two one-sided values
  // at +-1e-9 (hi - lo) is returned.
  BigFloat density(const BigFloat& x) const;
  double density(double x) const;

  // int_lo^hi p by adaptive quadrature, split at 0 and at the edges.
  double mass(double lo, double hi) const;

 private:
  BigFloat density_formula(const BigFloat& x) const;
  void locate_support();

  Rational c1_, c2_, alpha1_, alpha2_;
  CubicCoeffs<RationalPoly> g_;
  RationalPoly disc_;
  RationalPoly quartic_;
  std::vector<double> roots_;
  SupportInterval support_{0, 0};
  std::vector<std::string> warnings_;
};

}  // namespace wishdiff
