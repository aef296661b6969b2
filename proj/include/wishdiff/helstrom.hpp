#pragma once

// Spectral density of sigma = rho1 - rho2 for two independent
// Hilbert-Schmidt random density matrices: exact polynomial fixtures for
// 2 <= n <= n1 <= n2 <= 4 and the large-n mapping onto the asymptotic model.

#include <string>
#include <vector>

#include "wishdiff/asymptotic.hpp"
#include "wishdiff/polynomial.hpp"

namespace wishdiff::helstrom {

struct HelstromFixture {
  int n = 0;
  int n1 = 0;
  int n2 = 0;
  RationalPoly neg;  // valid on [-1, 0]
  RationalPoly pos;  // valid on [0, 1]
  bool mirrored = false;  // pos was obtained from neg by x -> -x
  Rational abs_mean;      // tabulated <|x|>
  RationalPoly neg_cdf;   // int_{-1}^x neg
  RationalPoly pos_cdf;   // int_{-1}^0 neg + int_0^x pos
};

// The ten tabulated rows, n1 <= n2.
const std::vector<HelstromFixture>& fixture_table();

// Lookup for n1 <= n2 (nullptr when absent).
const HelstromFixture* find_fixture(int n, int n1, int n2);

Rational fixture_integral(const HelstromFixture& f);
// int |x| p(x) dx from the polynomials. ConsistencyError if it differs from
// the tabulated value.
Rational fixture_abs_mean(const HelstromFixture& f);

// p(x) for any order of n1, n2: the row for (n, min, max), reflected
// x -> -x when n1 > n2. Zero outside [-1, 1]. UnsupportedParameters when
// no row exists.
Rational fixture_density(int n, int n1, int n2, const Rational& x);
double fixture_cdf(int n, int n1, int n2, double x);

// Exact fraction of positive eigenvalues, int_0^1 p.
Rational positivity_fraction_sigma(int n, int n1, int n2);

// <|x|> for any order of n1, n2 (the reflection leaves it unchanged).
Rational abs_mean(int n, int n1, int n2);

struct AsymptoticMapping {
  AsymptoticModel model;
  std::vector<std::string> warnings;
};

// c_j = n/n_j and alpha1 = alpha2 = 1/n. Warns below n = 10.
AsymptoticMapping helstrom_asymptotic(int n, int n1, int n2);

}  // namespace wishdiff::helstrom
