#pragma once

#include <initializer_list>
#include <vector>

#include "wishdiff/numeric.hpp"

namespace wishdiff {

// Dense univariate polynomial with exact rational coefficients,
// coefficient i multiplying x^i. Trailing zeros are trimmed, so the zero
// polynomial has no coefficients.
class RationalPoly {
 public:
  RationalPoly() = default;
  RationalPoly(std::initializer_list<Rational> coeffs);
  explicit RationalPoly(std::vector<Rational> coeffs);

  static RationalPoly constant(const Rational& c);
  static RationalPoly monomial(const Rational& c, int power);

  // -1 for the zero polynomial.
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }
  bool is_zero() const { return coeffs_.empty(); }
  const std::vector<Rational>& coefficients() const { return coeffs_; }
  Rational coefficient(int i) const;

  Rational operator()(const Rational& x) const;
  BigFloat operator()(const BigFloat& x) const;

  RationalPoly derivative() const;
  // Antiderivative with zero constant term.
  RationalPoly integral() const;
  Rational integrate(const Rational& lo, const Rational& hi) const;

  // Substitute x -> -x.
  RationalPoly reflected() const;

  RationalPoly& operator+=(const RationalPoly& o);
  RationalPoly& operator-=(const RationalPoly& o);
  RationalPoly& operator*=(const RationalPoly& o);
  RationalPoly& operator*=(const Rational& s);

  friend RationalPoly operator+(RationalPoly a, const RationalPoly& b) { return a += b; }
  friend RationalPoly operator-(RationalPoly a, const RationalPoly& b) { return a -= b; }
  friend RationalPoly operator*(RationalPoly a, const RationalPoly& b) { return a *= b; }
  friend RationalPoly operator*(RationalPoly a, const Rational& s) { return a *= s; }
  friend RationalPoly operator*(const Rational& s, RationalPoly a) { return a *= s; }
  friend bool operator==(const RationalPoly& a, const RationalPoly& b) {
    return a.coeffs_ == b.coeffs_;
  }

  RationalPoly pow(unsigned e) const;

  struct DivMod;
  DivMod divmod(const RationalPoly& divisor) const;

 private:
  void trim();
  std::vector<Rational> coeffs_;
};

struct RationalPoly::DivMod {
  RationalPoly quotient;
  RationalPoly remainder;
};

}  // namespace wishdiff
