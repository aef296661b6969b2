#pragma once

// Exact piecewise exponential-polynomials
//
//   f(x) = sum_t c_t x^{p_t} e^{r_t x}   on x < 0 and on x > 0 separately,
//
// with a separately stored exact value at x = 0. The diagonal-element law,
// its derivatives and the finite-n spectral density all live here, so every
// integral against them is an exact rational.

#include <vector>


#include "wishdiff/numeric.hpp"

namespace wishdiff::exppoly {

struct Term {
  Rational coeff;
  unsigned power = 0;
  Rational rate;

  friend bool operator==(const Term&, const Term&) = default;
};

enum class Region { Negative, Positive, Both };

// One side of a piecewise function. Terms are kept merged on exact
// (rate, power) keys, sorted by rate then power, with zero coefficients
// pruned. Rate 0 is allowed here (finite-interval scratch work) but not in
// a persistent PiecewiseExpPoly.
class Side {
 public:
  Side() = default;
  explicit Side(std::vector<Term> terms);

  void add(const Rational& coeff, unsigned power, const Rational& rate);

  const std::vector<Term>& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  // Multiply by x^m.
  Side shifted(unsigned m) const;

  // Sum of the power-0 coefficients: the one-sided limit at 0.
  Rational limit_at_zero() const;

  Side& operator+=(const Side& o);
  Side& operator-=(const Side& o);
  Side& operator*=(const Rational& s);

  friend Side operator+(Side a, const Side& b) { return a += b; }
  friend Side operator-(Side a, const Side& b) { return a -= b; }
  friend Side operator*(Side a, const Rational& s) { return a *= s; }
  friend Side operator*(const Rational& s, Side a) { return a *= s; }
  friend bool operator==(const Side&, const Side&) = default;

 private:
  void normalize();
  std::vector<Term> terms_;
};

Side multiply(const Side& f, const Side& g);
Side derivative(const Side& f);

// Exact-coefficient evaluation; only the exponential is rounded.
BigFloat evaluate(const Side& f, const Rational& x);
BigFloat evaluate(const Side& f, const BigFloat& x);

// Integral of x^k f(x) over the half line `region` (Negative or Positive).
// DomainError when a rate does not decay in that direction.
Rational moment_integral(const Side& f, unsigned k, Region region);

struct PiecewiseExpPoly {
  Side neg;
  Side pos;
  Rational at_zero;

  // Throws DomainError unless neg rates are > 0 and pos rates are < 0.
  void validate() const;

  friend bool operator==(const PiecewiseExpPoly&, const PiecewiseExpPoly&) = default;
};

BigFloat evaluate(const PiecewiseExpPoly& f, const Rational& x);
BigFloat evaluate(const PiecewiseExpPoly& f, const BigFloat& x);

// Term-wise derivative of both sides. The new value at zero is the left
// limit; matching one-sided limits is the caller's responsibility.
PiecewiseExpPoly derivative(const PiecewiseExpPoly& f);

Rational moment_integral(const PiecewiseExpPoly& f, unsigned k, Region region);

PiecewiseExpPoly operator+(const PiecewiseExpPoly& a, const PiecewiseExpPoly& b);
PiecewiseExpPoly operator-(const PiecewiseExpPoly& a, const PiecewiseExpPoly& b);
PiecewiseExpPoly operator*(const Rational& s, const PiecewiseExpPoly& f);

// x^m f(x); the value at zero becomes 0 for m > 0.
PiecewiseExpPoly shifted(const PiecewiseExpPoly& f, unsigned m);

// Reflection x -> -x (neg and pos swap, rates negate).
PiecewiseExpPoly reflected(const PiecewiseExpPoly& f);

// Cumulative integral F(x) = int_{-inf}^x f, stored as exact
// exp-polynomials: the left antiderivative for x < 0 and the right tail
// int_x^inf f for x > 0.
class Cumulative {
 public:
  explicit Cumulative(const PiecewiseExpPoly& f);

  BigFloat operator()(const Rational& x) const;
  BigFloat operator()(const BigFloat& x) const;

  const Rational& mass_negative() const { return mass_neg_; }
  const Rational& total() const { return total_; }

 private:
  Side left_;   // int_{-inf}^x, valid for x < 0
  Side tail_;   // int_x^{inf}, valid for x > 0
  Rational mass_neg_;
  Rational total_;
};

// Cached BigFloat coefficients for fast repeated evaluation (histograms,
// K-S statistics over millions of points).
class Evaluator {
 public:
  explicit Evaluator(const PiecewiseExpPoly& f);
  BigFloat operator()(const BigFloat& x) const;
  double operator()(double x) const;

 private:
  struct Group {
    BigFloat rate;
    std::vector<BigFloat> coeffs;  // dense by power
  };
  static std::vector<Group> groups_of(const Side& s);
  static BigFloat eval(const std::vector<Group>& groups, const BigFloat& x);

  std::vector<Group> neg_;
  std::vector<Group> pos_;
  BigFloat at_zero_;
};

// CDF counterpart of Evaluator.
class CumulativeEvaluator {
 public:
  explicit CumulativeEvaluator(const PiecewiseExpPoly& f);
  double operator()(double x) const;

 private:
  Evaluator pieces_;  // left antiderivative on x < 0, tail on x > 0
  BigFloat mass_neg_;
  BigFloat total_;
};

// Interval [lo, hi] outside of which f carries at most `tail` mass on each
// side. f must be a nonnegative density with positive total mass.
struct Interval {
  double lo;
  double hi;
};
Interval effective_support(const PiecewiseExpPoly& f, double tail = 1e-12);

}  // namespace wishdiff::exppoly
