#pragma once

// Exact special functions at integer parameters, plus one floating series
// used only by the unitary-group cross-check.

#include "wishdiff/numeric.hpp"

namespace wishdiff::specfun {

// Gamma(m) = (m-1)! for m >= 1; DomainError otherwise.
Rational gamma_int(long m);

// Generalized binomial coefficient. Zero for b < 0 and for 0 <= a < b;
// a(a-1)...(a-b+1)/b! for negative a.
Rational binomial(long a, long b);

// Rising factorial (a)_b = a(a+1)...(a+b-1), b >= 0.
Rational pochhammer(long a, long b);

// Associated Laguerre polynomial L_k^{(a)}(x) from its finite sum; any
// integer superscript is accepted.
Rational laguerre(long k, long a, const Rational& x);

// 2F1(-l, b; c; z) as an exact finite sum. Summation stops at the first
// vanishing numerator factor (from -l or from a nonpositive b). A zero
// (c)_i before that point throws DomainError.
Rational hyp2f1_terminating(long l, long b, long c, const Rational& z);

// 1F1(-l; c; z), same termination rule.
Rational hyp1f1_terminating(long l, long c, const Rational& z);

// Gauss series 2F1(a, b; c; z) for |z| < 1, summed until the relative term
// size drops below 2^-precision. NumericError after 10^6 terms.
BigFloat hyp2f1_series(const BigFloat& a, const BigFloat& b, const BigFloat& c,
                       const BigFloat& z);

}  // namespace wishdiff::specfun
