#pragma once

// Number types shared by every module.
//
// Rational is GMP's mpq_class: arbitrary precision, always canonical
// (reduced, positive denominator). BigFloat is an MPFR-backed float with
// 32 decimal digits (~107 bits). All floating tolerances in this library
// assume that precision.

#include <gmpxx.h>

#include <boost/multiprecision/mpfr.hpp>

#include <string>
#include <string_view>

namespace wishdiff {

using Rational = mpq_class;
using Integer = mpz_class;

template <unsigned Digits10>
using BigFloatP = boost::multiprecision::number<
    boost::multiprecision::mpfr_float_backend<Digits10>,
    boost::multiprecision::et_off>;

using BigFloat = BigFloatP<32>;

// Correctly rounded (round-to-nearest) conversion.
BigFloat to_bigfloat(const Rational& q);

// Exact: every finite double is a dyadic rational.
Rational to_rational(double x);

double to_double(const Rational& q);
double to_double(const BigFloat& x);

// Strict parser: "p/q" or "p" with optional sign. Decimal notation is
// rejected so that inputs stay exact. Throws DomainError.
Rational parse_rational(std::string_view text);

// "p/q", or "p" when the denominator is 1.
std::string format_rational(const Rational& q);

// 15 significant digits, shortest of fixed/scientific.
std::string format_decimal(const Rational& q);
std::string format_decimal(const BigFloat& x, int digits = 15);

Rational pow(const Rational& base, long exponent);

// num/den in canonical form (mpq_class's two-argument constructor does not
// reduce). DomainError for den == 0.
Rational ratio(long num, long den);

inline int sign(const Rational& q) { return sgn(q); }

}  // namespace wishdiff
