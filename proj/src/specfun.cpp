#include "wishdiff/specfun.hpp"

#include <limits>
#include <string>

#include "wishdiff/errors.hpp"

namespace wishdiff::specfun {

Rational gamma_int(long m) {
  if (m < 1) throw DomainError("gamma_int: argument " + std::to_string(m) + " is not positive");
  Integer f;
  mpz_fac_ui(f.get_mpz_t(), static_cast<unsigned long>(m - 1));
  return Rational(f);
}

Rational binomial(long a, long b) {
  if (b < 0) return 0;
  if (a >= 0) {
    if (b > a) return 0;
    Integer r;
    mpz_bin_uiui(r.get_mpz_t(), static_cast<unsigned long>(a), static_cast<unsigned long>(b));
    return Rational(r);
  }
  Integer r;
  mpz_bin_ui(r.get_mpz_t(), Integer(a).get_mpz_t(), static_cast<unsigned long>(b));
  return Rational(r);
}

Rational pochhammer(long a, long b) {
  if (b < 0) throw DomainError("pochhammer: negative length");
  Integer r = 1;
  for (long i = 0; i < b; ++i) r *= a + i;
  return Rational(r);
}

Rational laguerre(long k, long a, const Rational& x) {
  if (k < 0) throw DomainError("laguerre: negative degree");
  Rational sum = 0;
  Rational xpow = 1;
  Rational ifact = 1;
  for (long i = 0; i <= k; ++i) {
    if (i > 0) {
      xpow *= x;
      ifact *= i;
    }
    Rational term = binomial(k + a, k - i) * xpow / ifact;
    if (i % 2 == 1) term = -term;
    sum += term;
  }
  return sum;
}

namespace {

// Shared driver: sum_i prod(num)_i / (c)_i z^i / i! with early termination.
template <typename NextNumerator>
Rational terminating_series(long l, long c, const Rational& z, NextNumerator numerator) {
  Rational sum = 1;
  Rational term = 1;
  for (long i = 0; i < l; ++i) {
    const Rational num = numerator(i);
    if (num == 0) break;
    if (c + i == 0) {
      throw DomainError("terminating hypergeometric series: (c)_i vanishes before termination");
    }
    term *= num * z / (Rational(c + i) * (i + 1));
    sum += term;
  }
  return sum;
}

}  // namespace

Rational hyp2f1_terminating(long l, long b, long c, const Rational& z) {
  if (l < 0) throw DomainError("hyp2f1_terminating: first parameter must be nonpositive");
  return terminating_series(l, c, z, [&](long i) -> Rational { return Rational(-l + i) * (b + i); });
}

Rational hyp1f1_terminating(long l, long c, const Rational& z) {
  if (l < 0) throw DomainError("hyp1f1_terminating: first parameter must be nonpositive");
  return terminating_series(l, c, z, [&](long i) -> Rational { return Rational(-l + i); });
}

BigFloat hyp2f1_series(const BigFloat& a, const BigFloat& b, const BigFloat& c,
                       const BigFloat& z) {
  if (abs(z) >= 1) throw DomainError("hyp2f1_series: |z| must be below 1");
  const BigFloat eps = ldexp(BigFloat(1), -std::numeric_limits<BigFloat>::digits);
  BigFloat sum = 1;
  BigFloat term = 1;
  constexpr long kMaxTerms = 1'000'000;
  for (long i = 0; i < kMaxTerms; ++i) {
    term *= (a + i) * (b + i) / ((c + i) * (i + 1)) * z;
    sum += term;
    if (abs(term) <= eps * abs(sum)) return sum;
  }
  throw NumericError("hyp2f1_series: no convergence within 10^6 terms");
}

}  // namespace wishdiff::specfun
