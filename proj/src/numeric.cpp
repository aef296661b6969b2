#include "wishdiff/numeric.hpp"

#include <mpfr.h>

#include <cctype>
#include <cmath>
#include <cstdio>
#include <stdexcept>

#include "wishdiff/errors.hpp"

namespace wishdiff {

BigFloat to_bigfloat(const Rational& q) {
  BigFloat x;
  mpfr_set_q(x.backend().data(), q.get_mpq_t(), MPFR_RNDN);
  return x;
}

Rational to_rational(double x) {
  if (!std::isfinite(x)) throw DomainError("to_rational: non-finite value");
  return Rational(x);
}

double to_double(const Rational& q) { return q.get_d(); }

double to_double(const BigFloat& x) { return x.convert_to<double>(); }

namespace {

bool all_digits(std::string_view s) {
  if (s.empty()) return false;
  for (char c : s) {
    if (!std::isdigit(static_cast<unsigned char>(c))) return false;
  }
  return true;
}

}  // namespace

Rational parse_rational(std::string_view text) {
  std::string_view body = text;
  bool negative = false;
  if (!body.empty() && (body.front() == '+' || body.front() == '-')) {
    negative = body.front() == '-';
    body.remove_prefix(1);
  }
  const auto slash = body.find('/');
  const std::string_view num = body.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view("1") : body.substr(slash + 1);
  if (!all_digits(num) || !all_digits(den)) {
    if (text.find('.') != std::string_view::npos || text.find('e') != std::string_view::npos ||
        text.find('E') != std::string_view::npos) {
      throw DomainError("'" + std::string(text) +
                        "' is a decimal; give exact values as p/q or an integer");
    }
    throw DomainError("'" + std::string(text) + "' is not a rational of the form p/q");
  }
  Integer n(std::string(num), 10);
  Integer d(std::string(den), 10);
  if (d == 0) throw DomainError("'" + std::string(text) + "' has a zero denominator");
  Rational q(negative ? Integer(-n) : n, d);
  q.canonicalize();
  return q;
}

std::string format_rational(const Rational& q) {
  if (q.get_den() == 1) return q.get_num().get_str();
  return q.get_num().get_str() + "/" + q.get_den().get_str();
}

std::string format_decimal(const BigFloat& x, int digits) {
  char buf[128];
  mpfr_snprintf(buf, sizeof(buf), "%.*Rg", digits, x.backend().data());
  return buf;
}

std::string format_decimal(const Rational& q) { return format_decimal(to_bigfloat(q)); }

Rational pow(const Rational& base, long exponent) {
  if (exponent < 0) {
    if (base == 0) throw DomainError("pow: zero to a negative power");
    return pow(Rational(1) / base, -exponent);
  }
  Integer num;
  Integer den;
  mpz_pow_ui(num.get_mpz_t(), base.get_num_mpz_t(), static_cast<unsigned long>(exponent));
  mpz_pow_ui(den.get_mpz_t(), base.get_den_mpz_t(), static_cast<unsigned long>(exponent));
  return Rational(num, den);  // already reduced: gcd(p^k, q^k) = 1
}

Rational ratio(long num, long den) {
  if (den == 0) throw DomainError("ratio: zero denominator");
  Rational q(num, den);
  q.canonicalize();
  return q;
}

}  // namespace wishdiff
