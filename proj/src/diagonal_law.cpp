#include "wishdiff/diagonal_law.hpp"

#include <string>
#include <utility>

#include "wishdiff/errors.hpp"
#include "wishdiff/specfun.hpp"

namespace wishdiff {

using exppoly::PiecewiseExpPoly;
using exppoly::Side;
using exppoly::Term;
using specfun::binomial;
using specfun::gamma_int;

void EnsembleParams::validate() const {
  if (n < 1 || n1 < 1 || n2 < 1) throw DomainError("n, n1, n2 must be positive");
  if (n > n1 || n > n2) {
    throw DomainError("n must not exceed n1 or n2 (got n=" + std::to_string(n) +
                      ", n1=" + std::to_string(n1) + ", n2=" + std::to_string(n2) + ")");
  }
  if (a1 <= 0 || a2 <= 0) throw DomainError("weights a1, a2 must be positive");
}

namespace diagonal_law {

namespace {

void check_weights(const EnsembleParams& p) {
  if (p.n1 < 1 || p.n2 < 1) throw DomainError("n1, n2 must be positive");
  if (p.a1 <= 0 || p.a2 <= 0) throw DomainError("weights a1, a2 must be positive");
}

// Gamma(n1+n2-1) / (Gamma(n1) Gamma(n2)) a1^{n2-1} a2^{n1-1} / (a1+a2)^{n1+n2-1}
Rational zero_value(const EnsembleParams& p) {
  const Rational s = p.a1 + p.a2;
  return gamma_int(p.n1 + p.n2 - 1) / (gamma_int(p.n1) * gamma_int(p.n2)) *
         pow(p.a1, p.n2 - 1) * pow(p.a2, p.n1 - 1) / pow(s, p.n1 + p.n2 - 1);
}

// Common factor of the two f~_j(0) forms without the a-powers.
Rational zero_form_factor(const EnsembleParams& p) {
  return gamma_int(p.n1 + p.n2 - 1) / (gamma_int(p.n1) * gamma_int(p.n2)) /
         pow(p.a1 + p.a2, p.n1 + p.n2 - 1);
}

}  // namespace

int max_derivative_index(const EnsembleParams& p) { return p.n1 + p.n2 - 1; }

PiecewiseExpPoly build_w(const EnsembleParams& p) { return build_ftilde(p, 1); }

PiecewiseExpPoly build_ftilde(const EnsembleParams& p, int j) {
  check_weights(p);
  if (j < 1 || j > max_derivative_index(p)) {
    throw DomainError("f~_j requires 1 <= j <= n1+n2-1 = " + std::to_string(max_derivative_index(p)) +
                      " (got j=" + std::to_string(j) + ")");
  }
  const int n1 = p.n1;
  const int n2 = p.n2;
  const Rational s = p.a1 + p.a2;
  const Rational neg_rate = Rational(1) / p.a2;
  const Rational pos_rate = Rational(-1) / p.a1;

  // Laguerre L_{nu-1}^{(j-nu)} expanded in powers of x; argument -x/a2 on
  // the left and x/a1 on the right.
  std::vector<Term> neg;
  for (int nu = 1; nu <= n2; ++nu) {
    Rational k = binomial(n1 + n2 - nu - 1, n1 - 1) * pow(p.a1, n2 - nu) * pow(p.a2, n1 - j) /
                 pow(s, n1 + n2 - nu);
    if ((nu - 1) % 2 != 0) k = -k;
    const int deg = nu - 1;
    const int sup = j - nu;
    for (int i = 0; i <= deg; ++i) {
      // (-1)^i from the Laguerre sum times (-1)^i from (-x/a2)^i cancel.
      neg.push_back({k * binomial(deg + sup, deg - i) / (gamma_int(i + 1) * pow(p.a2, i)),
                     static_cast<unsigned>(i), neg_rate});
    }
  }
  std::vector<Term> pos;
  for (int nu = 1; nu <= n1; ++nu) {
    Rational k = binomial(n1 + n2 - nu - 1, n2 - 1) * pow(p.a1, n2 - j) * pow(p.a2, n1 - nu) /
                 pow(s, n1 + n2 - nu);
    if ((nu - j) % 2 != 0) k = -k;
    const int deg = nu - 1;
    const int sup = j - nu;
    for (int i = 0; i <= deg; ++i) {
      Rational c = k * binomial(deg + sup, deg - i) / (gamma_int(i + 1) * pow(p.a1, i));
      if (i % 2 != 0) c = -c;
      pos.push_back({c, static_cast<unsigned>(i), pos_rate});
    }
  }
  PiecewiseExpPoly f{Side(std::move(neg)), Side(std::move(pos)), ftilde_zero_left_form(p, j)};
  if (f.neg.limit_at_zero() != f.at_zero || f.pos.limit_at_zero() != f.at_zero) {
    throw ConsistencyError("f~_" + std::to_string(j) + ": one-sided limits disagree with f~_j(0)");
  }
  return f;
}

Rational ftilde_zero_left_form(const EnsembleParams& p, int j) {
  check_weights(p);
  if (j < 1) throw DomainError("f~_j(0): j must be positive");
  const Rational z = (p.a1 + p.a2) / p.a1;
  return zero_form_factor(p) * pow(p.a1, p.n2 - 1) * pow(p.a2, p.n1 - j) *
         specfun::hyp2f1_terminating(j - 1, 1 - p.n2, 2 - p.n1 - p.n2, z);
}

Rational ftilde_zero_right_form(const EnsembleParams& p, int j) {
  check_weights(p);
  if (j < 1) throw DomainError("f~_j(0): j must be positive");
  const Rational z = (p.a1 + p.a2) / p.a2;
  Rational v = zero_form_factor(p) * pow(p.a1, p.n2 - j) * pow(p.a2, p.n1 - 1) *
               specfun::hyp2f1_terminating(j - 1, 1 - p.n1, 2 - p.n1 - p.n2, z);
  return (j - 1) % 2 == 0 ? v : Rational(-v);
}

bool check_smoothness(const EnsembleParams& p, int j) {
  if (j < 2) throw DomainError("check_smoothness: j must be at least 2");
  return ftilde_zero_left_form(p, j) == ftilde_zero_right_form(p, j);
}

Rational kummer_neg_prefactor(const EnsembleParams& p, const Rational& x) {
  check_weights(p);
  const Rational z = -(Rational(1) / p.a1 + Rational(1) / p.a2) * x;
  return zero_value(p) * specfun::hyp1f1_terminating(p.n2 - 1, 2 - p.n1 - p.n2, z);
}

Rational kummer_pos_prefactor(const EnsembleParams& p, const Rational& x) {
  check_weights(p);
  const Rational z = (Rational(1) / p.a1 + Rational(1) / p.a2) * x;
  return zero_value(p) * specfun::hyp1f1_terminating(p.n1 - 1, 2 - p.n1 - p.n2, z);
}

namespace {

struct Cx {
  BigFloat re;
  BigFloat im;
};

Cx mul(const Cx& a, const Cx& b) { return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re}; }

Cx reciprocal(const Cx& a) {
  const BigFloat d = a.re * a.re + a.im * a.im;
  return {a.re / d, -a.im / d};
}

Cx ipow(const Cx& a, int e) {
  Cx r{1, 0};
  for (int i = 0; i < e; ++i) r = mul(r, a);
  return r;
}

}  // namespace

CharFnValue char_fn(const EnsembleParams& p, const BigFloat& kappa) {
  check_weights(p);
  const Cx left{1, -to_bigfloat(p.a1) * kappa};   // 1 - i a1 k
  const Cx right{1, to_bigfloat(p.a2) * kappa};   // 1 + i a2 k
  const Cx v = reciprocal(mul(ipow(left, p.n1), ipow(right, p.n2)));
  return {v.re, v.im};
}

CharFnValue char_fn_partial_fractions(const EnsembleParams& p, const BigFloat& kappa) {
  check_weights(p);
  const Rational s = p.a1 + p.a2;
  const Rational u1 = p.a1 / s;
  const Rational u2 = p.a2 / s;
  const Cx left_inv = reciprocal({1, -to_bigfloat(p.a1) * kappa});
  const Cx right_inv = reciprocal({1, to_bigfloat(p.a2) * kappa});
  Cx sum{0, 0};
  Cx lp{1, 0};
  for (int nu = 1; nu <= p.n1; ++nu) {
    lp = mul(lp, left_inv);
    const BigFloat c = to_bigfloat(binomial(p.n1 + p.n2 - nu - 1, p.n2 - 1) * pow(u1, p.n2) *
                                   pow(u2, p.n1 - nu));
    sum.re += c * lp.re;
    sum.im += c * lp.im;
  }
  Cx rp{1, 0};
  for (int nu = 1; nu <= p.n2; ++nu) {
    rp = mul(rp, right_inv);
    const BigFloat c = to_bigfloat(binomial(p.n1 + p.n2 - nu - 1, p.n1 - 1) * pow(u2, p.n1) *
                                   pow(u1, p.n2 - nu));
    sum.re += c * rp.re;
    sum.im += c * rp.im;
  }
  return {sum.re, sum.im};
}

}  // namespace diagonal_law

DiagonalLaw DiagonalLaw::build(const EnsembleParams& p, int count) {
  p.validate();
  if (count <= 0) count = p.n;
  DiagonalLaw law;
  law.params_ = p;
  law.ftilde_.reserve(static_cast<std::size_t>(count));
  for (int j = 1; j <= count; ++j) law.ftilde_.push_back(diagonal_law::build_ftilde(p, j));
  return law;
}

const PiecewiseExpPoly& DiagonalLaw::ftilde(int j) const {
  if (j < 1 || j > count()) throw DomainError("DiagonalLaw::ftilde: index out of range");
  return ftilde_[static_cast<std::size_t>(j - 1)];
}

}  // namespace wishdiff
