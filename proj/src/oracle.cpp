#include "wishdiff/oracle.hpp"

#include <boost/math/quadrature/gauss_kronrod.hpp>
#include <string>

#include "wishdiff/errors.hpp"
#include "wishdiff/specfun.hpp"

namespace wishdiff {

namespace {

constexpr int kMaxN = 6;

// The quadrature runs at a wider precision: Boost's 31-point tables for
// <= 113-bit types are __float128 literals that MPFR numbers cannot take.
using QuadFloat = BigFloatP<40>;

BigFloat gamma_big(long m) { return to_bigfloat(specfun::gamma_int(m)); }

BigFloat rising(const BigFloat& a, long k) {
  BigFloat r = 1;
  for (long i = 0; i < k; ++i) r *= a + i;
  return r;
}

}  // namespace

QuadratureOracle::QuadratureOracle(const EnsembleParams& p) : params_(p) {
  p.validate();
  if (p.n > kMaxN) {
    throw DomainError("oracle: n = " + std::to_string(p.n) + " exceeds 6 (float conditioning)");
  }
  a1_ = to_bigfloat(p.a1);
  a2_ = to_bigfloat(p.a2);
  const int n = p.n;
  const auto un = static_cast<std::size_t>(n);
  h_ = BigFloatMatrix(un, un);
  h_neg_ = BigFloatMatrix(un, un);
  h_pos_ = BigFloatMatrix(un, un);

  const BigFloat q = a1_ * a2_ / (a1_ + a2_);
  const BigFloat z_neg = a2_ / (a1_ + a2_);
  const BigFloat z_pos = a1_ / (a1_ + a2_);
  for (int j = 1; j <= n; ++j) {
    for (int k = 1; k <= n; ++k) {
      const long e = j + k + p.n1 + p.n2 - n - 1;
      const long c_pos = j + k + p.n2 - n;
      const BigFloat qe = pow(q, e);
      BigFloat hm = qe * rising(BigFloat(k + p.n1), j + p.n2 - n - 1) * gamma_big(k) *
                    gamma_big(p.n1) * specfun::hyp2f1_series(k, e, k + p.n1, z_neg);
      if ((k - 1) % 2 == 1) hm = -hm;
      const BigFloat hp = qe * rising(BigFloat(c_pos), p.n1 - 1) * gamma_big(k) *
                          gamma_big(j + p.n2 - n) * specfun::hyp2f1_series(k, e, c_pos, z_pos);
      const auto r = static_cast<std::size_t>(j - 1);
      const auto c = static_cast<std::size_t>(k - 1);
      h_neg_(r, c) = hm;
      h_pos_(r, c) = hp;
      h_(r, c) = hm + hp;
    }
  }

  BigFloat prod = 1;
  for (int j = 1; j <= n; ++j) {
    prod *= gamma_big(j) * gamma_big(j) * gamma_big(p.n1 - j + 1) * gamma_big(p.n2 - j + 1) *
            to_bigfloat(specfun::binomial(p.n1 - 1, j - 1));
  }
  c_product_ = 1 / (gamma_big(n + 1) * pow(a1_, n * p.n1) * pow(a2_, n * p.n2) * prod);
  if ((n * (n - 1) / 2) % 2 == 1) c_product_ = -c_product_;
  const BigFloat det = determinant(h_);
  c_det_ = 1 / (gamma_big(n + 1) * det);
  if (abs(c_product_ - c_det_) > BigFloat("1e-15") * abs(c_product_)) {
    throw ConsistencyError("oracle: the two normalization constants disagree");
  }
  inverse_h_ = inverse(h_);
}

BigFloat QuadratureOracle::f_at_zero(int j) const {
  const EnsembleParams& p = params_;
  const long e = j + p.n1 + p.n2 - p.n - 1;
  return pow(a1_ * a2_ / (a1_ + a2_), e) * gamma_big(e);
}

BigFloat QuadratureOracle::f(int j, const BigFloat& x) const {
  const EnsembleParams& p = params_;
  if (j < 1 || j > p.n) throw DomainError("oracle: f_j index out of range");
  const BigFloat rate = 1 + a2_ / a1_;
  const BigFloat w0 = x < 0 ? BigFloat(-x / a2_) : BigFloat(0);
  const long m = p.n2 - p.n + j - 1;
  const BigFloat base = x + a2_ * w0;
  // omega = w0 + t; the factor e^{-rate w0} is moved into the prefactor.
  const QuadFloat qw0(w0), qbase(base), qrate(rate), qa2(a2_);
  auto integrand = [&](const QuadFloat& t) {
    return pow(qw0 + t, m) * exp(-qrate * t) * pow(qbase + qa2 * t, p.n1 - 1);
  };
  QuadFloat error;
  const QuadFloat tol("1e-13");
  const QuadFloat integral = boost::math::quadrature::gauss_kronrod<QuadFloat, 31>::integrate(
      integrand, QuadFloat(0), std::numeric_limits<QuadFloat>::infinity(), 20, tol, &error);
  if (!(error <= tol * abs(integral)) && integral != 0) {
    throw NumericError("oracle: quadrature did not reach 1e-13 relative at x = " + format_decimal(x));
  }
  return pow(a2_, j + p.n2 - p.n) * exp(-x / a1_ - rate * w0) * BigFloat(integral);
}

BigFloat QuadratureOracle::density(const BigFloat& x) const {
  const int n = params_.n;
  const auto un = static_cast<std::size_t>(n);
  std::vector<BigFloat> fx(un);
  for (int j = 1; j <= n; ++j) fx[static_cast<std::size_t>(j - 1)] = f(j, x);
  // S(x, x) = n! C det(h) sum_ij (h^{-1})_ij x^i f_j(x); n! C det(h) = 1 up to
  // rounding, but the product-form C is what enters here.
  const BigFloat scale = gamma_big(n + 1) * c_product_ * determinant(h_);
  BigFloat sum = 0;
  BigFloat xp = 1;
  for (std::size_t i = 0; i < un; ++i) {
    BigFloat row = 0;
    for (std::size_t j = 0; j < un; ++j) row += inverse_h_(i, j) * fx[j];
    sum += xp * row;
    xp *= x;
  }
  return scale * sum / n;
}

BigFloat quadrature_oracle_density(const EnsembleParams& p, const BigFloat& x) { return QuadratureOracle(p).density(x); }

}  // namespace wishdiff
