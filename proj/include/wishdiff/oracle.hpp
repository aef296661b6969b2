#pragma once

// Independent floating-point route to the finite-n spectral density. It
// uses the untilded basis f_j (an omega-integral evaluated by Gauss-Kronrod
// quadrature) and the hypergeometric moments h_jk, and shares nothing with
// the exact path beyond EnsembleParams.

#include "wishdiff/diagonal_law.hpp"
#include "wishdiff/linalg.hpp"
#include "wishdiff/numeric.hpp"

namespace wishdiff {

class QuadratureOracle {
 public:
  // DomainError for n > 6. ConsistencyError if the two normalization
  // formulas disagree beyond 1e-15 relative.
  explicit QuadratureOracle(const EnsembleParams& p);

  const EnsembleParams& params() const { return params_; }

  // f_j(x), 1-based j. NumericError when quadrature misses 1e-13 relative.
  BigFloat f(int j, const BigFloat& x) const;
  // f_j(0) closed form.
  BigFloat f_at_zero(int j) const;

  const BigFloatMatrix& h() const { return h_; }
  const BigFloatMatrix& h_neg() const { return h_neg_; }
  const BigFloatMatrix& h_pos() const { return h_pos_; }

  // C from the closed product over Gamma values and binomials.
  const BigFloat& normalization_product() const { return c_product_; }
  // C = (n! det h)^{-1}.
  const BigFloat& normalization_det() const { return c_det_; }

  BigFloat density(const BigFloat& x) const;

 private:
  EnsembleParams params_;
  BigFloat a1_, a2_;
  BigFloatMatrix h_, h_neg_, h_pos_;
  BigFloatMatrix inverse_h_;
  BigFloat c_product_, c_det_;
};

BigFloat quadrature_oracle_density(const EnsembleParams& p, const BigFloat& x);

}  // namespace wishdiff
