#pragma once

// Law of a single diagonal element of H = a1 W1 - a2 W2 (a weighted
// difference of two independent Gamma variables) and its successive
// derivatives, which form the Polya-ensemble basis of the eigenvalue law.

#include <complex>
#include <vector>

#include "wishdiff/exppoly.hpp"
#include "wishdiff/numeric.hpp"

namespace wishdiff {

struct EnsembleParams {
  int n = 1;   // matrix dimension
  int n1 = 1;  // degrees of freedom of W1
  int n2 = 1;  // degrees of freedom of W2
  Rational a1 = 1;
  Rational a2 = 1;

  // Throws DomainError unless 1 <= n <= min(n1, n2) and a1, a2 > 0.
  void validate() const;

  // Parameters of a2 W2 - a1 W1, whose spectrum is the mirror image.
  EnsembleParams exchanged() const { return {n, n2, n1, a2, a1}; }
};

namespace diagonal_law {

// Highest admissible derivative index: f~_j exists for j <= n1 + n2 - 1.
int max_derivative_index(const EnsembleParams& p);

// w(x): negative side rate 1/a2, positive side rate -1/a1.
exppoly::PiecewiseExpPoly build_w(const EnsembleParams& p);

// f~_j = d^{j-1} w / dx^{j-1} from the Laguerre closed forms.
// DomainError for j outside [1, n1 + n2 - 1].
exppoly::PiecewiseExpPoly build_ftilde(const EnsembleParams& p, int j);

// The two closed forms for f~_j(0) (hypergeometric in (a1+a2)/a1 and in
// (a1+a2)/a2). They coincide iff the (j-1)-th derivative is continuous.
Rational ftilde_zero_left_form(const EnsembleParams& p, int j);
Rational ftilde_zero_right_form(const EnsembleParams& p, int j);

// Left/right limits of the (j-1)-th derivative at 0 compared exactly.
// Valid for any j >= 2 (including j = n1 + n2, where they differ).
bool check_smoothness(const EnsembleParams& p, int j);

// Kummer-function forms of the polynomial parts of w on each side:
// w(x) = K e^{x/a2} 1F1(1-n2; 2-n1-n2; -(1/a1+1/a2) x) for x < 0 and
// w(x) = K e^{-x/a1} 1F1(1-n1; 2-n1-n2; (1/a1+1/a2) x) for x > 0.
// Returns the factor multiplying the exponential.
Rational kummer_neg_prefactor(const EnsembleParams& p, const Rational& x);
Rational kummer_pos_prefactor(const EnsembleParams& p, const Rational& x);

// Characteristic function E[e^{i k H_mm}] = (1 - i a1 k)^{-n1} (1 + i a2 k)^{-n2}.
struct CharFnValue {
  BigFloat re;
  BigFloat im;
};
CharFnValue char_fn(const EnsembleParams& p, const BigFloat& kappa);
// Same quantity from the partial-fraction double sum.
CharFnValue char_fn_partial_fractions(const EnsembleParams& p, const BigFloat& kappa);

}  // namespace diagonal_law

// w together with its derivatives f~_1 .. f~_count.
class DiagonalLaw {
 public:
  // count defaults to n; it may go up to n1 + n2 - 1.
  static DiagonalLaw build(const EnsembleParams& p, int count = 0);

  const EnsembleParams& params() const { return params_; }
  const exppoly::PiecewiseExpPoly& w() const { return ftilde_.front(); }
  // 1-based, as in f~_j.
  const exppoly::PiecewiseExpPoly& ftilde(int j) const;
  int count() const { return static_cast<int>(ftilde_.size()); }

 private:
  EnsembleParams params_;
  std::vector<exppoly::PiecewiseExpPoly> ftilde_;
};

}  // namespace wishdiff
