#pragma once

// Exact positivity probabilities and spectral moments. Every quantity is a
// sum of column-replaced determinants of h~ and is cross-checked against
// the direct exp-poly integral of the density.

#include "wishdiff/exact_spectral.hpp"

namespace wishdiff {

struct PositivityReport {
  Rational p_all_pos;  // all n eigenvalues positive
  Rational p_all_neg;  // all n eigenvalues negative
  Rational frac_pos;   // a generic eigenvalue is positive
  Rational frac_neg;
};

namespace positivity {

inline constexpr int kDefaultGammaCap = 12;

// n! C~ det[h~(+)] and n! C~ det[h~(-)].
Rational prob_all_positive(const ExactEnsemble& e);
Rational prob_all_negative(const ExactEnsemble& e);
Rational prob_all_positive(const EnsembleParams& p);
Rational prob_all_negative(const EnsembleParams& p);

// (n-1)! C~ sum_i det[h~ with column i replaced by the h~(+-) column i].
// ConsistencyError if this differs from the half-line integral of p.
Rational frac_positive(const ExactEnsemble& e);
Rational frac_negative(const ExactEnsemble& e);
Rational frac_positive(const EnsembleParams& p);
Rational frac_negative(const EnsembleParams& p);

PositivityReport report(const EnsembleParams& p);

// <lambda^gamma> and <|lambda|^gamma>. The ensemble needs at least gamma
// extra moment columns (DomainError otherwise); the params overloads build
// one and refuse gamma above `gamma_cap`.
Rational moment(const ExactEnsemble& e, int gamma);
Rational abs_moment(const ExactEnsemble& e, int gamma);
Rational moment(const EnsembleParams& p, int gamma, int gamma_cap = kDefaultGammaCap);
Rational abs_moment(const EnsembleParams& p, int gamma, int gamma_cap = kDefaultGammaCap);

}  // namespace positivity
}  // namespace wishdiff
