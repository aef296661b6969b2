#include "wishdiff/positivity.hpp"

#include <algorithm>
#include <string>

#include "wishdiff/errors.hpp"
#include "wishdiff/specfun.hpp"

namespace wishdiff::positivity {

using exppoly::Region;

namespace {

RationalMatrix square_of(const RationalMatrix& m, int n) {
  return m.block(static_cast<std::size_t>(n), static_cast<std::size_t>(n));
}

// (n-1)! C~ sum_i det[h~ with column i replaced by column_for(i)].
template <typename ColumnFor>
Rational replacement_sum(const ExactEnsemble& e, ColumnFor column_for) {
  const int n = e.moments.n();
  const RationalMatrix h = e.moments.square();
  Rational sum = 0;
  for (int i = 1; i <= n; ++i) {
    sum += determinant(replace_column(h, static_cast<std::size_t>(i - 1), column_for(i)));
  }
  return specfun::gamma_int(n) * exact::normalization(e.moments) * sum;
}

void require_columns(const ExactEnsemble& e, int gamma) {
  if (gamma < 0) throw DomainError("moment order must be nonnegative");
  if (e.moments.cols < e.moments.n() + gamma) {
    throw DomainError("moment order " + std::to_string(gamma) + " needs " + std::to_string(gamma) +
                      " extra moment columns");
  }
}

void require_cap(int gamma, int cap) {
  if (gamma > cap) {
    throw DomainError("moment order " + std::to_string(gamma) + " exceeds the cap " + std::to_string(cap));
  }
}

// Signed half-line integral of x^gamma p.
Rational density_moment(const ExactEnsemble& e, int gamma, Region region) {
  return moment_integral(e.density, static_cast<unsigned>(gamma), region);
}

}  // namespace

Rational prob_all_positive(const ExactEnsemble& e) {
  const int n = e.moments.n();
  return specfun::gamma_int(n + 1) * exact::normalization(e.moments) * determinant(square_of(e.moments.pos, n));
}

Rational prob_all_negative(const ExactEnsemble& e) {
  const int n = e.moments.n();
  return specfun::gamma_int(n + 1) * exact::normalization(e.moments) * determinant(square_of(e.moments.neg, n));
}

Rational prob_all_positive(const EnsembleParams& p) { return prob_all_positive(ExactEnsemble::build(p)); }
Rational prob_all_negative(const EnsembleParams& p) { return prob_all_negative(ExactEnsemble::build(p)); }

Rational frac_positive(const ExactEnsemble& e) {
  const Rational v = replacement_sum(e, [&](int i) { return e.moments.column(e.moments.pos, i); });
  if (v != density_moment(e, 0, Region::Positive)) {
    throw ConsistencyError("p+: determinant sum differs from the integral of the density");
  }
  return v;
}

Rational frac_negative(const ExactEnsemble& e) {
  const Rational v = replacement_sum(e, [&](int i) { return e.moments.column(e.moments.neg, i); });
  if (v != density_moment(e, 0, Region::Negative)) {
    throw ConsistencyError("p-: determinant sum differs from the integral of the density");
  }
  return v;
}

Rational frac_positive(const EnsembleParams& p) { return frac_positive(ExactEnsemble::build(p)); }
Rational frac_negative(const EnsembleParams& p) { return frac_negative(ExactEnsemble::build(p)); }

PositivityReport report(const EnsembleParams& p) {
  const ExactEnsemble e = ExactEnsemble::build(p);
  PositivityReport r{prob_all_positive(e), prob_all_negative(e), frac_positive(e), frac_negative(e)};
  if (r.frac_pos + r.frac_neg != 1) throw ConsistencyError("p+ + p- != 1");
  return r;
}

Rational moment(const ExactEnsemble& e, int gamma) {
  require_columns(e, gamma);
  const Rational v = replacement_sum(e, [&](int i) { return e.moments.column(e.moments.total, i + gamma); });
  if (v != density_moment(e, gamma, Region::Both)) {
    throw ConsistencyError("moment: determinant sum differs from the integral of the density");
  }
  return v;
}

Rational abs_moment(const ExactEnsemble& e, int gamma) {
  require_columns(e, gamma);
  const bool odd = gamma % 2 == 1;
  const Rational v = replacement_sum(e, [&](int i) {
    std::vector<Rational> col = e.moments.column(e.moments.pos, i + gamma);
    const std::vector<Rational> neg = e.moments.column(e.moments.neg, i + gamma);
    for (std::size_t r = 0; r < col.size(); ++r) col[r] += odd ? Rational(-neg[r]) : neg[r];
    return col;
  });
  const Rational pos_part = density_moment(e, gamma, Region::Positive);
  const Rational neg_part = density_moment(e, gamma, Region::Negative);
  if (v != pos_part + (odd ? Rational(-neg_part) : neg_part)) {
    throw ConsistencyError("abs_moment: determinant sum differs from the integral of the density");
  }
  return v;
}

Rational moment(const EnsembleParams& p, int gamma, int gamma_cap) {
  require_cap(gamma, gamma_cap);
  return moment(ExactEnsemble::build(p, std::max(gamma, 0)), gamma);
}

Rational abs_moment(const EnsembleParams& p, int gamma, int gamma_cap) {
  require_cap(gamma, gamma_cap);
  return abs_moment(ExactEnsemble::build(p, std::max(gamma, 0)), gamma);
}

}  // namespace wishdiff::positivity
