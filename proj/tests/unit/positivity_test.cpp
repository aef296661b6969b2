#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "../support/fixtures.hpp"
#include "wishdiff/errors.hpp"
#include "wishdiff/positivity.hpp"

using namespace wishdiff;
using namespace wishdiff::positivity;
using exppoly::Region;
using wishdiff::testing::params;
using wishdiff::testing::q;

namespace {

Rational second_moment(const EnsembleParams& p) {
  const Rational n(p.n), n1(p.n1), n2(p.n2);
  return p.a1 * p.a1 * n1 * (n + n1) + p.a2 * p.a2 * n2 * (n + n2) - 2 * p.a1 * p.a2 * n1 * n2;
}

}  // namespace

TEST_CASE("positivity: symmetric and scalar cases") {
  CHECK(prob_all_positive(params(1, 3, 3, "2", "2")) == q("1/2"));
  CHECK(frac_positive(params(1, 1, 1, "1", "1")) == q("1/2"));
  for (int n = 1; n <= 4; ++n) {
    const auto p = params(n, 4, 4, "3/2", "3/2");
    const auto r = report(p);
    CHECK(r.p_all_pos == r.p_all_neg);
    CHECK(r.frac_pos == q("1/2"));
    CHECK(r.frac_neg == q("1/2"));
  }
  const auto r = report(params(2, 2, 2, "1", "1"));
  CHECK(r.p_all_pos + r.p_all_neg < 1);
}

TEST_CASE("positivity: report invariants") {
  for (const auto& p : testing::small_grid()) {
    const auto r = report(p);
    CHECK(r.frac_pos + r.frac_neg == 1);
    for (const auto& v : {r.p_all_pos, r.p_all_neg, r.frac_pos, r.frac_neg}) {
      CHECK(v >= 0);
      CHECK(v <= 1);
    }
    if (p.n == 1) {
      CHECK(r.p_all_pos + r.p_all_neg == 1);
      CHECK(r.p_all_pos == r.frac_pos);
    } else {
      CHECK(r.p_all_pos + r.p_all_neg < 1);
    }
    // Exchange symmetry.
    const auto s = report(p.exchanged());
    CHECK(s.p_all_neg == r.p_all_pos);
    CHECK(s.frac_neg == r.frac_pos);
  }
  const auto r = report(testing::mid_skewed());
  CHECK(r.frac_pos + r.frac_neg == 1);
}

TEST_CASE("positivity: the fraction is the half-line mass of the density") {
  const auto e = ExactEnsemble::build(testing::mid_skewed());
  CHECK(frac_positive(e) == moment_integral(e.density, 0, Region::Positive));
  CHECK(frac_negative(e) == moment_integral(e.density, 0, Region::Negative));
}

TEST_CASE("moments") {
  CHECK(moment(testing::mid_skewed(), 0) == 1);
  CHECK(moment(testing::mid_skewed(), 1) == q("-14/3"));
  for (const auto& p : testing::small_grid()) {
    const auto e = ExactEnsemble::build(p, 6);
    CHECK(moment(e, 0) == 1);
    CHECK(moment(e, 1) == p.a1 * p.n1 - p.a2 * p.n2);
    CHECK(moment(e, 2) == second_moment(p));
    for (int g = 0; g <= 6; ++g) {
      const Rational m = moment(e, g);
      const Rational am = abs_moment(e, g);
      CHECK(am >= abs(m));
      if (g % 2 == 0) CHECK(am == m);
      CHECK(moment(e, g) == moment_integral(e.density, static_cast<unsigned>(g), Region::Both));
    }
    CHECK(abs_moment(e, 0) == 1);
  }
}

TEST_CASE("moments: limits") {
  const auto e = ExactEnsemble::build(testing::mid_skewed(), 2);
  CHECK_THROWS_AS(moment(e, 3), DomainError);
  CHECK_THROWS_AS(moment(e, -1), DomainError);
  CHECK_THROWS_AS(moment(testing::mid_skewed(), 13), DomainError);
  CHECK_NOTHROW(moment(testing::mid_skewed(), 13, 13));
}
