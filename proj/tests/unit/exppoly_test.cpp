#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <random>

#include "../support/fixtures.hpp"
#include "wishdiff/diagonal_law.hpp"
#include "wishdiff/errors.hpp"
#include "wishdiff/exppoly.hpp"

using namespace wishdiff;
using namespace wishdiff::exppoly;
using wishdiff::testing::q;

namespace {

Side single(const Rational& c, unsigned p, const Rational& r) {
  Side s;
  s.add(c, p, r);
  return s;
}

BigFloat babs(const BigFloat& x) { return boost::multiprecision::abs(x); }

}  // namespace

TEST_CASE("evaluate") {
  PiecewiseExpPoly f{Side(), single(1, 1, -1), 0};
  CHECK(babs(evaluate(f, Rational(1)) - boost::multiprecision::exp(BigFloat(-1))) < BigFloat("1e-30"));
  f.at_zero = q("7/3");
  CHECK(evaluate(f, Rational(0)) == to_bigfloat(q("7/3")));
  CHECK(evaluate(f, BigFloat(0)) == to_bigfloat(q("7/3")));
  CHECK(evaluate(f, Rational(-2)) == 0);

  const auto w = diagonal_law::build_w(testing::small_skewed());
  CHECK(w.at_zero == q("13500/28561"));
  CHECK(evaluate(w, Rational(0)) == to_bigfloat(q("13500/28561")));
}

TEST_CASE("Evaluator agrees with exact evaluation") {
  const auto w = diagonal_law::build_w(testing::small_skewed());
  const Evaluator ev(w);
  for (int i = -20; i <= 20; ++i) {
    const Rational x(i, 7);
    CHECK(babs(ev(to_bigfloat(x)) - evaluate(w, x)) < BigFloat("1e-28"));
    CHECK(std::abs(ev(to_double(x)) - to_double(evaluate(w, x))) < 1e-14);
  }
}

TEST_CASE("derivative") {
  PiecewiseExpPoly f{Side(), single(1, 1, -1), 0};
  const auto d = derivative(f);
  Side expect;
  expect.add(1, 0, -1);
  expect.add(-1, 1, -1);
  CHECK(d.pos == expect);

  const Rational r = q("-3/2");
  CHECK(exppoly::derivative(single(q("5/7"), 0, r)) == single(q("5/7") * r, 0, r));
}

TEST_CASE("repeated differentiation reproduces the closed forms") {
  const auto p = testing::small_skewed();
  PiecewiseExpPoly f = diagonal_law::build_w(p);
  for (int j = 2; j <= 4; ++j) {
    f = derivative(f);
    CHECK(f == diagonal_law::build_ftilde(p, j));
  }
}

TEST_CASE("moment_integral") {
  CHECK(moment_integral(single(1, 2, -2), 0, Region::Positive) == q("1/4"));
  CHECK(moment_integral(single(-1, 1, 1), 0, Region::Negative) == 1);
  CHECK_THROWS_AS(moment_integral(single(1, 0, 1), 0, Region::Positive), DomainError);
  CHECK_THROWS_AS(moment_integral(single(1, 0, -1), 0, Region::Negative), DomainError);
  for (const auto& p : testing::small_grid()) {
    CHECK(moment_integral(diagonal_law::build_w(p), 0, Region::Both) == 1);
  }
}

TEST_CASE("multiply") {
  CHECK(multiply(single(1, 0, -1), single(1, 1, -1)) == single(1, 1, -2));
  const Rational r = q("2/5");
  CHECK(multiply(single(1, 0, r), single(1, 0, -r)) == single(1, 0, 0));

  Side a;
  a.add(1, 0, -1);
  a.add(2, 1, -1);
  a.add(3, 0, -2);
  Side b;
  b.add(q("1/2"), 2, -3);
  b.add(-1, 0, -1);
  b.add(5, 3, -2);
  CHECK(multiply(a, b).size() <= 9);
}

TEST_CASE("linear operations are exact") {
  const auto p = testing::mid_skewed();
  const auto f = diagonal_law::build_ftilde(p, 2);
  const auto g = diagonal_law::build_ftilde(p, 3);
  CHECK((f + g) - g == f);
  CHECK(q("3/11") * (q("11/3") * f) == f);
  CHECK(reflected(reflected(g)) == g);
}

TEST_CASE("integration by parts") {
  // For f continuous at 0: int x^k f' = -k int x^{k-1} f, and int f' = 0.
  for (const auto& p : testing::small_grid()) {
    if (p.n1 + p.n2 < 4) continue;
    for (int j = 1; j <= p.n1 + p.n2 - 2; ++j) {
      const auto f = diagonal_law::build_ftilde(p, j);
      const auto fp = derivative(f);
      CHECK(moment_integral(fp, 0, Region::Both) == 0);
      CHECK(moment_integral(fp, 0, Region::Negative) == f.neg.limit_at_zero());
      CHECK(moment_integral(fp, 0, Region::Positive) == -f.pos.limit_at_zero());
      for (unsigned k = 1; k <= 4; ++k) {
        CHECK(moment_integral(fp, k, Region::Both) == -Rational(k) * moment_integral(f, k - 1, Region::Both));
      }
    }
  }
}

TEST_CASE("continuity across zero") {
  for (const auto& p : testing::small_grid()) {
    for (int j = 1; j <= p.n1 + p.n2 - 2; ++j) {
      const auto f = diagonal_law::build_ftilde(p, j);
      // One-sided limits of the two side expressions.
      const BigFloat left = evaluate(f.neg, BigFloat(0));
      const BigFloat right = evaluate(f.pos, BigFloat(0));
      CHECK(babs(left - right) < BigFloat("1e-25"));
      // Symmetric difference at 1e-8 is first order in the next derivative.
      const BigFloat eps("1e-8");
      const auto next = diagonal_law::build_ftilde(p, j + 1);
      const BigFloat diff = evaluate(f, eps) - evaluate(f, BigFloat(-eps));
      CHECK(babs(diff - 2 * eps * to_bigfloat(next.at_zero)) < BigFloat("1e-12"));
    }
  }
}

TEST_CASE("Cumulative") {
  const auto p = testing::mid_skewed();
  const auto w = diagonal_law::build_w(p);
  const Cumulative cdf(w);
  CHECK(cdf.total() == 1);
  CHECK(cdf.mass_negative() == moment_integral(w, 0, Region::Negative));
  CHECK(babs(cdf(Rational(0)) - to_bigfloat(cdf.mass_negative())) < BigFloat("1e-30"));
  CHECK(babs(cdf(Rational(-1000))) < BigFloat("1e-30"));
  CHECK(babs(cdf(Rational(1000)) - 1) < BigFloat("1e-30"));
  BigFloat prev = 0;
  for (int i = -40; i <= 40; ++i) {
    const BigFloat v = cdf(ratio(i, 4));
    CHECK(v >= prev);
    prev = v;
  }
  const CumulativeEvaluator fast(w);
  for (int i = -40; i <= 40; ++i) {
    CHECK(std::abs(fast(i / 4.0) - to_double(cdf(ratio(i, 4)))) < 1e-14);
  }
}

TEST_CASE("validate") {
  PiecewiseExpPoly bad{single(1, 0, -1), Side(), 0};
  CHECK_THROWS_AS(bad.validate(), DomainError);
  PiecewiseExpPoly bad2{Side(), single(1, 0, 0), 0};
  CHECK_THROWS_AS(bad2.validate(), DomainError);
  CHECK_NOTHROW(diagonal_law::build_w(testing::small_skewed()).validate());
}
