#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <boost/math/quadrature/gauss.hpp>
#include <cmath>

#include "../support/fixtures.hpp"
#include "wishdiff/errors.hpp"
#include "wishdiff/helstrom.hpp"
#include "wishdiff/montecarlo.hpp"

using namespace wishdiff;
using namespace wishdiff::helstrom;
using wishdiff::testing::q;

namespace {

std::string label(const HelstromFixture& f) {
  return std::to_string(f.n) + "," + std::to_string(f.n1) + "," + std::to_string(f.n2);
}

}  // namespace

TEST_CASE("table holds the ten rows with tabulated trace-distance means") {
  const auto& t = fixture_table();
  REQUIRE(t.size() == 10);
  const struct {
    int n, n1, n2;
    const char* mean;
  } expected[] = {{2, 2, 2, "18/35"},      {2, 2, 3, "10/21"},       {2, 2, 4, "5/11"},
                  {2, 3, 3, "100/231"},    {2, 3, 4, "175/429"},     {2, 4, 4, "490/1287"},
                  {3, 3, 3, "1184/3315"},  {3, 3, 4, "979/2907"},    {3, 4, 4, "48950/156009"},
                  {4, 4, 4, "1495/5394"}};
  for (const auto& e : expected) {
    const HelstromFixture* f = find_fixture(e.n, e.n1, e.n2);
    REQUIRE(f != nullptr);
    CHECK(fixture_abs_mean(*f) == q(e.mean));
  }
}

TEST_CASE("every fixture is a normalized nonnegative density") {
  for (const auto& f : fixture_table()) {
    INFO(label(f));
    CHECK(fixture_integral(f) == 1);
    for (int i = 0; i <= 200; ++i) {
      const Rational x = ratio(i - 100, 100);
      CHECK(fixture_density(f.n, f.n1, f.n2, x) >= 0);
    }
    // Both branches vanish at the ends of [-1, 1].
    CHECK(f.neg(Rational(-1)) == 0);
    CHECK(f.pos(Rational(1)) == 0);
  }
}

TEST_CASE("branches join continuously at zero") {
  for (const auto& f : fixture_table()) {
    INFO(label(f));
    CHECK(f.neg(Rational(0)) == f.pos(Rational(0)));
  }
}

TEST_CASE("point evaluation and support") {
  CHECK(fixture_density(2, 2, 2, q("-1/2")) == q("15/16"));
  for (int i = -10; i <= 10; ++i) {
    const Rational x = ratio(i, 10);
    CHECK(fixture_density(2, 2, 2, x) == fixture_density(2, 2, 2, -x));
  }
  for (const auto& f : fixture_table()) {
    CHECK(fixture_density(f.n, f.n1, f.n2, q("3/2")) == 0);
    CHECK(fixture_density(f.n, f.n1, f.n2, q("-3/2")) == 0);
  }
}

TEST_CASE("swapping n1 and n2 reflects the density") {
  for (int i = -10; i <= 10; ++i) {
    const Rational x = ratio(i, 10);
    CHECK(fixture_density(3, 4, 3, x) == fixture_density(3, 3, 4, -x));
    CHECK(fixture_density(2, 4, 2, x) == fixture_density(2, 2, 4, -x));
  }
  CHECK(positivity_fraction_sigma(3, 4, 3) == 1 - positivity_fraction_sigma(3, 3, 4));
  CHECK(abs_mean(3, 4, 3) == q("979/2907"));
  CHECK(std::abs(fixture_cdf(3, 4, 3, 0.3) - (1 - fixture_cdf(3, 3, 4, -0.3))) < 1e-15);
}

TEST_CASE("untabulated combinations are unsupported") {
  CHECK_THROWS_AS(fixture_density(5, 5, 5, 0), UnsupportedParameters);
  CHECK_THROWS_AS(fixture_density(2, 2, 5, 0), UnsupportedParameters);
  CHECK_THROWS_AS(positivity_fraction_sigma(1, 2, 2), UnsupportedParameters);
  CHECK(find_fixture(3, 4, 3) == nullptr);
}

TEST_CASE("fraction of positive eigenvalues") {
  for (int n1 = 2; n1 <= 4; ++n1)
    for (int n2 = n1; n2 <= 4; ++n2) CHECK(positivity_fraction_sigma(2, n1, n2) == q("1/2"));
  CHECK(positivity_fraction_sigma(3, 3, 3) == q("1/2"));
  CHECK(positivity_fraction_sigma(3, 4, 4) == q("1/2"));
  CHECK(positivity_fraction_sigma(4, 4, 4) == q("1/2"));

  // Independent check: quadrature of the factored positive branch in double.
  const double pos_coeffs[] = {440, 1925, -17338, -42351, 164496, 519078,
                               826140, 925386, 773052, 458963, 159074, 23495};
  auto branch = [&](double x) {
    double acc = 0;
    for (int i = 11; i >= 0; --i) acc = acc * x + pos_coeffs[i];
    return 2.0 / 663.0 * std::pow(1 - x, 7) * acc;
  };
  const double numeric = boost::math::quadrature::gauss<double, 30>::integrate(branch, 0.0, 1.0);
  const Rational exact = positivity_fraction_sigma(3, 3, 4);
  CHECK(exact != q("1/2"));
  CHECK(std::abs(to_double(exact) - numeric) < 1e-13);
  CHECK(exact == q("913/1938"));
}

TEST_CASE("cdf matches exact integration") {
  for (const auto& f : fixture_table()) {
    INFO(label(f));
    CHECK(fixture_cdf(f.n, f.n1, f.n2, -2) == 0);
    CHECK(fixture_cdf(f.n, f.n1, f.n2, 2) == 1);
    CHECK(std::abs(fixture_cdf(f.n, f.n1, f.n2, 0) - to_double(f.neg.integrate(-1, 0))) < 1e-15);
    double prev = 0;
    for (int i = -20; i <= 20; ++i) {
      const double v = fixture_cdf(f.n, f.n1, f.n2, i / 20.0);
      CHECK(v >= prev - 1e-15);
      prev = v;
    }
  }
}

TEST_CASE("asymptotic mapping") {
  const auto m = helstrom_asymptotic(20, 20, 20);
  const double edge = std::sqrt((11 + 5 * std::sqrt(5.0)) / 2) / 20;
  CHECK(std::abs(m.model.support().hi - edge) < 1e-10);
  CHECK(std::abs(m.model.support().lo + edge) < 1e-10);
  CHECK(std::abs(m.model.support().hi - 0.16651) < 1e-5);
  CHECK(m.warnings.empty());

  const auto b = helstrom_asymptotic(50, 70, 90);
  CHECK(b.model.c1() == q("5/7"));
  CHECK(b.model.c2() == q("5/9"));
  CHECK(b.model.alpha1() == q("1/50"));
  CHECK(b.model.alpha2() == q("1/50"));

  const auto c = helstrom_asymptotic(100, 400, 300);
  CHECK(c.model.c1() == q("1/4"));
  CHECK(c.model.c2() == q("1/3"));

  CHECK_FALSE(helstrom_asymptotic(4, 4, 4).warnings.empty());
  CHECK_THROWS_AS(helstrom_asymptotic(5, 4, 6), DomainError);
}

TEST_CASE("support edge scales as 1/n") {
  for (int n : {10, 20, 40}) {
    const double a = helstrom_asymptotic(n, n, n).model.support().hi;
    const double b = helstrom_asymptotic(2 * n, 2 * n, 2 * n).model.support().hi;
    CHECK(std::abs(b - a / 2) < 1e-8);
  }
  for (int n : {10, 25}) {
    const double a = helstrom_asymptotic(n, 2 * n, 3 * n).model.support().hi;
    const double b = helstrom_asymptotic(2 * n, 4 * n, 6 * n).model.support().hi;
    CHECK(std::abs(b - a / 2) < 1e-8);
  }
}

TEST_CASE("monte carlo spectra match every fixture") {
  for (const auto& f : fixture_table()) {
    INFO(label(f));
    mc::SimulationOptions opt;
    opt.matrices = (200000 + f.n - 1) / f.n;
    opt.seed = 2024;
    const auto spectrum = mc::simulate_helstrom(f.n, f.n1, f.n2, opt);
    REQUIRE(spectrum.samples().size() >= 200000);
    const double ks = mc::ks_distance(spectrum, [&](double x) { return fixture_cdf(f.n, f.n1, f.n2, x); });
    CHECK(ks <= 0.01);
  }
  // Reflected order.
  mc::SimulationOptions opt;
  opt.matrices = 70000;
  opt.seed = 7;
  const auto s = mc::simulate_helstrom(3, 4, 3, opt);
  CHECK(mc::ks_distance(s, [](double x) { return fixture_cdf(3, 4, 3, x); }) <= 0.01);
}
