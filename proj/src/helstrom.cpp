#include "wishdiff/helstrom.hpp"

#include <string>

#include "wishdiff/errors.hpp"

namespace wishdiff::helstrom {

namespace {

// scale * (1 + s x)^power * (c0 + c1 x + ...), s = +-1.
RationalPoly factored(const Rational& scale, int s, unsigned power, std::vector<Rational> coeffs) {
  const RationalPoly base{1, s};
  return scale * base.pow(power) * RationalPoly(std::move(coeffs));
}

HelstromFixture mirrored_row(int n, int n1, int n2, RationalPoly neg, const char* abs_mean) {
  HelstromFixture f;
  f.n = n;
  f.n1 = n1;
  f.n2 = n2;
  f.pos = neg.reflected();
  f.neg = std::move(neg);
  f.mirrored = true;
  f.abs_mean = parse_rational(abs_mean);
  return f;
}

std::vector<HelstromFixture> build_table() {
  using R = Rational;
  std::vector<HelstromFixture> t;
  const RationalPoly x2 = RationalPoly::monomial(1, 2);
  t.push_back(mirrored_row(2, 2, 2, x2 * factored(6, 1, 2, {2, -1}), "18/35"));
  t.push_back(mirrored_row(2, 2, 3, x2 * factored(12, 1, 3, {1, -3, 1}), "10/21"));
  t.push_back(mirrored_row(2, 2, 4, x2 * factored(6, 1, 4, {2, -8, 20, -5}), "5/11"));
  t.push_back(mirrored_row(2, 3, 3, x2 * factored(ratio(30, 7), 1, 4, {4, -16, 12, -3}), "100/231"));
  t.push_back(mirrored_row(2, 3, 4, x2 * factored(20, 1, 5, {1, -5, 9, -5, 1}), "175/429"));
  t.push_back(mirrored_row(2, 4, 4, x2 * factored(ratio(140, 33), 1, 6, {6, -36, 82, -72, 30, -5}), "490/1287"));
  t.push_back(mirrored_row(
      3, 3, 3,
      factored(ratio(8, 143), 1, 6, {24, -144, -1064, 2058, 9772, -18158, 18088, -11753, 4494, -749}),
      "1184/3315"));

  HelstromFixture r334;
  r334.n = 3;
  r334.n1 = 3;
  r334.n2 = 4;
  r334.neg = factored(ratio(2, 663), 1, 8,
                      {440, -4675, 3507, 182244, -113388, -1883250, 2377170, -1645656, 727788, -193351, 23495});
  r334.pos = factored(ratio(2, 663), -1, 7,
                      {440, 1925, -17338, -42351, 164496, 519078, 826140, 925386, 773052, 458963, 159074, 23495});
  r334.abs_mean = parse_rational("979/2907");
  t.push_back(std::move(r334));

  t.push_back(mirrored_row(3, 4, 4,
                           factored(ratio(220, 88179), 1, 9,
                                    {572, -5148, -6831, 198759, -76527, -2406294, 4903878, -5613012, 4481748,
                                     -2583459, 1026651, -249615, 27735}),
                           "48950/156009"));
  t.push_back(mirrored_row(
      4, 4, 4,
      factored(ratio(2, 646323), 1, 12,
               {R("251940"), R("-3023280"), R("79319110"), R("-807719640"), R("-3849356784"), R("12770088968"),
                R("23325866928"), R("-70508450649"), R("97987112860"), R("-97689979023"), R("77811833736"),
                R("-51349726064"), R("28242904872"), R("-12756361800"), R("4561977896"), R("-1207136637"),
                R("208188708"), R("-17349059")}),
      "1495/5394"));
  for (auto& f : t) {
    f.neg_cdf = f.neg.integral() - RationalPoly::constant(f.neg.integral()(Rational(-1)));
    f.pos_cdf = f.pos.integral() + RationalPoly::constant(f.neg_cdf(Rational(0)));
  }
  return t;
}

const HelstromFixture& require(int n, int n1, int n2) {
  const int lo = std::min(n1, n2);
  const int hi = std::max(n1, n2);
  const HelstromFixture* f = find_fixture(n, lo, hi);
  if (f == nullptr) {
    throw UnsupportedParameters("no exact Helstrom density for (n, n1, n2) = (" + std::to_string(n) + ", " +
                                std::to_string(n1) + ", " + std::to_string(n2) +
                                "); tabulated: 2 <= n <= n1 <= n2 <= 4");
  }
  return *f;
}

}  // namespace

const std::vector<HelstromFixture>& fixture_table() {
  static const std::vector<HelstromFixture> table = build_table();
  return table;
}

const HelstromFixture* find_fixture(int n, int n1, int n2) {
  for (const auto& f : fixture_table())
    if (f.n == n && f.n1 == n1 && f.n2 == n2) return &f;
  return nullptr;
}

Rational fixture_integral(const HelstromFixture& f) { return f.neg.integrate(-1, 0) + f.pos.integrate(0, 1); }

Rational fixture_abs_mean(const HelstromFixture& f) {
  const RationalPoly x = RationalPoly::monomial(1, 1);
  const Rational v = (x * f.pos).integrate(0, 1) - (x * f.neg).integrate(-1, 0);
  if (v != f.abs_mean) {
    throw ConsistencyError("Helstrom fixture (" + std::to_string(f.n) + "," + std::to_string(f.n1) + "," +
                           std::to_string(f.n2) + "): <|x|> does not match the tabulated value");
  }
  return v;
}

Rational fixture_density(int n, int n1, int n2, const Rational& x) {
  const HelstromFixture& f = require(n, n1, n2);
  const Rational y = n1 > n2 ? Rational(-x) : x;
  if (y < -1 || y > 1) return 0;
  return y <= 0 ? f.neg(y) : f.pos(y);
}

double fixture_cdf(int n, int n1, int n2, double x) {
  const HelstromFixture& f = require(n, n1, n2);
  auto cdf_table = [&](double y) -> double {
    if (y <= -1) return 0;
    if (y >= 1) return 1;
    const BigFloat b(y);
    return to_double(y <= 0 ? f.neg_cdf(b) : f.pos_cdf(b));
  };
  // Reflection x -> -x turns F(x) into 1 - F(-x).
  return n1 > n2 ? 1 - cdf_table(-x) : cdf_table(x);
}

Rational positivity_fraction_sigma(int n, int n1, int n2) {
  const HelstromFixture& f = require(n, n1, n2);
  return n1 > n2 ? f.neg.integrate(-1, 0) : f.pos.integrate(0, 1);
}

Rational abs_mean(int n, int n1, int n2) { return fixture_abs_mean(require(n, n1, n2)); }

AsymptoticMapping helstrom_asymptotic(int n, int n1, int n2) {
  if (n < 1 || n1 < n || n2 < n) throw DomainError("helstrom_asymptotic: need 1 <= n <= n1, n2");
  AsymptoticMapping out{AsymptoticModel(ratio(n, n1), ratio(n, n2), ratio(1, n), ratio(1, n)), {}};
  if (n < 10) {
    out.warnings.push_back("asymptotic density at n = " + std::to_string(n) + " < 10 is only indicative");
  }
  for (const auto& w : out.model.warnings()) out.warnings.push_back(w);
  return out;
}

}  // namespace wishdiff::helstrom
