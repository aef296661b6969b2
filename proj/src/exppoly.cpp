#include "wishdiff/exppoly.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <tuple>
#include <utility>

#include "wishdiff/errors.hpp"
#include "wishdiff/specfun.hpp"

namespace wishdiff::exppoly {

Side::Side(std::vector<Term> terms) : terms_(std::move(terms)) { normalize(); }

void Side::normalize() {
  std::sort(terms_.begin(), terms_.end(), [](const Term& a, const Term& b) {
    if (a.rate != b.rate) return a.rate < b.rate;
    return a.power < b.power;
  });
  std::vector<Term> merged;
  for (auto& t : terms_) {
    if (!merged.empty() && merged.back().rate == t.rate && merged.back().power == t.power) {
      merged.back().coeff += t.coeff;
    } else {
      merged.push_back(std::move(t));
    }
  }
  std::erase_if(merged, [](const Term& t) { return t.coeff == 0; });
  terms_ = std::move(merged);
}

void Side::add(const Rational& coeff, unsigned power, const Rational& rate) {
  terms_.push_back({coeff, power, rate});
  normalize();
}

Side Side::shifted(unsigned m) const {
  Side out = *this;
  for (auto& t : out.terms_) t.power += m;
  return out;
}

Rational Side::limit_at_zero() const {
  Rational v = 0;
  for (const auto& t : terms_)
    if (t.power == 0) v += t.coeff;
  return v;
}

Side& Side::operator+=(const Side& o) {
  terms_.insert(terms_.end(), o.terms_.begin(), o.terms_.end());
  normalize();
  return *this;
}

Side& Side::operator-=(const Side& o) {
  for (const auto& t : o.terms_) terms_.push_back({-t.coeff, t.power, t.rate});
  normalize();
  return *this;
}

Side& Side::operator*=(const Rational& s) {
  for (auto& t : terms_) t.coeff *= s;
  normalize();
  return *this;
}

Side multiply(const Side& f, const Side& g) {
  std::vector<Term> out;
  out.reserve(f.size() * g.size());
  for (const auto& a : f.terms())
    for (const auto& b : g.terms()) out.push_back({a.coeff * b.coeff, a.power + b.power, a.rate + b.rate});
  return Side(std::move(out));
}

Side derivative(const Side& f) {
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    out.push_back({t.coeff * t.rate, t.power, t.rate});
    if (t.power > 0) out.push_back({t.coeff * t.power, t.power - 1, t.rate});
  }
  return Side(std::move(out));
}

namespace {

// Visit contiguous same-rate groups; `fn(rate, first, last)`.
template <typename Fn>
void for_each_rate(const Side& f, Fn fn) {
  const auto& ts = f.terms();
  std::size_t i = 0;
  while (i < ts.size()) {
    std::size_t j = i;
    while (j < ts.size() && ts[j].rate == ts[i].rate) ++j;
    fn(ts[i].rate, i, j);
    i = j;
  }
}

}  // namespace

BigFloat evaluate(const Side& f, const Rational& x) {
  BigFloat sum = 0;
  const auto& ts = f.terms();
  for_each_rate(f, [&](const Rational& rate, std::size_t first, std::size_t last) {
    Rational poly = 0;
    for (std::size_t k = first; k < last; ++k) poly += ts[k].coeff * pow(x, ts[k].power);
    sum += to_bigfloat(poly) * exp(to_bigfloat(rate * x));
  });
  return sum;
}

BigFloat evaluate(const Side& f, const BigFloat& x) {
  BigFloat sum = 0;
  const auto& ts = f.terms();
  for_each_rate(f, [&](const Rational& rate, std::size_t first, std::size_t last) {
    BigFloat poly = 0;
    for (std::size_t k = first; k < last; ++k) poly += to_bigfloat(ts[k].coeff) * pow(x, ts[k].power);
    sum += poly * exp(to_bigfloat(rate) * x);
  });
  return sum;
}

Rational moment_integral(const Side& f, unsigned k, Region region) {
  if (region == Region::Both) throw DomainError("moment_integral: a Side covers one half line only");
  Rational total = 0;
  for (const auto& t : f.terms()) {
    const unsigned m = t.power + k;
    const Rational fact = specfun::gamma_int(static_cast<long>(m) + 1);
    if (region == Region::Positive) {
      if (t.rate >= 0) throw DomainError("moment_integral: positive-side rate must be negative");
      // int_0^inf x^m e^{r x} dx = m! / (-r)^{m+1}
      total += t.coeff * fact / pow(Rational(-t.rate), static_cast<long>(m) + 1);
    } else {
      if (t.rate <= 0) throw DomainError("moment_integral: negative-side rate must be positive");
      // int_{-inf}^0 x^m e^{r x} dx = (-1)^m m! / r^{m+1}
      Rational v = t.coeff * fact / pow(t.rate, static_cast<long>(m) + 1);
      total += (m % 2 == 0) ? v : Rational(-v);
    }
  }
  return total;
}

void PiecewiseExpPoly::validate() const {
  for (const auto& t : neg.terms())
    if (t.rate <= 0) throw DomainError("PiecewiseExpPoly: negative-side rate must be > 0");
  for (const auto& t : pos.terms())
    if (t.rate >= 0) throw DomainError("PiecewiseExpPoly: positive-side rate must be < 0");
}

BigFloat evaluate(const PiecewiseExpPoly& f, const Rational& x) {
  if (x < 0) return evaluate(f.neg, x);
  if (x > 0) return evaluate(f.pos, x);
  return to_bigfloat(f.at_zero);
}

BigFloat evaluate(const PiecewiseExpPoly& f, const BigFloat& x) {
  if (x < 0) return evaluate(f.neg, x);
  if (x > 0) return evaluate(f.pos, x);
  return to_bigfloat(f.at_zero);
}

PiecewiseExpPoly derivative(const PiecewiseExpPoly& f) {
  PiecewiseExpPoly d{derivative(f.neg), derivative(f.pos), 0};
  d.at_zero = d.neg.limit_at_zero();
  return d;
}

Rational moment_integral(const PiecewiseExpPoly& f, unsigned k, Region region) {
  switch (region) {
    case Region::Negative:
      return moment_integral(f.neg, k, Region::Negative);
    case Region::Positive:
      return moment_integral(f.pos, k, Region::Positive);
    case Region::Both:
      break;
  }
  return moment_integral(f.neg, k, Region::Negative) + moment_integral(f.pos, k, Region::Positive);
}

PiecewiseExpPoly operator+(const PiecewiseExpPoly& a, const PiecewiseExpPoly& b) {
  return {a.neg + b.neg, a.pos + b.pos, a.at_zero + b.at_zero};
}

PiecewiseExpPoly operator-(const PiecewiseExpPoly& a, const PiecewiseExpPoly& b) {
  return {a.neg - b.neg, a.pos - b.pos, a.at_zero - b.at_zero};
}

PiecewiseExpPoly operator*(const Rational& s, const PiecewiseExpPoly& f) {
  return {f.neg * s, f.pos * s, f.at_zero * s};
}

PiecewiseExpPoly shifted(const PiecewiseExpPoly& f, unsigned m) {
  return {f.neg.shifted(m), f.pos.shifted(m), m == 0 ? f.at_zero : Rational(0)};
}

PiecewiseExpPoly reflected(const PiecewiseExpPoly& f) {
  auto flip = [](const Side& s) {
    std::vector<Term> out;
    for (const auto& t : s.terms())
      out.push_back({t.power % 2 == 0 ? t.coeff : Rational(-t.coeff), t.power, -t.rate});
    return Side(std::move(out));
  };
  return {flip(f.pos), flip(f.neg), f.at_zero};
}

namespace {

// Antiderivative of x^m e^{r x} (r != 0) that vanishes where e^{r x} does:
//   e^{r x} sum_{i=0..m} (-1)^i m!/(m-i)! x^{m-i} / r^{i+1}.
Side antiderivative(const Side& f) {
  std::vector<Term> out;
  for (const auto& t : f.terms()) {
    if (t.rate == 0) throw DomainError("antiderivative: rate 0 term is not integrable");
    Rational falling = 1;  // m!/(m-i)!
    for (unsigned i = 0; i <= t.power; ++i) {
      if (i > 0) falling *= t.power - i + 1;
      Rational c = t.coeff * falling / pow(t.rate, static_cast<long>(i) + 1);
      if (i % 2 == 1) c = -c;
      out.push_back({c, t.power - i, t.rate});
    }
  }
  return Side(std::move(out));
}

}  // namespace

Cumulative::Cumulative(const PiecewiseExpPoly& f) {
  f.validate();
  left_ = antiderivative(f.neg);
  tail_ = antiderivative(f.pos) * Rational(-1);
  mass_neg_ = moment_integral(f.neg, 0, Region::Negative);
  total_ = mass_neg_ + moment_integral(f.pos, 0, Region::Positive);
}

BigFloat Cumulative::operator()(const Rational& x) const {
  if (x < 0) return evaluate(left_, x);
  if (x == 0) return to_bigfloat(mass_neg_);
  return to_bigfloat(total_) - evaluate(tail_, x);
}

BigFloat Cumulative::operator()(const BigFloat& x) const {
  if (x < 0) return evaluate(left_, x);
  if (x == 0) return to_bigfloat(mass_neg_);
  return to_bigfloat(total_) - evaluate(tail_, x);
}

std::vector<Evaluator::Group> Evaluator::groups_of(const Side& s) {
  std::vector<Group> groups;
  const auto& ts = s.terms();
  for_each_rate(s, [&](const Rational& rate, std::size_t first, std::size_t last) {
    Group g;
    g.rate = to_bigfloat(rate);
    g.coeffs.assign(ts[last - 1].power + 1, BigFloat(0));
    for (std::size_t k = first; k < last; ++k) g.coeffs[ts[k].power] = to_bigfloat(ts[k].coeff);
    groups.push_back(std::move(g));
  });
  return groups;
}

Evaluator::Evaluator(const PiecewiseExpPoly& f)
    : neg_(groups_of(f.neg)), pos_(groups_of(f.pos)), at_zero_(to_bigfloat(f.at_zero)) {}

BigFloat Evaluator::eval(const std::vector<Group>& groups, const BigFloat& x) {
  BigFloat sum = 0;
  for (const auto& g : groups) {
    BigFloat acc = 0;
    for (auto it = g.coeffs.rbegin(); it != g.coeffs.rend(); ++it) acc = acc * x + *it;
    sum += acc * exp(g.rate * x);
  }
  return sum;
}

BigFloat Evaluator::operator()(const BigFloat& x) const {
  if (x < 0) return eval(neg_, x);
  if (x > 0) return eval(pos_, x);
  return at_zero_;
}

double Evaluator::operator()(double x) const { return to_double((*this)(BigFloat(x))); }

namespace {

PiecewiseExpPoly cumulative_pieces(const PiecewiseExpPoly& f) {
  f.validate();
  return {antiderivative(f.neg), antiderivative(f.pos) * Rational(-1),
          moment_integral(f.neg, 0, Region::Negative)};
}

}  // namespace

CumulativeEvaluator::CumulativeEvaluator(const PiecewiseExpPoly& f)
    : pieces_(cumulative_pieces(f)),
      mass_neg_(to_bigfloat(moment_integral(f.neg, 0, Region::Negative))),
      total_(to_bigfloat(moment_integral(f, 0, Region::Both))) {}

double CumulativeEvaluator::operator()(double x) const {
  const BigFloat bx(x);
  if (x < 0) return to_double(pieces_(bx));
  if (x == 0) return to_double(mass_neg_);
  return to_double(total_ - pieces_(bx));
}

}  // namespace wishdiff::exppoly

namespace wishdiff::exppoly {

Interval effective_support(const PiecewiseExpPoly& f, double tail) {
  const CumulativeEvaluator cdf(f);
  const double total = to_double(moment_integral(f, 0, Region::Both));
  if (!(total > 0)) throw DomainError("effective_support: density has no mass");
  // Bracket by doubling, then bisect; the CDF is monotone.
  auto edge = [&](bool upper) {
    auto outside = [&](double x) { return upper ? total - cdf(x) : cdf(x); };
    double near = 0;
    double far = upper ? 1 : -1;
    while (outside(far) > tail * total) {
      near = far;
      far *= 2;
      if (std::abs(far) > 1e12) throw NumericError("effective_support: tail does not decay");
    }
    for (int i = 0; i < 80; ++i) {
      const double mid = 0.5 * (near + far);
      (outside(mid) > tail * total ? near : far) = mid;
    }
    return far;
  };
  return {edge(false), edge(true)};
}

}  // namespace wishdiff::exppoly
