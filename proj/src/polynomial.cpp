#include "wishdiff/polynomial.hpp"

#include <utility>

#include "wishdiff/errors.hpp"

namespace wishdiff {

RationalPoly::RationalPoly(std::initializer_list<Rational> coeffs) : coeffs_(coeffs) { trim(); }

RationalPoly::RationalPoly(std::vector<Rational> coeffs) : coeffs_(std::move(coeffs)) { trim(); }

RationalPoly RationalPoly::constant(const Rational& c) { return RationalPoly{c}; }

RationalPoly RationalPoly::monomial(const Rational& c, int power) {
  std::vector<Rational> v(static_cast<std::size_t>(power) + 1);
  v.back() = c;
  return RationalPoly(std::move(v));
}

Rational RationalPoly::coefficient(int i) const {
  if (i < 0 || i > degree()) return 0;
  return coeffs_[static_cast<std::size_t>(i)];
}

void RationalPoly::trim() {
  while (!coeffs_.empty() && coeffs_.back() == 0) coeffs_.pop_back();
}

Rational RationalPoly::operator()(const Rational& x) const {
  Rational acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
  return acc;
}

BigFloat RationalPoly::operator()(const BigFloat& x) const {
  BigFloat acc = 0;
  for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + to_bigfloat(*it);
  return acc;
}

RationalPoly RationalPoly::derivative() const {
  std::vector<Rational> d;
  for (std::size_t i = 1; i < coeffs_.size(); ++i) d.push_back(coeffs_[i] * static_cast<long>(i));
  return RationalPoly(std::move(d));
}

RationalPoly RationalPoly::integral() const {
  std::vector<Rational> v(coeffs_.size() + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) v[i + 1] = coeffs_[i] / static_cast<long>(i + 1);
  return RationalPoly(std::move(v));
}

Rational RationalPoly::integrate(const Rational& lo, const Rational& hi) const {
  const RationalPoly p = integral();
  return p(hi) - p(lo);
}

RationalPoly RationalPoly::reflected() const {
  RationalPoly r = *this;
  for (std::size_t i = 1; i < r.coeffs_.size(); i += 2) r.coeffs_[i] = -r.coeffs_[i];
  return r;
}

RationalPoly& RationalPoly::operator+=(const RationalPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] += o.coeffs_[i];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator-=(const RationalPoly& o) {
  if (o.coeffs_.size() > coeffs_.size()) coeffs_.resize(o.coeffs_.size());
  for (std::size_t i = 0; i < o.coeffs_.size(); ++i) coeffs_[i] -= o.coeffs_[i];
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const RationalPoly& o) {
  if (is_zero() || o.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Rational> out(coeffs_.size() + o.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    for (std::size_t j = 0; j < o.coeffs_.size(); ++j) out[i + j] += coeffs_[i] * o.coeffs_[j];
  }
  coeffs_ = std::move(out);
  trim();
  return *this;
}

RationalPoly& RationalPoly::operator*=(const Rational& s) {
  for (auto& c : coeffs_) c *= s;
  trim();
  return *this;
}

RationalPoly RationalPoly::pow(unsigned e) const {
  RationalPoly result{1};
  for (unsigned i = 0; i < e; ++i) result *= *this;
  return result;
}

RationalPoly::DivMod RationalPoly::divmod(const RationalPoly& divisor) const {
  if (divisor.is_zero()) throw DomainError("RationalPoly::divmod: division by zero polynomial");
  std::vector<Rational> rem = coeffs_;
  const int dd = divisor.degree();
  const Rational& lead = divisor.coeffs_.back();
  if (degree() < dd) return {RationalPoly{}, *this};
  std::vector<Rational> quot(static_cast<std::size_t>(degree() - dd) + 1);
  for (int k = degree() - dd; k >= 0; --k) {
    const Rational q = rem[static_cast<std::size_t>(k + dd)] / lead;
    quot[static_cast<std::size_t>(k)] = q;
    for (int i = 0; i <= dd; ++i) {
      rem[static_cast<std::size_t>(k + i)] -= q * divisor.coeffs_[static_cast<std::size_t>(i)];
    }
  }
  return {RationalPoly(std::move(quot)), RationalPoly(std::move(rem))};
}

}  // namespace wishdiff
