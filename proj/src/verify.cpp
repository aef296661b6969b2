#include "wishdiff/verify.hpp"

#include <sstream>

#include "wishdiff/exact_spectral.hpp"
#include "wishdiff/linalg.hpp"
#include "wishdiff/positivity.hpp"
#include "wishdiff/specfun.hpp"

namespace wishdiff::verify {

namespace {

std::string mismatch(const std::string& what, const Rational& got, const Rational& want) {
  if (got == want) return {};
  return what + ": got " + format_rational(got) + ", expected " + format_rational(want);
}

Rational sign_power(long e) { return e % 2 == 0 ? Rational(1) : Rational(-1); }

}  // namespace

IdentityCheck run_check(std::string name, const std::function<std::string()>& body) {
  IdentityCheck c{std::move(name), false, {}};
  try {
    c.detail = body();
    c.pass = c.detail.empty();
  } catch (const std::exception& e) {
    c.detail = std::string("exception: ") + e.what();
  }
  return c;
}

std::string check_normalization(const EnsembleParams& p) {
  const MomentMatrix mm = exact::build_moment_matrix(p);
  const int n = p.n;
  Rational want = sign_power(static_cast<long>(n) * (n - 1) / 2);
  for (int j = 1; j <= n; ++j) want *= specfun::gamma_int(j + 1);
  const Rational got = specfun::gamma_int(n + 1) * determinant(mm.square());
  if (auto m = mismatch("n! det h", got, want); !m.empty()) return m;
  return mismatch("C~ vs closed form", exact::normalization(mm), exact::normalization_closed_form(n));
}

std::string check_triangularity(const EnsembleParams& p) {
  // build_moment_matrix already compares every entry with its closed form.
  const MomentMatrix mm = exact::build_moment_matrix(p);
  for (int j = 1; j <= p.n; ++j)
    for (int k = 1; k < j; ++k)
      if (mm.h(j, k) != 0) {
        return "h(" + std::to_string(j) + "," + std::to_string(k) + ") = " + format_rational(mm.h(j, k));
      }
  return {};
}

std::string check_density_mass(const EnsembleParams& p) {
  const SpectralKernel kernel = exact::build_kernel(p);
  const auto density = exact::density(kernel);
  const Rational mass = exppoly::moment_integral(density, 0, exppoly::Region::Negative) +
                        exppoly::moment_integral(density, 0, exppoly::Region::Positive);
  if (auto m = mismatch("int p", mass, 1); !m.empty()) return m;
  return mismatch("int S(x,x)", exact::kernel_trace(kernel), p.n);
}

std::string check_smoothness_threshold(const EnsembleParams& p) {
  const int top = p.n1 + p.n2;
  for (int j = 2; j < top; ++j)
    if (!diagonal_law::check_smoothness(p, j)) return "derivative " + std::to_string(j) + " not smooth";
  if (diagonal_law::check_smoothness(p, top)) return "derivative " + std::to_string(top) + " unexpectedly smooth";
  return {};
}

std::string check_pfaff_pair(const EnsembleParams& p) {
  const Rational z1 = (p.a1 + p.a2) / p.a1;
  const Rational z2 = (p.a1 + p.a2) / p.a2;
  const Rational ratio_a = p.a2 / p.a1;
  for (int j = 1; j <= p.n1 + p.n2 - 1; ++j) {
    const Rational lhs = specfun::hyp2f1_terminating(j - 1, 1 - p.n2, 2 - p.n1 - p.n2, z1);
    const Rational rhs = sign_power(j - 1) * pow(ratio_a, j - 1) *
                         specfun::hyp2f1_terminating(j - 1, 1 - p.n1, 2 - p.n1 - p.n2, z2);
    if (lhs != rhs) return "Pfaff pair differs at j = " + std::to_string(j);
    if (diagonal_law::ftilde_zero_left_form(p, j) != diagonal_law::ftilde_zero_right_form(p, j))
      return "derivative-at-zero forms differ at j = " + std::to_string(j);
  }
  return {};
}

std::string check_alternating_sum(int j_max) {
  for (long j = 2; j <= j_max; ++j) {
    Rational s = 0;
    for (long mu = 1; mu <= j - 1; ++mu) s += sign_power(mu) * specfun::binomial(j - 1, mu) * pow(Rational(mu), j - 1);
    if (auto m = mismatch("alternating sum j=" + std::to_string(j), s, sign_power(j - 1) * specfun::gamma_int(j));
        !m.empty())
      return m;
  }
  return {};
}

std::string check_laguerre_reflection() {
  const Rational xs[] = {-3, ratio(-1, 2), ratio(2, 7), 2, 5};
  for (long k = 0; k <= 8; ++k)
    for (long a = 1; a <= 5; ++a)
      for (const auto& x : xs) {
        const Rational lhs = specfun::gamma_int(k + 1) * specfun::laguerre(k, a, x);
        const Rational rhs =
            specfun::gamma_int(k + a + 1) * pow(Rational(-x), -a) * specfun::laguerre(k + a, -a, x);
        if (lhs != rhs) {
          std::ostringstream os;
          os << "k=" << k << " a=" << a << " x=" << format_rational(x);
          return os.str();
        }
      }
  return {};
}

std::vector<IdentityCheck> ensemble_identities(const EnsembleParams& p) {
  p.validate();
  std::vector<IdentityCheck> out;
  out.push_back(run_check("normalization", [&] { return check_normalization(p); }));
  out.push_back(run_check("upper_triangularity", [&] { return check_triangularity(p); }));
  out.push_back(run_check("density_mass", [&] { return check_density_mass(p); }));

  const ExactEnsemble e = ExactEnsemble::build(p, 2);
  out.push_back(run_check("positive_fraction_sum", [&] {
    return mismatch("p+ + p-", positivity::frac_positive(e) + positivity::frac_negative(e), 1);
  }));
  out.push_back(run_check("all_sign_bound", [&]() -> std::string {
    const Rational s = positivity::prob_all_positive(e) + positivity::prob_all_negative(e);
    if (s < 0 || s > 1) return "P+ + P- = " + format_rational(s);
    if (p.n == 1 && s != 1) return mismatch("P+ + P- at n = 1", s, 1);
    if (p.n > 1 && s == 1) return "P+ + P- = 1 for n > 1";
    return {};
  }));
  if (p.n1 == p.n2 && p.a1 == p.a2) {
    out.push_back(run_check("symmetric_positivity", [&]() -> std::string {
      if (auto m = mismatch("p+", positivity::frac_positive(e), ratio(1, 2)); !m.empty()) return m;
      return mismatch("P+ - P-", positivity::prob_all_positive(e) - positivity::prob_all_negative(e), 0);
    }));
  }
  out.push_back(run_check("first_moment", [&] {
    return mismatch("<x>", positivity::moment(e, 1), p.a1 * p.n1 - p.a2 * p.n2);
  }));
  out.push_back(run_check("second_moment", [&] {
    const Rational want = p.a1 * p.a1 * p.n1 * (p.n + p.n1) + p.a2 * p.a2 * p.n2 * (p.n + p.n2) -
                          2 * p.a1 * p.a2 * p.n1 * p.n2;
    return mismatch("<x^2>", positivity::moment(e, 2), want);
  }));
  out.push_back(run_check("kernel_idempotence", [&]() -> std::string {
    if (exact::compose_kernel(e.kernel) != e.kernel.coeff) return "int S S != S";
    return {};
  }));
  out.push_back(run_check("exchange_reflection", [&]() -> std::string {
    if (exact::density(p.exchanged()) != exppoly::reflected(e.density)) return "density of exchanged ensemble";
    return mismatch("p+ vs exchanged p-", positivity::frac_positive(e), positivity::frac_negative(p.exchanged()));
  }));
  out.push_back(run_check("basis_smoothness", [&] { return check_smoothness_threshold(p); }));
  out.push_back(run_check("pfaff_pair", [&] { return check_pfaff_pair(p); }));
  return out;
}

std::vector<IdentityCheck> global_identities() {
  std::vector<IdentityCheck> out;
  out.push_back(run_check("alternating_power_sum", [] { return check_alternating_sum(); }));
  out.push_back(run_check("laguerre_reflection", [] { return check_laguerre_reflection(); }));
  return out;
}

}  // namespace wishdiff::verify
