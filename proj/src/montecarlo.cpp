#include "wishdiff/montecarlo.hpp"

#include <algorithm>
#include <cmath>
#include <exception>
#include <string>
#include <thread>

#include "wishdiff/errors.hpp"

namespace wishdiff::mc {

ComplexMatrix sample_ginibre(int rows, int cols, RandomStream& rng) {
  const double scale = std::sqrt(0.5);
  ComplexMatrix g(rows, cols);
  for (int c = 0; c < cols; ++c)
    for (int r = 0; r < rows; ++r) {
      const double re = rng.normal();
      const double im = rng.normal();
      g(r, c) = {scale * re, scale * im};
    }
  return g;
}

ComplexMatrix sample_diff(const EnsembleParams& p, RandomStream& rng) {
  const ComplexMatrix g1 = sample_ginibre(p.n, p.n1, rng);
  const ComplexMatrix g2 = sample_ginibre(p.n, p.n2, rng);
  const ComplexMatrix h = to_double(p.a1) * (g1 * g1.adjoint()) - to_double(p.a2) * (g2 * g2.adjoint());
  return (h + h.adjoint()) / 2.0;
}

ComplexMatrix sample_density_matrix(int n, int n_env, RandomStream& rng) {
  if (n_env < n) throw DomainError("sample_density_matrix: environment dimension below n");
  for (;;) {
    const ComplexMatrix g = sample_ginibre(n, n_env, rng);
    ComplexMatrix w = g * g.adjoint();
    w = (w + w.adjoint()) / 2.0;
    const double tr = w.trace().real();
    if (tr > 0) return w / tr;
  }
}

ComplexMatrix sample_helstrom(int n, int n1, int n2, RandomStream& rng) {
  const ComplexMatrix r1 = sample_density_matrix(n, n1, rng);
  const ComplexMatrix r2 = sample_density_matrix(n, n2, rng);
  return r1 - r2;
}

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  if (m.rows() != m.cols()) throw DomainError("hermitian_eigenvalues: matrix is not square");
  const Eigen::Index n = m.rows();
  const double norm = m.norm();
  if (n > 0 && (m - m.adjoint()).cwiseAbs().maxCoeff() > 1e-12 * std::max(1.0, norm)) {
    throw DomainError("hermitian_eigenvalues: matrix is not Hermitian");
  }
  ComplexMatrix a = (m + m.adjoint()) / 2.0;
  auto off_norm = [&] {
    double s = 0;
    for (Eigen::Index q = 0; q < n; ++q)
      for (Eigen::Index p = 0; p < q; ++p) s += 2 * std::norm(a(p, q));
    return std::sqrt(s);
  };

  bool converged = false;
  for (int sweep = 0; sweep < 100; ++sweep) {
    if (off_norm() <= 1e-13 * norm) {
      converged = true;
      break;
    }
    for (Eigen::Index p = 0; p < n; ++p) {
      for (Eigen::Index q = p + 1; q < n; ++q) {
        const std::complex<double> apq = a(p, q);
        const double mag = std::abs(apq);
        if (mag == 0) continue;
        // Phase turn on index q makes a(p, q) real and positive, then a
        // real rotation annihilates it.
        const std::complex<double> phase = std::conj(apq / mag);
        const double theta = (a(q, q).real() - a(p, p).real()) / (2 * mag);
        const double t = (theta >= 0 ? 1.0 : -1.0) / (std::abs(theta) + std::sqrt(theta * theta + 1));
        const double c = 1 / std::sqrt(t * t + 1);
        const double s = t * c;
        for (Eigen::Index k = 0; k < n; ++k) {
          if (k == p || k == q) continue;
          const std::complex<double> akp = a(k, p);
          const std::complex<double> akq = a(k, q) * phase;
          const std::complex<double> nkp = c * akp - s * akq;
          const std::complex<double> nkq = s * akp + c * akq;
          a(k, p) = nkp;
          a(p, k) = std::conj(nkp);
          a(k, q) = nkq;
          a(q, k) = std::conj(nkq);
        }
        a(p, p) = a(p, p).real() - t * mag;
        a(q, q) = a(q, q).real() + t * mag;
        a(p, q) = 0;
        a(q, p) = 0;
      }
    }
  }
  if (!converged && off_norm() > 1e-13 * norm) {
    throw NumericError("hermitian_eigenvalues: no convergence after 100 sweeps");
  }
  std::vector<double> ev(static_cast<std::size_t>(n));
  for (Eigen::Index i = 0; i < n; ++i) ev[static_cast<std::size_t>(i)] = a(i, i).real();
  std::sort(ev.begin(), ev.end());
  return ev;
}

double Histogram::density(std::size_t i) const {
  return static_cast<double>(counts[i]) / (static_cast<double>(total) * (edges[i + 1] - edges[i]));
}

EmpiricalSpectrum::EmpiricalSpectrum(std::vector<double> samples) : samples_(std::move(samples)) {
  std::sort(samples_.begin(), samples_.end());
}

double EmpiricalSpectrum::mean() const {
  if (samples_.empty()) throw DomainError("mean of an empty sample");
  double s = 0;
  for (double x : samples_) s += x;
  return s / static_cast<double>(samples_.size());
}

double EmpiricalSpectrum::variance() const {
  if (samples_.size() < 2) throw DomainError("variance needs two samples");
  const double m = mean();
  double s = 0;
  for (double x : samples_) s += (x - m) * (x - m);
  return s / static_cast<double>(samples_.size() - 1);
}

Histogram EmpiricalSpectrum::histogram(int bins) const {
  if (samples_.empty()) throw DomainError("histogram of an empty sample");
  double lo = samples_.front();
  double hi = samples_.back();
  if (lo == hi) {
    lo -= 0.5;
    hi += 0.5;
  }
  return histogram(bins, lo, hi);
}

Histogram EmpiricalSpectrum::histogram(int bins, double lo, double hi) const {
  if (bins < 1) throw DomainError("histogram: bins must be positive");
  if (!(lo < hi)) throw DomainError("histogram: empty range");
  Histogram h;
  h.edges.resize(static_cast<std::size_t>(bins) + 1);
  for (int i = 0; i <= bins; ++i) h.edges[static_cast<std::size_t>(i)] = lo + (hi - lo) * i / bins;
  h.edges.back() = hi;
  h.counts.assign(static_cast<std::size_t>(bins), 0);
  h.total = samples_.size();
  const double width = (hi - lo) / bins;
  for (double x : samples_) {
    if (x < lo || x > hi) continue;
    auto i = static_cast<std::size_t>((x - lo) / width);
    if (i >= h.counts.size()) i = h.counts.size() - 1;
    ++h.counts[i];
  }
  return h;
}

double ks_distance(const EmpiricalSpectrum& s, const std::function<double(double)>& cdf) {
  const auto& x = s.samples();
  const double n = static_cast<double>(x.size());
  double d = 0;
  for (std::size_t i = 0; i < x.size(); ++i) {
    const double f = cdf(x[i]);
    d = std::max({d, static_cast<double>(i + 1) / n - f, f - static_cast<double>(i) / n});
  }
  return d;
}

double binned_l1_distance(const Histogram& h, const std::function<double(double, double)>& mass) {
  double d = 0;
  double inside = 0;
  for (std::size_t i = 0; i < h.counts.size(); ++i) {
    const double m = mass(h.edges[i], h.edges[i + 1]);
    inside += m;
    d += std::abs(static_cast<double>(h.counts[i]) / static_cast<double>(h.total) - m);
  }
  return d + std::abs(1 - inside);
}

EmpiricalSpectrum simulate(const SimulationOptions& opt, int dim,
                           const std::function<ComplexMatrix(RandomStream&)>& sampler) {
  if (opt.workers < 1) throw DomainError("simulate: workers must be positive");
  if (opt.matrices == 0) throw DomainError("simulate: need at least one matrix");
  const auto d = static_cast<std::size_t>(dim);
  std::vector<double> values(opt.matrices * d);
  const auto workers = static_cast<std::size_t>(opt.workers);
  std::vector<std::exception_ptr> errors(workers);
  auto run = [&](std::size_t w) {
    try {
      for (std::size_t i = w; i < opt.matrices; i += workers) {
        RandomStream rng(opt.seed, i);
        const auto ev = hermitian_eigenvalues(sampler(rng));
        std::copy(ev.begin(), ev.end(), values.begin() + static_cast<std::ptrdiff_t>(i * d));
      }
    } catch (...) {
      errors[w] = std::current_exception();
    }
  };
  if (workers == 1) {
    run(0);
  } else {
    std::vector<std::thread> threads;
    for (std::size_t w = 0; w < workers; ++w) threads.emplace_back(run, w);
    for (auto& t : threads) t.join();
  }
  for (const auto& e : errors)
    if (e) std::rethrow_exception(e);
  return EmpiricalSpectrum(std::move(values));
}

EmpiricalSpectrum simulate_wishart_diff(const EnsembleParams& p, const SimulationOptions& opt) {
  p.validate();
  return simulate(opt, p.n, [&](RandomStream& rng) { return sample_diff(p, rng); });
}

EmpiricalSpectrum simulate_helstrom(int n, int n1, int n2, const SimulationOptions& opt) {
  if (n < 1 || n1 < n || n2 < n) throw DomainError("simulate_helstrom: need 1 <= n <= n1, n2");
  return simulate(opt, n, [&](RandomStream& rng) { return sample_helstrom(n, n1, n2, rng); });
}

}  // namespace wishdiff::mc
