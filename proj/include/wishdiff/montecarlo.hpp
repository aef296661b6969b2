#pragma once

// Sampling of Ginibre, Wishart-difference and density matrices, a Hermitian
// Jacobi eigensolver, and empirical-vs-analytic statistics.

#include <Eigen/Dense>
#include <cstdint>
#include <functional>
#include <vector>

#include "wishdiff/diagonal_law.hpp"
#include "wishdiff/random.hpp"

namespace wishdiff::mc {

using ComplexMatrix = Eigen::MatrixXcd;

// Entries with independent N(0, 1/2) real and imaginary parts.
ComplexMatrix sample_ginibre(int rows, int cols, RandomStream& rng);

// a1 G1 G1^dag - a2 G2 G2^dag, symmetrized to be exactly Hermitian.
ComplexMatrix sample_diff(const EnsembleParams& p, RandomStream& rng);

// G G^dag / tr(G G^dag) with G of size n x n_env (Hilbert-Schmidt measure).
ComplexMatrix sample_density_matrix(int n, int n_env, RandomStream& rng);

// rho1 - rho2 for independent density matrices with n1 and n2 environment
// dimensions.
ComplexMatrix sample_helstrom(int n, int n1, int n2, RandomStream& rng);

// Ascending eigenvalues by cyclic complex Jacobi rotations. DomainError if m
// is not square or not Hermitian within 1e-12 max(1, |m|); NumericError
// after 100 sweeps without reaching off-diagonal norm < 1e-13 |m|.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

struct Histogram {
  std::vector<double> edges;         // bins + 1 strictly increasing
  std::vector<std::size_t> counts;   // bins
  std::size_t total = 0;             // samples, including any outside the edges

  // Normalized height of bin i.
  double density(std::size_t i) const;
};

class EmpiricalSpectrum {
 public:
  explicit EmpiricalSpectrum(std::vector<double> samples);

  const std::vector<double>& samples() const { return samples_; }  // ascending
  std::size_t size() const { return samples_.size(); }
  double mean() const;
  double variance() const;  // unbiased

  // Equal-width bins over [min, max] of the samples.
  Histogram histogram(int bins) const;
  Histogram histogram(int bins, double lo, double hi) const;

 private:
  std::vector<double> samples_;
};

// sup_x |F_emp(x) - cdf(x)| over the sample points (both one-sided limits).
double ks_distance(const EmpiricalSpectrum& s, const std::function<double(double)>& cdf);

// sum over bins |count/total - mass(bin)| plus the model mass outside the
// histogram range. `mass(lo, hi)` integrates the model density.
double binned_l1_distance(const Histogram& h, const std::function<double(double, double)>& mass);

struct SimulationOptions {
  std::size_t matrices = 10000;
  std::uint64_t seed = 0;
  int workers = 1;
};

// Draws `matrices` matrices (matrix i from stream i) across worker threads
// and pools their eigenvalues. The result depends only on (seed, matrices).
EmpiricalSpectrum simulate(const SimulationOptions& opt, int dim,
                           const std::function<ComplexMatrix(RandomStream&)>& sampler);

EmpiricalSpectrum simulate_wishart_diff(const EnsembleParams& p, const SimulationOptions& opt);
EmpiricalSpectrum simulate_helstrom(int n, int n1, int n2, const SimulationOptions& opt);

}  // namespace wishdiff::mc
