#pragma once

// Self-test suite of exact identities, shared by the `verify` subcommand
// and the acceptance driver. A check passes only on exact equality; any
// exception thrown while evaluating it counts as a failure.

#include <functional>
#include <string>
#include <vector>

#include "wishdiff/diagonal_law.hpp"

namespace wishdiff::verify {

struct IdentityCheck {
  std::string name;
  bool pass = false;
  std::string detail;  // empty on success
};

// Runs `body`; a returned non-empty string or an exception is a failure.
IdentityCheck run_check(std::string name, const std::function<std::string()>& body);

// Normalization, triangularity, density and kernel traces, positivity,
// first two moments, kernel idempotence, exchange symmetry and basis
// smoothness for one parameter set.
std::vector<IdentityCheck> ensemble_identities(const EnsembleParams& p);

// Parameter-free identities: alternating power sum, Laguerre superscript
// reflection, Pfaff pair of the derivative values at zero.
std::vector<IdentityCheck> global_identities();

// Individual checks, exposed for the acceptance driver. Each returns an
// empty string on success and a description of the mismatch otherwise.
std::string check_normalization(const EnsembleParams& p);
std::string check_triangularity(const EnsembleParams& p);
std::string check_density_mass(const EnsembleParams& p);
std::string check_smoothness_threshold(const EnsembleParams& p);
std::string check_pfaff_pair(const EnsembleParams& p);
std::string check_alternating_sum(int j_max = 12);
std::string check_laguerre_reflection();

}  // namespace wishdiff::verify
