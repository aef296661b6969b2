#pragma once

#include <stdexcept>
#include <string>

namespace wishdiff {

// Argument outside the mathematical domain of an operation (bad j, r > n,
// nonpositive gamma argument, invalid ensemble parameters, ...).
class DomainError : public std::domain_error {
 public:
  using std::domain_error::domain_error;
};

// Floating-point procedure failed to converge or hit a singularity.
class NumericError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Two independent exact routes disagreed. Always a bug, never user error.
class ConsistencyError : public std::logic_error {
 public:
  using std::logic_error::logic_error;
};

// Parameters are valid but no backend can serve them (e.g. a Helstrom
// triple missing from the fixture table).
class UnsupportedParameters : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

}  // namespace wishdiff
