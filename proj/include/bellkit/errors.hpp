#pragma once

#include <stdexcept>
#include <string>

namespace bellkit {

// Out-of-domain arguments: bad party counts, non-unit vectors, invalid
// split labels, infeasible sampling parameters.
class parameter_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Shape mismatches and dense-dimension-cap overruns.
class dimension_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Numeric contract violations: non-Hermitian observables, densities with
// wrong trace or negative spectrum, expectation values with large
// imaginary parts.
class contract_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

}  // namespace bellkit
