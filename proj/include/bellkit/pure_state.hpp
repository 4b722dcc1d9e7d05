#pragma once

#include <vector>

#include "bellkit/complex_matrix.hpp"

namespace bellkit {

/// Unit-norm state vector of an N-party qubit system; 2^N amplitudes with
/// the same bit convention as ComplexMatrix (party 1 most significant).
struct PureState {
  int n_parties = 0;
  std::vector<cdouble> amplitudes;
};

/// Throws contract_error unless the norm is 1 within 1e-12 and the
/// amplitude count matches 2^n_parties.
void validate_pure_state(const PureState& psi);

cdouble inner_product(const PureState& bra, const PureState& ket);

/// |psi><psi| as a dense matrix (dense cap applies).
ComplexMatrix density_matrix(const PureState& psi);

}  // namespace bellkit
