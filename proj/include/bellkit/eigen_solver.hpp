#pragma once

#include <vector>

#include "bellkit/complex_matrix.hpp"

namespace bellkit {

// Input tolerance: matrices within this entrywise distance of Hermitian are
// symmetrized ((m + m^dagger)/2) before solving; anything worse is rejected.
inline constexpr double kEigenHermiticityTol = 1e-10;

struct Eigensystem {
  std::vector<double> values;  // ascending
  ComplexMatrix vectors;       // column k pairs with values[k]
};

/// All real eigenvalues of a Hermitian matrix, ascending. Householder
/// reduction to real symmetric tridiagonal form followed by implicit-shift
/// QL; converges to machine precision. Throws contract_error if the input
/// is not Hermitian within kEigenHermiticityTol (scaled by the largest
/// entry magnitude), or if QL fails to converge.
std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m);

/// Eigenvalues plus an orthonormal eigenbasis, same contracts.
Eigensystem hermitian_eigensystem(const ComplexMatrix& m);

/// Smallest eigenvalue; the PPT predicate support.
double min_eigenvalue(const ComplexMatrix& m);

}  // namespace bellkit
