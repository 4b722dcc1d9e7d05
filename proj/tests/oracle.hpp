#pragma once

#include <vector>

#include "bellkit/complex_matrix.hpp"

// Independent eigenvalue oracles for cross-checking the production solver.
// Deliberately share no code path with it: one route goes through the
// characteristic polynomial, the other through Sylvester inertia counts.
namespace bellkit::oracle {

/// Real coefficients of det(lambda I - A), ascending powers
/// (coeffs[k] multiplies lambda^k, coeffs[n] = 1). Faddeev-LeVerrier.
std::vector<double> characteristic_polynomial(const ComplexMatrix& a);

/// All real roots (with multiplicity) of a real-rooted monic polynomial of
/// degree <= 4, ascending. Closed forms plus Newton polish.
std::vector<double> real_roots(const std::vector<double>& coeffs);

/// Eigenvalues via characteristic-polynomial root-finding; dim <= 4.
std::vector<double> charpoly_eigenvalues(const ComplexMatrix& a);

/// Number of eigenvalues of a strictly below x: negative pivots of the
/// LDL^* elimination of (a - xI).
int count_eigenvalues_below(const ComplexMatrix& a, double x);

/// Eigenvalues by bisection on the inertia count, ascending; dim <= 16.
std::vector<double> sturm_bisection_eigenvalues(const ComplexMatrix& a);

}  // namespace bellkit::oracle
