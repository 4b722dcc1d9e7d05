#pragma once

#include <array>
#include <vector>

#include "bellkit/complex_matrix.hpp"

namespace bellkit {

// Strictness slack for the classical bound: "violates" means
// value > 1 + kViolationSlack, so states sitting exactly on the bound
// report false.
inline constexpr double kViolationSlack = 1e-12;

/// Phase of the all-sigma_x/sigma_y Bell operator: pi*(n-1)/4.
double beta_phase(int n);

/// Per-party pair of measurement axes (unit 3-vectors).
struct PartyAxes {
  std::array<double, 3> a{};        // first dichotomic observable
  std::array<double, 3> a_prime{};  // second
};

struct MeasurementSettings {
  std::vector<PartyAxes> parties;

  int n_parties() const { return static_cast<int>(parties.size()); }

  /// The x/y choice at every site: a = (1,0,0), a' = (0,1,0).
  static MeasurementSettings all_xy(int n);
};

void validate_settings(const MeasurementSettings& settings);

/// n.sigma = nx*sx + ny*sy + nz*sz. Hermitian, traceless, eigenvalues +-1.
/// Throws parameter_error for a non-unit axis.
ComplexMatrix pauli_direction(const std::array<double, 3>& axis);

/// Bell operator built by the joint recursion
///   B_i  = 1/2 B_{i-1} x (S_i + S'_i) + 1/2 B'_{i-1} x (S_i - S'_i)
/// with B'_i the primed/unprimed swap at every level and B_1 = S_1.
/// Both branches are carried together, so the build is O(N) tensor steps.
ComplexMatrix mk_operator(const MeasurementSettings& settings);

/// Closed form of the all-x/y operator: exactly two nonzero entries,
///   2^{(n-1)/2} e^{i beta}  at (2^n - 1, 0)
///   2^{(n-1)/2} e^{-i beta} at (0, 2^n - 1).
ComplexMatrix mk_xy_operator(int n, double beta);

/// Re tr(op * rho), computed without forming the product. Throws
/// contract_error if the imaginary part of the trace exceeds 1e-10.
double expectation(const ComplexMatrix& op, const ComplexMatrix& rho);

struct BellReport {
  double value = 0.0;
  double classical_bound = 1.0;
  double quantum_max = 0.0;  // 2^{(n-1)/2}
  bool violates = false;
};

BellReport bell_report(const ComplexMatrix& rho, const MeasurementSettings& settings);
BellReport bell_report_xy(const ComplexMatrix& rho, double beta);

/// Conjugation by the local diagonal unitary U|x> = e^{i theta popcount(x)/n}|x>,
/// a product of single-party phase rotations summing to theta. Shifts the
/// GHZ phase alpha -> alpha + theta; equivalently shifts the operator
/// phase beta -> beta - theta.
ComplexMatrix ghz_phase_conjugate(const ComplexMatrix& rho, double theta);

}  // namespace bellkit
