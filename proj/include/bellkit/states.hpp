#pragma once

#include <cstdint>

#include "bellkit/complex_matrix.hpp"
#include "bellkit/ghz_family.hpp"
#include "bellkit/pure_state.hpp"

namespace bellkit {

/// A phase angle in radians, or "matched" meaning the phase of the x/y
/// Bell operator for the same party count (beta_phase is the single source
/// of truth). Numeric values are reduced modulo 2*pi.
class PhaseSpec {
 public:
  static PhaseSpec matched() { return PhaseSpec(true, 0.0); }
  static PhaseSpec radians(double value);

  bool is_matched() const { return matched_; }
  double resolve(int n_parties) const;

 private:
  PhaseSpec(bool matched, double value) : matched_(matched), value_(value) {}
  bool matched_;
  double value_;
};

/// (|0...0> + e^{i alpha} |1...1>)/sqrt(2).
PureState ghz(int n, const PhaseSpec& alpha);

/// Basis state (|j>|0> +- |2^{n-1}-1-j>|1>)/sqrt(2); |j> spans parties
/// 1..N-1 and the last factor is party N. sign is +1 or -1;
/// 0 <= j <= 2^{n-1}-1.
PureState ghz_basis_state(int n, std::uint64_t j, int sign);

/// The bound-entangled mixture: GHZ projector plus half the sum of the
/// 2N single-excitation product projectors P_i and their bit complements,
/// all over N+1. Unit trace by construction; n >= 2.
ComplexMatrix dur_state(int n, const PhaseSpec& alpha);

/// G G^dagger / tr(G G^dagger) with G drawn from the seeded complex normal
/// stream; Hermitian, PSD, unit trace, bit-identical per seed.
ComplexMatrix random_density_matrix(int n, std::uint64_t seed);

/// Random valid coefficient family with delta >= delta_floor: uniform
/// nonnegative draws, renormalized, then mass shifted from lambda0- and
/// the lambda_j pool into lambda0+ until the floor is met.
/// Requires 0 <= delta_floor <= 1.
GhzDiagonalCoefficients random_ghz_diagonal(int n, std::uint64_t seed, double delta_floor);

}  // namespace bellkit
