#include "bellkit/states.hpp"

#include <cmath>
#include <numbers>

#include "bellkit/bell.hpp"
#include "bellkit/rng.hpp"

namespace bellkit {

namespace {

constexpr int kMaxPureParties = 26;  // amplitude vectors only; dense ops cap earlier

std::size_t pure_dim(int n) {
  if (n < 1) throw parameter_error("state constructors need n >= 1");
  if (n > kMaxPureParties) throw dimension_error("party count too large for a state vector");
  return std::size_t{1} << n;
}

std::size_t dense_dim(int n) {
  const std::size_t dim = pure_dim(n);
  if (dim > kMaxDenseDim) throw dimension_error("party count exceeds the dense matrix cap");
  return dim;
}

}  // namespace

void validate_pure_state(const PureState& psi) {
  if (psi.n_parties < 1 || psi.amplitudes.size() != (std::size_t{1} << psi.n_parties))
    throw dimension_error("pure state has wrong amplitude count for its party count");
  double norm2 = 0.0;
  for (const auto& a : psi.amplitudes) norm2 += std::norm(a);
  if (std::abs(std::sqrt(norm2) - 1.0) > 1e-12)
    throw contract_error("pure state norm differs from 1 by more than 1e-12");
}

cdouble inner_product(const PureState& bra, const PureState& ket) {
  if (bra.amplitudes.size() != ket.amplitudes.size())
    throw dimension_error("inner product: dimension mismatch");
  cdouble s = 0.0;
  for (std::size_t i = 0; i < bra.amplitudes.size(); ++i)
    s += std::conj(bra.amplitudes[i]) * ket.amplitudes[i];
  return s;
}

ComplexMatrix density_matrix(const PureState& psi) {
  const std::size_t dim = psi.amplitudes.size();
  if (dim > kMaxDenseDim) throw dimension_error("pure state too large to densify");
  ComplexMatrix rho(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    if (psi.amplitudes[r] == 0.0) continue;
    for (std::size_t c = 0; c < dim; ++c)
      rho(r, c) = psi.amplitudes[r] * std::conj(psi.amplitudes[c]);
  }
  return rho;
}

PhaseSpec PhaseSpec::radians(double value) {
  if (!std::isfinite(value)) throw parameter_error("phase must be a finite number");
  return PhaseSpec(false, value);
}

double PhaseSpec::resolve(int n_parties) const {
  if (matched_) return beta_phase(n_parties);
  return std::fmod(value_, 2.0 * std::numbers::pi);
}

PureState ghz(int n, const PhaseSpec& alpha) {
  const std::size_t dim = pure_dim(n);
  const double a = alpha.resolve(n);
  PureState psi{n, std::vector<cdouble>(dim)};
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  psi.amplitudes[0] = inv_sqrt2;
  psi.amplitudes[dim - 1] = inv_sqrt2 * cdouble{std::cos(a), std::sin(a)};
  return psi;
}

PureState ghz_basis_state(int n, std::uint64_t j, int sign) {
  if (n < 2) throw parameter_error("ghz_basis_state needs n >= 2");
  if (sign != 1 && sign != -1) throw parameter_error("ghz_basis_state: sign must be +-1");
  const std::size_t dim = pure_dim(n);
  const std::uint64_t half = std::uint64_t{1} << (n - 1);
  if (j >= half) throw parameter_error("ghz_basis_state: label out of range");
  PureState psi{n, std::vector<cdouble>(dim)};
  const double inv_sqrt2 = 1.0 / std::numbers::sqrt2;
  psi.amplitudes[2 * j] = inv_sqrt2;                        // |j>|0>
  psi.amplitudes[2 * (half - 1 - j) + 1] = sign * inv_sqrt2;  // |~j>|1>
  return psi;
}

ComplexMatrix dur_state(int n, const PhaseSpec& alpha) {
  if (n < 2) throw parameter_error("dur_state needs n >= 2");
  const std::size_t dim = dense_dim(n);
  const double w = 1.0 / (n + 1);

  ComplexMatrix rho = density_matrix(ghz(n, alpha));
  rho *= w;
  for (int i = 1; i <= n; ++i) {
    const std::size_t idx = std::size_t{1} << (n - i);  // |1> at party i, |0> elsewhere
    const std::size_t comp = (dim - 1) ^ idx;
    rho(idx, idx) += 0.5 * w;
    rho(comp, comp) += 0.5 * w;
  }
  return rho;
}

ComplexMatrix random_density_matrix(int n, std::uint64_t seed) {
  const std::size_t dim = dense_dim(n);
  SeededRng rng(seed);
  ComplexMatrix g(dim);
  for (auto& e : g.entries()) e = rng.normal_pair();

  ComplexMatrix rho(dim);
  for (std::size_t i = 0; i < dim; ++i)
    for (std::size_t j = 0; j <= i; ++j) {
      cdouble s = 0.0;
      for (std::size_t k = 0; k < dim; ++k) s += g(i, k) * std::conj(g(j, k));
      rho(i, j) = s;
      rho(j, i) = std::conj(s);
    }
  const double tr = trace(rho).real();
  rho *= 1.0 / tr;
  // Exact Hermiticity and a bit-exact unit diagonal sum are preserved by
  // the symmetric fill above; nothing else to clean up.
  return rho;
}

GhzDiagonalCoefficients random_ghz_diagonal(int n, std::uint64_t seed, double delta_floor) {
  if (n < 2) throw parameter_error("random_ghz_diagonal needs n >= 2");
  if (!(delta_floor >= 0.0 && delta_floor <= 1.0))
    throw parameter_error("delta_floor must lie in [0, 1]");

  const std::uint64_t pairs = (std::uint64_t{1} << (n - 1)) - 1;
  SeededRng rng(seed);
  double l0p = rng.uniform01();
  double l0m = rng.uniform01();
  std::vector<double> lambdas(pairs);
  for (auto& l : lambdas) l = rng.uniform01();

  double sum = l0p + l0m;
  for (const double l : lambdas) sum += 2.0 * l;
  if (sum == 0.0) {
    l0p = 1.0;
  } else {
    l0p /= sum;
    l0m /= sum;
    for (auto& l : lambdas) l /= sum;
  }

  const double delta0 = l0p - l0m;
  if (delta0 < delta_floor) {
    // Scale the non-lambda0+ mass by t and hand the difference to lambda0+;
    // t solves 1 - t(1 - delta0) = target, landing delta on the floor (a
    // hair above it, so the floor survives the final renormalization).
    const double target = std::min(1.0, delta_floor + 1e-14);
    const double rest = 1.0 - l0p;
    const double t = (1.0 - target) / (rest + l0m);
    l0m *= t;
    for (auto& l : lambdas) l *= t;
    l0p = 1.0 - t * rest;

    double sum2 = l0p + l0m;
    for (const double l : lambdas) sum2 += 2.0 * l;
    l0p /= sum2;
    l0m /= sum2;
    for (auto& l : lambdas) l /= sum2;
  }

  return make_coefficients(n, l0p, l0m, std::move(lambdas));
}

}  // namespace bellkit
