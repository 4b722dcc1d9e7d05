#include "bellkit/bell.hpp"

#include <bit>
#include <cmath>
#include <numbers>

namespace bellkit {

double beta_phase(int n) {
  if (n < 1) throw parameter_error("beta_phase: n must be >= 1");
  return std::numbers::pi * (n - 1) / 4.0;
}

MeasurementSettings MeasurementSettings::all_xy(int n) {
  if (n < 1) throw parameter_error("measurement settings need at least one party");
  MeasurementSettings s;
  s.parties.assign(static_cast<std::size_t>(n),
                   PartyAxes{{1.0, 0.0, 0.0}, {0.0, 1.0, 0.0}});
  return s;
}

void validate_settings(const MeasurementSettings& settings) {
  if (settings.parties.empty())
    throw parameter_error("measurement settings need at least one party");
  for (const auto& p : settings.parties) {
    for (const auto& axis : {p.a, p.a_prime}) {
      const double n2 = axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2];
      if (std::abs(std::sqrt(n2) - 1.0) > 1e-12)
        throw parameter_error("measurement axis is not a unit vector");
    }
  }
}

ComplexMatrix pauli_direction(const std::array<double, 3>& axis) {
  const double n2 = axis[0] * axis[0] + axis[1] * axis[1] + axis[2] * axis[2];
  if (std::abs(std::sqrt(n2) - 1.0) > 1e-12)
    throw parameter_error("pauli_direction: axis is not a unit vector");
  ComplexMatrix m(2);
  m(0, 0) = axis[2];
  m(1, 1) = -axis[2];
  m(0, 1) = {axis[0], -axis[1]};
  m(1, 0) = {axis[0], axis[1]};
  return m;
}

ComplexMatrix mk_operator(const MeasurementSettings& settings) {
  validate_settings(settings);
  ComplexMatrix b = pauli_direction(settings.parties[0].a);
  ComplexMatrix bp = pauli_direction(settings.parties[0].a_prime);
  for (std::size_t i = 1; i < settings.parties.size(); ++i) {
    const ComplexMatrix s = pauli_direction(settings.parties[i].a);
    const ComplexMatrix sp = pauli_direction(settings.parties[i].a_prime);
    const ComplexMatrix sum = s + sp;
    const ComplexMatrix diff = s - sp;
    ComplexMatrix next = tensor_product(b, sum) + tensor_product(bp, diff);
    ComplexMatrix next_p = tensor_product(bp, sum) - tensor_product(b, diff);
    next *= 0.5;
    next_p *= 0.5;
    b = std::move(next);
    bp = std::move(next_p);
  }
  return b;
}

ComplexMatrix mk_xy_operator(int n, double beta) {
  if (n < 1) throw parameter_error("mk_xy_operator: n must be >= 1");
  const std::size_t dim = std::size_t{1} << n;
  if (dim > kMaxDenseDim)
    throw dimension_error("mk_xy_operator: dimension exceeds dense cap");
  const double amp = std::pow(2.0, (n - 1) / 2.0);
  ComplexMatrix m(dim);
  m(dim - 1, 0) = amp * cdouble{std::cos(beta), std::sin(beta)};
  m(0, dim - 1) = amp * cdouble{std::cos(beta), -std::sin(beta)};
  return m;
}

double expectation(const ComplexMatrix& op, const ComplexMatrix& rho) {
  if (op.dim() != rho.dim())
    throw dimension_error("expectation: operator and state dimensions differ");
  cdouble t = 0.0;
  const std::size_t n = op.dim();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t += op(i, j) * rho(j, i);
  if (std::abs(t.imag()) > 1e-10)
    throw contract_error("expectation value has imaginary part above 1e-10");
  return t.real();
}

namespace {

BellReport report_from_value(double value, int n) {
  BellReport r;
  r.value = value;
  r.classical_bound = 1.0;
  r.quantum_max = std::pow(2.0, (n - 1) / 2.0);
  r.violates = value > r.classical_bound + kViolationSlack;
  if (value > r.quantum_max + 1e-9)
    throw contract_error("Bell value exceeds the quantum maximum; state is not a valid density matrix");
  return r;
}

}  // namespace

BellReport bell_report(const ComplexMatrix& rho, const MeasurementSettings& settings) {
  const ComplexMatrix op = mk_operator(settings);
  return report_from_value(expectation(op, rho), settings.n_parties());
}

BellReport bell_report_xy(const ComplexMatrix& rho, double beta) {
  const int n = n_parties_of_dim(rho.dim());
  return report_from_value(expectation(mk_xy_operator(n, beta), rho), n);
}

ComplexMatrix ghz_phase_conjugate(const ComplexMatrix& rho, double theta) {
  const int n = n_parties_of_dim(rho.dim());
  const std::size_t dim = rho.dim();
  // Phase table for popcount differences in [-n, n].
  std::vector<cdouble> w(2 * n + 1);
  for (int k = -n; k <= n; ++k)
    w[k + n] = cdouble{std::cos(theta * k / n), std::sin(theta * k / n)};
  ComplexMatrix out(dim);
  for (std::size_t r = 0; r < dim; ++r) {
    const int pr = std::popcount(r);
    for (std::size_t c = 0; c < dim; ++c)
      out(r, c) = w[pr - std::popcount(c) + n] * rho(r, c);
  }
  return out;
}

}  // namespace bellkit
