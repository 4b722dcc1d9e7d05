#include "bellkit/eigen_solver.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numeric>

namespace bellkit {

namespace {

// Unitary reduction of a Hermitian matrix to complex tridiagonal form by
// Householder reflectors H_k = I - tau u u^dagger applied as similarity
// transforms, followed by a diagonal phase similarity that makes the
// subdiagonal real and nonnegative. On return a = Q T Q^dagger with T the
// real symmetric tridiagonal (d, e); when vectors are requested q holds Q
// (phases already folded in).
void tridiagonalize(ComplexMatrix a, std::vector<double>& d, std::vector<double>& e,
                    ComplexMatrix* q) {
  const std::size_t n = a.dim();
  d.assign(n, 0.0);
  e.assign(n, 0.0);  // e[k] couples d[k] and d[k+1]; e[n-1] stays 0
  if (n == 0) return;

  std::vector<cdouble> esub(n, 0.0);
  std::vector<std::vector<cdouble>> reflectors;
  std::vector<double> taus;
  if (q) {
    reflectors.resize(n);
    taus.assign(n, 0.0);
  }

  std::vector<cdouble> u, p;
  for (std::size_t k = 0; k + 2 < n; ++k) {
    const std::size_t m = n - k - 1;
    double sigma2 = 0.0;
    for (std::size_t i = 0; i < m; ++i) sigma2 += std::norm(a(k + 1 + i, k));
    const double sigma = std::sqrt(sigma2);
    if (sigma == 0.0) continue;  // column already tridiagonal; esub[k] = 0

    const cdouble x0 = a(k + 1, k);
    const double ax0 = std::abs(x0);
    const cdouble phase = (ax0 == 0.0) ? cdouble{1.0, 0.0} : x0 / ax0;
    const cdouble nu = phase * sigma;
    const double tau = 1.0 / (sigma * (sigma + ax0));

    u.assign(m, 0.0);
    u[0] = x0 + nu;
    for (std::size_t i = 1; i < m; ++i) u[i] = a(k + 1 + i, k);

    // p = tau * A_trailing * u
    p.assign(m, 0.0);
    for (std::size_t i = 0; i < m; ++i) {
      cdouble s = 0.0;
      for (std::size_t j = 0; j < m; ++j) s += a(k + 1 + i, k + 1 + j) * u[j];
      p[i] = tau * s;
    }
    // q = p - K u with K = (tau/2) u^dagger p (real for Hermitian input)
    cdouble updot = 0.0;
    for (std::size_t i = 0; i < m; ++i) updot += std::conj(u[i]) * p[i];
    const double kappa = 0.5 * tau * updot.real();
    for (std::size_t i = 0; i < m; ++i) p[i] -= kappa * u[i];
    // A_trailing -= q u^dagger + u q^dagger
    for (std::size_t i = 0; i < m; ++i)
      for (std::size_t j = 0; j < m; ++j)
        a(k + 1 + i, k + 1 + j) -= p[i] * std::conj(u[j]) + u[i] * std::conj(p[j]);

    esub[k] = -nu;
    if (q) {
      reflectors[k] = u;
      taus[k] = tau;
    }
  }
  if (n >= 2) esub[n - 2] = a(n - 1, n - 2);
  for (std::size_t k = 0; k < n; ++k) d[k] = a(k, k).real();

  // Diagonal phase similarity: subdiagonal becomes |esub|.
  std::vector<cdouble> dph(n, cdouble{1.0, 0.0});
  for (std::size_t k = 0; k + 1 < n; ++k) {
    const double mag = std::abs(esub[k]);
    e[k] = mag;
    dph[k + 1] = (mag == 0.0) ? dph[k] : dph[k] * (esub[k] / mag);
  }

  if (q) {
    *q = ComplexMatrix::identity(n);
    // Q = H_0 H_1 ... applied to I from the last reflector backwards.
    for (std::size_t kk = n; kk-- > 0;) {
      const auto& uk = reflectors[kk];
      if (uk.empty()) continue;
      const double tau = taus[kk];
      const std::size_t base = kk + 1, m = uk.size();
      for (std::size_t c = 0; c < n; ++c) {
        cdouble s = 0.0;
        for (std::size_t i = 0; i < m; ++i) s += std::conj(uk[i]) * (*q)(base + i, c);
        s *= tau;
        for (std::size_t i = 0; i < m; ++i) (*q)(base + i, c) -= uk[i] * s;
      }
    }
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r = 0; r < n; ++r) (*q)(r, c) *= dph[c];
  }
}

// Implicit-shift QL on a real symmetric tridiagonal matrix. Eigenvalues
// land in d; plane rotations are accumulated into the columns of v when
// present. Returns false if any eigenvalue fails to converge.
bool ql_implicit_shift(std::vector<double>& d, std::vector<double>& e, ComplexMatrix* v) {
  const std::size_t n = d.size();
  if (n <= 1) return true;
  constexpr double eps = std::numeric_limits<double>::epsilon();
  constexpr int max_iter = 50;

  for (std::size_t l = 0; l < n; ++l) {
    int iter = 0;
    for (;;) {
      std::size_t m = l;
      while (m + 1 < n) {
        const double dd = std::abs(d[m]) + std::abs(d[m + 1]);
        if (std::abs(e[m]) <= eps * dd) break;
        ++m;
      }
      if (m == l) break;
      if (++iter > max_iter) return false;

      // Wilkinson-style shift from the 2x2 block at the l end.
      double g = (d[l + 1] - d[l]) / (2.0 * e[l]);
      double r = std::hypot(g, 1.0);
      g = d[m] - d[l] + e[l] / (g + std::copysign(r, g));
      double s = 1.0, c = 1.0, pp = 0.0;

      bool restart = false;
      for (std::size_t i = m; i-- > l;) {
        double f = s * e[i];
        const double b = c * e[i];
        r = std::hypot(f, g);
        e[i + 1] = r;
        if (r == 0.0) {
          d[i + 1] -= pp;
          e[m] = 0.0;
          restart = true;
          break;
        }
        s = f / r;
        c = g / r;
        g = d[i + 1] - pp;
        r = (d[i] - g) * s + 2.0 * c * b;
        pp = s * r;
        d[i + 1] = g + pp;
        g = c * r - b;
        if (v) {
          for (std::size_t row = 0; row < v->dim(); ++row) {
            const cdouble tmp = (*v)(row, i + 1);
            (*v)(row, i + 1) = s * (*v)(row, i) + c * tmp;
            (*v)(row, i) = c * (*v)(row, i) - s * tmp;
          }
        }
      }
      if (restart) continue;
      d[l] -= pp;
      e[l] = g;
      e[m] = 0.0;
    }
  }
  return true;
}

ComplexMatrix checked_input(const ComplexMatrix& m) {
  if (m.dim() == 0) throw dimension_error("eigensolver: empty matrix");
  const double scale = std::max(1.0, max_abs(m));
  if (hermiticity_defect(m) > kEigenHermiticityTol * scale)
    throw contract_error("eigensolver input is not Hermitian within tolerance");
  return symmetrized(m);
}

void solve(const ComplexMatrix& m, std::vector<double>& values, ComplexMatrix* vectors) {
  const ComplexMatrix a = checked_input(m);
  std::vector<double> e;
  tridiagonalize(a, values, e, vectors);
  if (!ql_implicit_shift(values, e, vectors))
    throw contract_error("eigensolver: QL iteration failed to converge");

  // Ascending order, permuting eigenvector columns alongside.
  const std::size_t n = values.size();
  std::vector<std::size_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::sort(order.begin(), order.end(),
            [&](std::size_t i, std::size_t j) { return values[i] < values[j]; });
  std::vector<double> sorted(n);
  for (std::size_t i = 0; i < n; ++i) sorted[i] = values[order[i]];
  values = std::move(sorted);
  if (vectors) {
    ComplexMatrix perm(n);
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t r = 0; r < n; ++r) perm(r, c) = (*vectors)(r, order[c]);
    *vectors = std::move(perm);
  }
}

}  // namespace

std::vector<double> hermitian_eigenvalues(const ComplexMatrix& m) {
  std::vector<double> values;
  solve(m, values, nullptr);
  return values;
}

Eigensystem hermitian_eigensystem(const ComplexMatrix& m) {
  Eigensystem es;
  es.vectors = ComplexMatrix(m.dim());
  solve(m, es.values, &es.vectors);
  return es;
}

double min_eigenvalue(const ComplexMatrix& m) {
  return hermitian_eigenvalues(m).front();
}

}  // namespace bellkit
