#include "bellkit/complex_matrix.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace bellkit {

ComplexMatrix ComplexMatrix::identity(std::size_t dim) {
  ComplexMatrix m(dim);
  for (std::size_t i = 0; i < dim; ++i) m(i, i) = 1.0;
  return m;
}

ComplexMatrix& ComplexMatrix::operator+=(const ComplexMatrix& other) {
  if (dim_ != other.dim_) throw dimension_error("matrix addition: dimension mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] += other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator-=(const ComplexMatrix& other) {
  if (dim_ != other.dim_) throw dimension_error("matrix subtraction: dimension mismatch");
  for (std::size_t i = 0; i < entries_.size(); ++i) entries_[i] -= other.entries_[i];
  return *this;
}

ComplexMatrix& ComplexMatrix::operator*=(cdouble scale) {
  for (auto& e : entries_) e *= scale;
  return *this;
}

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b) { return a += b; }
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b) { return a -= b; }
ComplexMatrix operator*(cdouble scale, ComplexMatrix m) { return m *= scale; }

int n_parties_of_dim(std::size_t dim) {
  if (dim == 0 || !std::has_single_bit(dim))
    throw dimension_error("dimension " + std::to_string(dim) + " is not a power of two");
  return std::countr_zero(dim);
}

PartySubset make_party_subset(int n_parties, std::uint32_t mask) {
  if (n_parties < 1 || n_parties > 30)
    throw parameter_error("party subset: n_parties out of range");
  if (n_parties < 32 && (mask >> n_parties) != 0)
    throw parameter_error("party subset mask references parties beyond n_parties");
  return PartySubset{n_parties, mask};
}

PartySubset single_party(int n_parties, int party) {
  if (party < 1 || party > n_parties)
    throw parameter_error("party index out of range");
  return make_party_subset(n_parties, std::uint32_t{1} << (party - 1));
}

PartySubset full_party_set(int n_parties) {
  return make_party_subset(n_parties, (std::uint32_t{1} << n_parties) - 1);
}

ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b,
                             std::size_t max_dim) {
  const std::size_t da = a.dim(), db = b.dim();
  if (da == 0 || db == 0) throw dimension_error("tensor product of empty matrix");
  if (da > max_dim / db)
    throw dimension_error("tensor product dimension " + std::to_string(da) + "*" +
                          std::to_string(db) + " exceeds dense cap " +
                          std::to_string(max_dim));
  ComplexMatrix out(da * db);
  for (std::size_t i1 = 0; i1 < da; ++i1)
    for (std::size_t j1 = 0; j1 < da; ++j1) {
      const cdouble aij = a(i1, j1);
      if (aij == 0.0) continue;
      for (std::size_t i2 = 0; i2 < db; ++i2)
        for (std::size_t j2 = 0; j2 < db; ++j2)
          out(i1 * db + i2, j1 * db + j2) = aij * b(i2, j2);
    }
  return out;
}

ComplexMatrix partial_transpose(const ComplexMatrix& rho, const PartySubset& subset) {
  const int n = n_parties_of_dim(rho.dim());
  if (n != subset.n_parties)
    throw dimension_error("partial transpose: matrix holds " + std::to_string(n) +
                          " parties, subset declares " + std::to_string(subset.n_parties));
  // Translate the party mask into basis-index bits: party i <-> bit (n - i).
  std::size_t index_mask = 0;
  for (int party = 1; party <= n; ++party)
    if (subset.mask & (std::uint32_t{1} << (party - 1)))
      index_mask |= std::size_t{1} << (n - party);

  const std::size_t dim = rho.dim();
  const std::size_t keep = ~index_mask;
  ComplexMatrix out(dim);
  for (std::size_t r = 0; r < dim; ++r)
    for (std::size_t c = 0; c < dim; ++c) {
      const std::size_t rs = (r & keep) | (c & index_mask);
      const std::size_t cs = (c & keep) | (r & index_mask);
      out(r, c) = rho(rs, cs);
    }
  return out;
}

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw dimension_error("matrix product: dimension mismatch");
  const std::size_t n = a.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k) {
      const cdouble aik = a(i, k);
      if (aik == 0.0) continue;
      for (std::size_t j = 0; j < n; ++j) out(i, j) += aik * b(k, j);
    }
  return out;
}

ComplexMatrix adjoint(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) out(i, j) = std::conj(m(j, i));
  return out;
}

cdouble trace(const ComplexMatrix& m) {
  cdouble t = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i) t += m(i, i);
  return t;
}

std::vector<cdouble> apply_matrix(const ComplexMatrix& m, const std::vector<cdouble>& v) {
  if (v.size() != m.dim()) throw dimension_error("matrix-vector product: dimension mismatch");
  std::vector<cdouble> out(m.dim());
  for (std::size_t i = 0; i < m.dim(); ++i) {
    cdouble s = 0.0;
    for (std::size_t j = 0; j < m.dim(); ++j) s += m(i, j) * v[j];
    out[i] = s;
  }
  return out;
}

double max_abs(const ComplexMatrix& m) {
  double v = 0.0;
  for (const auto& e : m.entries()) v = std::max(v, std::abs(e));
  return v;
}

double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b) {
  if (a.dim() != b.dim()) throw dimension_error("matrix comparison: dimension mismatch");
  double v = 0.0;
  for (std::size_t i = 0; i < a.entries().size(); ++i)
    v = std::max(v, std::abs(a.entries()[i] - b.entries()[i]));
  return v;
}

double frobenius_norm(const ComplexMatrix& m) {
  double s = 0.0;
  for (const auto& e : m.entries()) s += std::norm(e);
  return std::sqrt(s);
}

double hermiticity_defect(const ComplexMatrix& m) {
  double v = 0.0;
  for (std::size_t i = 0; i < m.dim(); ++i)
    for (std::size_t j = i; j < m.dim(); ++j)
      v = std::max(v, std::abs(m(i, j) - std::conj(m(j, i))));
  return v;
}

bool is_hermitian(const ComplexMatrix& m, double tol) {
  return hermiticity_defect(m) <= tol;
}

ComplexMatrix symmetrized(const ComplexMatrix& m) {
  const std::size_t n = m.dim();
  ComplexMatrix out(n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      out(i, j) = 0.5 * (m(i, j) + std::conj(m(j, i)));
  return out;
}

}  // namespace bellkit
