#pragma once

#include <complex>
#include <cstddef>
#include <cstdint>
#include <vector>

#include "bellkit/errors.hpp"

namespace bellkit {

using cdouble = std::complex<double>;

// Hard ceiling on dense operator dimension (2^14). Dense storage is
// O(dim^2); structured GHZ-diagonal computations are not subject to it.
inline constexpr std::size_t kMaxDenseDim = std::size_t{1} << 14;

/// Dense square complex matrix, row-major. When the matrix carries an
/// N-party qubit system, dim = 2^N and party 1 occupies the most
/// significant bit of every basis index (party N the least significant).
class ComplexMatrix {
 public:
  ComplexMatrix() = default;
  explicit ComplexMatrix(std::size_t dim) : dim_(dim), entries_(dim * dim) {}

  static ComplexMatrix identity(std::size_t dim);

  std::size_t dim() const { return dim_; }
  bool empty() const { return dim_ == 0; }

  cdouble& operator()(std::size_t r, std::size_t c) { return entries_[r * dim_ + c]; }
  const cdouble& operator()(std::size_t r, std::size_t c) const { return entries_[r * dim_ + c]; }

  std::vector<cdouble>& entries() { return entries_; }
  const std::vector<cdouble>& entries() const { return entries_; }

  ComplexMatrix& operator+=(const ComplexMatrix& other);
  ComplexMatrix& operator-=(const ComplexMatrix& other);
  ComplexMatrix& operator*=(cdouble scale);

  friend bool operator==(const ComplexMatrix&, const ComplexMatrix&) = default;

 private:
  std::size_t dim_ = 0;
  std::vector<cdouble> entries_;
};

ComplexMatrix operator+(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator-(ComplexMatrix a, const ComplexMatrix& b);
ComplexMatrix operator*(cdouble scale, ComplexMatrix m);

/// Number of parties for a qubit-structured dimension; throws
/// dimension_error unless dim is a power of two >= 1.
int n_parties_of_dim(std::size_t dim);

/// A subset of the parties 1..n_parties, as a bitmask with bit (i-1) set
/// for party i. The empty subset is allowed (identity transpose).
struct PartySubset {
  int n_parties = 0;
  std::uint32_t mask = 0;
};

PartySubset make_party_subset(int n_parties, std::uint32_t mask);
PartySubset single_party(int n_parties, int party);
PartySubset full_party_set(int n_parties);

/// Kronecker product; a is the most significant index block (party-1 side).
/// Entry ((i1*dim(b)+i2),(j1*dim(b)+j2)) = a(i1,j1) * b(i2,j2).
ComplexMatrix tensor_product(const ComplexMatrix& a, const ComplexMatrix& b,
                             std::size_t max_dim = kMaxDenseDim);

/// Transposition of the index pairs belonging to the parties in the mask;
/// all other entries unchanged. An involution that fixes the diagonal
/// bit-for-bit. Throws dimension_error on a shape mismatch.
ComplexMatrix partial_transpose(const ComplexMatrix& rho, const PartySubset& subset);

ComplexMatrix multiply(const ComplexMatrix& a, const ComplexMatrix& b);
ComplexMatrix adjoint(const ComplexMatrix& m);
cdouble trace(const ComplexMatrix& m);

std::vector<cdouble> apply_matrix(const ComplexMatrix& m, const std::vector<cdouble>& v);

double max_abs(const ComplexMatrix& m);
double max_abs_diff(const ComplexMatrix& a, const ComplexMatrix& b);
double frobenius_norm(const ComplexMatrix& m);

/// Largest |m(i,j) - conj(m(j,i))| over all entries; 0 for exactly
/// Hermitian input.
double hermiticity_defect(const ComplexMatrix& m);
bool is_hermitian(const ComplexMatrix& m, double tol);

/// (m + m^dagger)/2.
ComplexMatrix symmetrized(const ComplexMatrix& m);

}  // namespace bellkit
