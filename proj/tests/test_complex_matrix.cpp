#include <doctest.h>

#include <algorithm>

#include "bellkit/complex_matrix.hpp"
#include "bellkit/eigen_solver.hpp"
#include "bellkit/rng.hpp"
#include "bellkit/states.hpp"
#include "test_helpers.hpp"

using namespace bellkit;
using namespace bellkit::testing;

TEST_SUITE_BEGIN("complex_matrix");

TEST_CASE("tensor product of identities is the identity") {
  const auto i2 = ComplexMatrix::identity(2);
  CHECK(tensor_product(i2, i2) == ComplexMatrix::identity(4));
}

TEST_CASE("sigma_x tensor sigma_x flips |00> to |11>") {
  const auto xx = tensor_product(pauli_x(), pauli_x());
  std::vector<cdouble> e0(4, 0.0);
  e0[0] = 1.0;
  const auto out = apply_matrix(xx, e0);
  CHECK(out[3] == cdouble{1.0, 0.0});
  CHECK(out[0] == cdouble{0.0, 0.0});
  CHECK(out[1] == cdouble{0.0, 0.0});
  CHECK(out[2] == cdouble{0.0, 0.0});
}

TEST_CASE("sigma_x tensor sigma_y corner entry") {
  const auto xy = tensor_product(pauli_x(), pauli_y());
  CHECK(xy(0, 3) == cdouble{0.0, -1.0});
}

TEST_CASE("tensor product associativity") {
  // Pauli entries are exact dyadics, so both association orders agree
  // bit-for-bit.
  const auto left = tensor_product(tensor_product(pauli_x(), pauli_y()), pauli_z());
  const auto right = tensor_product(pauli_x(), tensor_product(pauli_y(), pauli_z()));
  CHECK(left == right);

  SeededRng rng(11);
  ComplexMatrix a(2), b(3), c(2);
  for (auto& e : a.entries()) e = rng.normal_pair();
  for (auto& e : b.entries()) e = rng.normal_pair();
  for (auto& e : c.entries()) e = rng.normal_pair();
  CHECK(max_abs_diff(tensor_product(tensor_product(a, b), c),
                     tensor_product(a, tensor_product(b, c))) < 1e-14);
}

TEST_CASE("tensor product dimension cap") {
  const auto big = ComplexMatrix::identity(1 << 7);
  CHECK_THROWS_AS(tensor_product(big, big, 1 << 13), dimension_error);
  CHECK_NOTHROW(tensor_product(big, big, 1 << 14));
}

TEST_CASE("party subset validation") {
  CHECK_THROWS_AS(make_party_subset(3, 0b1000), parameter_error);
  CHECK_THROWS_AS(single_party(3, 4), parameter_error);
  CHECK(full_party_set(3).mask == 0b111);
}

TEST_CASE("partial transpose fixes the identity and the diagonal") {
  const auto i8 = ComplexMatrix::identity(8);
  CHECK(partial_transpose(i8, single_party(3, 2)) == i8);

  const auto rho = random_density_matrix(3, 5);
  const auto pt = partial_transpose(rho, make_party_subset(3, 0b011));
  for (std::size_t i = 0; i < 8; ++i) CHECK(pt(i, i) == rho(i, i));
}

TEST_CASE("partial transpose over the full party set is the transpose") {
  const auto rho = random_density_matrix(2, 9);
  const auto pt = partial_transpose(rho, full_party_set(2));
  for (std::size_t r = 0; r < 4; ++r)
    for (std::size_t c = 0; c < 4; ++c) CHECK(pt(r, c) == rho(c, r));
}

TEST_CASE("partial transpose is an exact involution") {
  const auto rho = random_density_matrix(3, 17);
  for (const std::uint32_t mask : {0b001u, 0b010u, 0b110u, 0b101u}) {
    const auto subset = make_party_subset(3, mask);
    CHECK(partial_transpose(partial_transpose(rho, subset), subset) == rho);
  }
}

TEST_CASE("partial transpose of the 2-qubit GHZ projector") {
  const auto rho = density_matrix(ghz(2, PhaseSpec::radians(0.0)));
  const auto evs = hermitian_eigenvalues(partial_transpose(rho, single_party(2, 2)));
  REQUIRE(evs.size() == 4);
  CHECK(evs[0] == doctest::Approx(-0.5).epsilon(1e-12));
  CHECK(evs[1] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(evs[2] == doctest::Approx(0.5).epsilon(1e-12));
  CHECK(evs[3] == doctest::Approx(0.5).epsilon(1e-12));
}

TEST_CASE("complementary subsets give identical partial-transpose spectra") {
  for (const std::uint64_t seed : {1u, 2u, 3u}) {
    const auto rho = random_density_matrix(3, seed);
    for (const std::uint32_t mask : {0b001u, 0b011u, 0b010u}) {
      const auto a = hermitian_eigenvalues(partial_transpose(rho, make_party_subset(3, mask)));
      const auto b = hermitian_eigenvalues(
          partial_transpose(rho, make_party_subset(3, ~mask & 0b111u)));
      CHECK(testing::max_abs_diff(a, b) < 1e-9);
    }
  }
}

TEST_CASE("partial transpose preserves trace and Hermiticity") {
  const auto rho = random_density_matrix(3, 23);
  const auto pt = partial_transpose(rho, make_party_subset(3, 0b101));
  CHECK(trace(pt) == trace(rho));
  CHECK(hermiticity_defect(pt) == 0.0);
}

TEST_CASE("partial transpose shape checks") {
  const auto rho = random_density_matrix(2, 1);
  CHECK_THROWS_AS(partial_transpose(rho, single_party(3, 1)), dimension_error);
}

TEST_CASE("product and adjoint sanity: sx sy = i sz") {
  const auto prod = multiply(pauli_x(), pauli_y());
  CHECK(max_abs_diff(prod, cdouble{0.0, 1.0} * pauli_z()) == 0.0);
  CHECK(max_abs_diff(adjoint(prod), cdouble{0.0, -1.0} * pauli_z()) == 0.0);
  CHECK(trace(prod) == cdouble{0.0, 0.0});
}

TEST_SUITE_END();
