#include <doctest.h>

#include <cmath>
#include <map>

#include "bellkit/bell.hpp"
#include "bellkit/eigen_solver.hpp"
#include "bellkit/ghz_family.hpp"
#include "bellkit/states.hpp"
#include "test_helpers.hpp"

using namespace bellkit;

namespace {

// Extraction oracle: full dense contractions <Psi|rho|Psi> against basis
// vectors built by ghz_basis_state, no index shortcuts.
GhzDiagonalCoefficients extract_by_contraction(const ComplexMatrix& rho) {
  const int n = n_parties_of_dim(rho.dim());
  const std::uint64_t half = std::uint64_t{1} << (n - 1);
  auto overlap = [&](const PureState& psi) {
    return inner_product(psi, PureState{n, apply_matrix(rho, psi.amplitudes)}).real();
  };
  const double l0p = overlap(ghz_basis_state(n, 0, +1));
  const double l0m = overlap(ghz_basis_state(n, 0, -1));
  std::vector<double> lambdas(half - 1);
  for (std::uint64_t j = 1; j < half; ++j)
    lambdas[j - 1] =
        0.5 * (overlap(ghz_basis_state(n, j, +1)) + overlap(ghz_basis_state(n, j, -1)));
  return make_coefficients(n, l0p, l0m, std::move(lambdas));
}

double coeff_distance(const GhzDiagonalCoefficients& a, const GhzDiagonalCoefficients& b) {
  double v = std::max(std::abs(a.lambda0_plus - b.lambda0_plus),
                      std::abs(a.lambda0_minus - b.lambda0_minus));
  for (std::size_t i = 0; i < a.lambdas.size(); ++i)
    v = std::max(v, std::abs(a.lambdas[i] - b.lambdas[i]));
  return v;
}

}  // namespace

TEST_SUITE_BEGIN("ghz_family");

TEST_CASE("split groups follow the bit convention") {
  // three qubits: labels 01, 10, 11 are (13)-(2), (23)-(1), (3)-(12)
  auto g = split_groups(parse_split_bits(3, "01"));
  CHECK(g.first == std::vector<int>{1, 3});
  CHECK(g.second == std::vector<int>{2});

  g = split_groups(parse_split_bits(3, "10"));
  CHECK(g.first == std::vector<int>{2, 3});
  CHECK(g.second == std::vector<int>{1});

  g = split_groups(parse_split_bits(3, "11"));
  CHECK(g.first == std::vector<int>{3});
  CHECK(g.second == std::vector<int>{1, 2});

  g = split_groups(parse_split_bits(4, "111"));
  CHECK(g.first == std::vector<int>{4});
  CHECK(g.second == std::vector<int>{1, 2, 3});
}

TEST_CASE("split labels and bit strings") {
  CHECK(split_bits(make_split(4, 0b110)) == "110");
  CHECK(parse_split_bits(4, "110").label == 0b110);
  CHECK_THROWS_AS(parse_split_bits(4, "000"), parameter_error);  // zero label
  CHECK_THROWS_AS(parse_split_bits(4, "11"), parameter_error);   // wrong width
  CHECK_THROWS_AS(parse_split_bits(4, "1x0"), parameter_error);
  CHECK_THROWS_AS(make_split(3, 4), parameter_error);
  CHECK_THROWS_AS(make_split(3, 0), parameter_error);
}

TEST_CASE("split enumeration counts") {
  CHECK(enumerate_splits(2).size() == 1);
  CHECK(enumerate_splits(3).size() == 3);
  CHECK(enumerate_splits(8).size() == 127);
  const auto splits = enumerate_splits(5);
  for (std::size_t i = 0; i < splits.size(); ++i) CHECK(splits[i].label == i + 1);
}

TEST_CASE("extraction of pure GHZ and the maximally mixed state") {
  for (const int n : {2, 4, 5}) {
    const auto c = extract_coefficients(density_matrix(ghz(n, PhaseSpec::radians(0.0))));
    CHECK(c.lambda0_plus == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(c.lambda0_minus == doctest::Approx(0.0).scale(1.0).epsilon(1e-14));
    for (const double l : c.lambdas) CHECK(std::abs(l) < 1e-14);

    auto mixed = ComplexMatrix::identity(std::size_t{1} << n);
    mixed *= 1.0 / static_cast<double>(mixed.dim());
    const auto cm = extract_coefficients(mixed);
    const double w = std::pow(2.0, -n);
    CHECK(cm.lambda0_plus == doctest::Approx(w).epsilon(1e-14));
    CHECK(cm.lambda0_minus == doctest::Approx(w).epsilon(1e-14));
    for (const double l : cm.lambdas) CHECK(l == doctest::Approx(w).epsilon(1e-14));
  }
}

TEST_CASE("extraction of the n=4 dur state at phase 0") {
  const auto c = extract_coefficients(dur_state(4, PhaseSpec::radians(0.0)));
  CHECK(c.lambda0_plus == doctest::Approx(0.2).epsilon(1e-12));
  CHECK(std::abs(c.lambda0_minus) < 1e-14);
  const std::map<std::string, double> expected = {
      {"100", 0.1}, {"010", 0.1}, {"001", 0.1}, {"111", 0.1},
      {"110", 0.0}, {"101", 0.0}, {"011", 0.0}};
  for (const auto& [bits, lambda] : expected) {
    const auto split = parse_split_bits(4, bits);
    CHECK(c.lambda(split.label) == doctest::Approx(lambda).scale(1.0).epsilon(1e-12));
  }
}

TEST_CASE("structured extraction agrees with the contraction oracle") {
  for (const int n : {3, 4}) {
    for (const std::uint64_t seed : {1ull, 2ull, 3ull, 4ull}) {
      const auto rho = random_density_matrix(n, seed);
      CHECK(coeff_distance(extract_coefficients(rho), extract_by_contraction(rho)) < 1e-12);
    }
  }
  CHECK(coeff_distance(extract_coefficients(dur_state(4, PhaseSpec::radians(0.0))),
                       extract_by_contraction(dur_state(4, PhaseSpec::radians(0.0)))) < 1e-13);
}

TEST_CASE("pure-state extraction matches the dense path") {
  for (const int n : {2, 3, 6}) {
    for (const double alpha : {0.0, 0.9}) {
      const auto psi = ghz(n, PhaseSpec::radians(alpha));
      CHECK(coeff_distance(extract_coefficients(psi),
                           extract_coefficients(density_matrix(psi))) < 1e-13);
    }
  }
  const auto basis = ghz_basis_state(4, 5, -1);
  const auto c = extract_coefficients(basis);
  CHECK(c.lambda(5) == doctest::Approx(0.5).epsilon(1e-14));
}

TEST_CASE("extraction rejects bad input") {
  ComplexMatrix not_herm(4);
  not_herm(0, 3) = 1.0;
  CHECK_THROWS_AS(extract_coefficients(not_herm), contract_error);
  CHECK_THROWS_AS(extract_coefficients(ComplexMatrix::identity(2)), parameter_error);  // n=1
}

TEST_CASE("round trip: rebuild then re-extract") {
  for (const int n : {2, 4, 6}) {
    for (std::uint64_t seed = 0; seed < 5; ++seed) {
      const auto c = random_ghz_diagonal(n, seed, seed % 2 == 0 ? 0.0 : 0.3);
      const auto rho = ghz_diagonal_density(c);
      CHECK(std::abs(trace(rho).real() - 1.0) < 1e-12);
      CHECK(min_eigenvalue(rho) > -1e-12);
      CHECK(coeff_distance(extract_coefficients(rho), c) < 1e-12);
    }
  }
}

TEST_CASE("delta, threshold and the boundary cases") {
  CHECK(delta(extract_coefficients(density_matrix(ghz(3, PhaseSpec::radians(0.0))))) ==
        doctest::Approx(1.0));
  auto mixed = ComplexMatrix::identity(8);
  mixed *= 1.0 / 8.0;
  CHECK(delta(extract_coefficients(mixed)) == doctest::Approx(0.0));

  // dur(N, matched) seen through the aligned (phase-absorbed) extraction:
  // delta = 1/(N+1), compared against threshold 2^{-(N-1)/2}.
  for (const int n : {4, 7, 8}) {
    const auto w = lemma_witness(dur_state(n, PhaseSpec::matched()));
    CHECK(delta(w.coefficients) == doctest::Approx(1.0 / (n + 1)).epsilon(1e-12));
    const bool expect_violation = n >= 8;
    CHECK(violates_threshold(w.coefficients) == expect_violation);
    CHECK(w.bell.violates == expect_violation);
  }

  // N=7 sits exactly on the threshold: delta = 1/8 = 2^{-3}.
  const auto w7 = lemma_witness(dur_state(7, PhaseSpec::matched()));
  CHECK(delta(w7.coefficients) == doctest::Approx(violation_threshold(7)).epsilon(1e-14));
  CHECK_FALSE(violates_threshold(w7.coefficients));
}

TEST_CASE("split reports on the n=4 dur state") {
  const auto c = extract_coefficients(dur_state(4, PhaseSpec::radians(0.0)));
  for (const auto* bits : {"100", "010", "001", "111"}) {
    const auto r = split_report(c, parse_split_bits(4, bits));
    CHECK(r.two_lambda_j == doctest::Approx(0.2).epsilon(1e-12));
    CHECK(r.delta == doctest::Approx(0.2).epsilon(1e-12));
    CHECK_FALSE(r.distillable);  // equality is not strict inequality
  }
  for (const auto* bits : {"110", "101", "011"}) {
    const auto r = split_report(c, parse_split_bits(4, bits));
    CHECK(r.two_lambda_j == doctest::Approx(0.0).scale(1.0).epsilon(1e-12));
    CHECK(r.distillable);
  }

  const auto pure = extract_coefficients(density_matrix(ghz(4, PhaseSpec::radians(0.0))));
  for (const auto& r : scan_splits(pure)) CHECK(r.distillable);
}

TEST_CASE("split report validation") {
  const auto c = random_ghz_diagonal(4, 1, 0.0);
  CHECK_THROWS_AS(split_report(c, make_split(5, 1)), dimension_error);
}

TEST_CASE("count_distillable_splits agrees with the full scan") {
  for (const int n : {3, 5, 7}) {
    for (std::uint64_t seed = 0; seed < 10; ++seed) {
      const auto c = random_ghz_diagonal(n, seed, 0.0);
      std::uint64_t scanned = 0;
      for (const auto& r : scan_splits(c))
        if (r.distillable) ++scanned;
      CHECK(count_distillable_splits(c) == scanned);
    }
  }
}

TEST_CASE("bell-value identity: tr(B rho) = 2^{(N-1)/2} delta") {
  for (const int n : {3, 4}) {
    const double qmax = std::pow(2.0, (n - 1) / 2.0);
    for (std::uint64_t seed = 0; seed < 100; ++seed) {
      const auto rho = random_density_matrix(n, seed);
      // phase-absorbed operator against the standard-basis extraction
      const auto report = bell_report_xy(rho, 0.0);
      const auto c = extract_coefficients(rho);
      CHECK(report.value == doctest::Approx(qmax * delta(c)).epsilon(1e-9));
      CHECK(report.violates == violates_threshold(c));
      CHECK(bell_report(c).value == doctest::Approx(report.value).epsilon(1e-9));

      // paper-phase operator against the aligned extraction
      const double beta = beta_phase(n);
      const auto aligned = extract_coefficients(ghz_phase_conjugate(rho, -beta));
      CHECK(bell_report_xy(rho, beta).value ==
            doctest::Approx(qmax * delta(aligned)).epsilon(1e-9));
    }
  }
}

TEST_CASE("depolarization keeps the Bell value") {
  for (const int n : {3, 4}) {
    for (std::uint64_t seed = 50; seed < 60; ++seed) {
      const auto rho = random_density_matrix(n, seed);
      const auto rebuilt = ghz_diagonal_density(extract_coefficients(rho));
      CHECK(expectation(mk_xy_operator(n, 0.0), rebuilt) ==
            doctest::Approx(expectation(mk_xy_operator(n, 0.0), rho)).epsilon(1e-9));
    }
  }
}

TEST_CASE("pigeonhole bound values and growth") {
  CHECK(pigeonhole_bound(3) == doctest::Approx(1.5).epsilon(1e-15));
  CHECK(pigeonhole_bound(2) == doctest::Approx(1.0 / std::sqrt(2.0)).epsilon(1e-15));
  CHECK(pigeonhole_bound(2) < 1.0);
  double prev = pigeonhole_bound(2);
  for (int n = 3; n <= 20; ++n) {
    const double cur = pigeonhole_bound(n);
    CHECK(cur > 1.0);
    CHECK(cur > prev);
    prev = cur;
  }
}

TEST_CASE("lemma scan finds a witness on every violating family") {
  // reduced sweep here; the acceptance suite runs the full campaign
  for (const int n : {3, 5, 8}) {
    const double floor = violation_threshold(n) + 1e-6;
    for (std::uint64_t seed = 0; seed < 1000; ++seed) {
      const auto c = random_ghz_diagonal(n, seed, floor);
      REQUIRE(violates_threshold(c));
      CHECK(count_distillable_splits(c) >= 1);
    }
  }
}

TEST_CASE("lemma witness on dense states") {
  const auto ghz5 = density_matrix(ghz(5, PhaseSpec::radians(beta_phase(5))));
  const auto w = lemma_witness(ghz5);
  CHECK(w.applicable);
  CHECK(w.distillable_labels.size() == 15);  // every split of the pure GHZ

  const auto w8 = lemma_witness(dur_state(8, PhaseSpec::matched()));
  CHECK(w8.applicable);
  CHECK(w8.distillable_labels.size() >= 1);

  auto mixed = ComplexMatrix::identity(16);
  mixed *= 1.0 / 16.0;
  const auto wm = lemma_witness(mixed);
  CHECK_FALSE(wm.applicable);
  CHECK(wm.splits.size() == 7);

  CHECK_THROWS_AS(lemma_witness(random_density_matrix(2, 1)), parameter_error);
}

TEST_CASE("coefficient validation") {
  CHECK_THROWS_AS(make_coefficients(3, 0.9, 0.2, {0.0, 0.0, 0.0}), contract_error);  // sum != 1
  CHECK_THROWS_AS(make_coefficients(3, 1.0, -1e-6, {0.0, 0.0, 0.0}), contract_error);
  CHECK_THROWS_AS(make_coefficients(3, 1.0, 0.0, {0.0, 0.0}), dimension_error);
  const auto c = make_coefficients(3, 1.0, -1e-13, {0.0, 0.0, 0.0});
  CHECK(c.lambda0_minus == 0.0);  // clamped
}

TEST_SUITE_END();
