#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "bellkit/bell.hpp"
#include "bellkit/complex_matrix.hpp"
#include "bellkit/pure_state.hpp"

namespace bellkit {

// Strictness slack shared by the violation threshold and the per-split
// distillability criterion; boundary cases report false.
inline constexpr double kCriterionSlack = 1e-12;

/// Coefficients of a GHZ-diagonal N-party state: weights lambda0+/- on the
/// two GHZ projectors and lambda_j on each degenerate pair, j running over
/// the nonzero (N-1)-bit labels. Normalization:
///   lambda0+ + lambda0- + 2 sum_j lambda_j = 1.
struct GhzDiagonalCoefficients {
  int n_parties = 0;
  double lambda0_plus = 0.0;
  double lambda0_minus = 0.0;
  std::vector<double> lambdas;  // label j at lambdas[j-1], j = 1 .. 2^{n-1}-1

  std::uint64_t label_count() const { return (std::uint64_t{1} << (n_parties - 1)) - 1; }
  double lambda(std::uint64_t label) const { return lambdas[label - 1]; }
};

/// Validates shape, nonnegativity (roundoff in [-1e-12, 0) is clamped to
/// zero) and the normalization sum within 1e-10.
GhzDiagonalCoefficients make_coefficients(int n_parties, double lambda0_plus,
                                          double lambda0_minus, std::vector<double> lambdas);

double normalization_sum(const GhzDiagonalCoefficients& c);

/// Two-group partition of N parties, encoded by a nonzero (N-1)-bit label
/// j1..j_{N-1} (j1 most significant): party i sits with party N iff j_i = 0.
struct BipartiteSplit {
  int n_parties = 0;
  std::uint64_t label = 0;
};

BipartiteSplit make_split(int n_parties, std::uint64_t label);
BipartiteSplit parse_split_bits(int n_parties, std::string_view bits);
std::string split_bits(const BipartiteSplit& split);  // zero-padded, width N-1

/// (group containing party N, other group); both ascending party lists.
std::pair<std::vector<int>, std::vector<int>> split_groups(const BipartiteSplit& split);

/// All 2^{n-1}-1 splits, labels ascending.
std::vector<BipartiteSplit> enumerate_splits(int n_parties);

/// The depolarization fixed point: inner products against the structured
/// GHZ basis (each basis vector touches two amplitudes, so the extraction
/// is O(2^N), never a dense basis change).
///   lambda0+- = <Psi0+-|rho|Psi0+->,  2 lambda_j = <Psi j+|rho|Psi j+> + <Psi j-|rho|Psi j->
GhzDiagonalCoefficients extract_coefficients(const ComplexMatrix& rho);
GhzDiagonalCoefficients extract_coefficients(const PureState& psi);

/// Dense state of the GHZ-diagonal family with these coefficients: the
/// diagonal carries the lambdas and the only coherence is delta/2 on the
/// |0..0><1..1| corner pair.
ComplexMatrix ghz_diagonal_density(const GhzDiagonalCoefficients& c);

/// delta = lambda0+ - lambda0-.
double delta(const GhzDiagonalCoefficients& c);

/// 2^{-(n-1)/2}: the Bell bound expressed at coefficient level.
double violation_threshold(int n_parties);

/// delta > 2^{-(n-1)/2}, strict with kCriterionSlack.
bool violates_threshold(const GhzDiagonalCoefficients& c);

/// Bell report for a GHZ-diagonal state without densifying: the value of
/// the phase-absorbed operator is exactly 2^{(n-1)/2} * delta.
BellReport bell_report(const GhzDiagonalCoefficients& c);

struct SplitReport {
  BipartiteSplit split;
  std::vector<int> group_with_last;
  std::vector<int> other_group;
  double two_lambda_j = 0.0;
  double delta = 0.0;
  bool distillable = false;  // 2 lambda_j < delta, strict with slack
};

SplitReport split_report(const GhzDiagonalCoefficients& c, const BipartiteSplit& split);
std::vector<SplitReport> scan_splits(const GhzDiagonalCoefficients& c);

/// Number of splits with 2 lambda_j < delta - slack; allocation-free fast
/// path for large campaigns.
std::uint64_t count_distillable_splits(const GhzDiagonalCoefficients& c);

/// (2^{n-1}-1) / 2^{(n-1)/2}; exceeds 1 for every n > 2, which is what
/// forces at least one distillable split whenever the threshold is beaten.
double pigeonhole_bound(int n_parties);

struct LemmaWitness {
  BellReport bell;                      // from the x/y operator at phase beta
  GhzDiagonalCoefficients coefficients; // extracted after absorbing beta into rho
  std::vector<SplitReport> splits;
  bool applicable = false;              // bell.violates
  std::vector<std::uint64_t> distillable_labels;
};

/// Evaluates the x/y Bell operator on rho and, when it violates the
/// classical bound, scans all splits of the depolarized coefficients.
/// Postcondition: applicable implies at least one distillable label; a
/// miss means a defect and throws contract_error. Requires N >= 3.
LemmaWitness lemma_witness(const ComplexMatrix& rho, double beta);
LemmaWitness lemma_witness(const ComplexMatrix& rho);  // beta = beta_phase(N)

}  // namespace bellkit
