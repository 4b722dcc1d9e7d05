#include "bellkit/ghz_family.hpp"

#include <algorithm>
#include <cmath>

namespace bellkit {

namespace {

void require_family_n(int n) {
  if (n < 2) throw parameter_error("GHZ-diagonal family needs n >= 2");
  if (n > 40) throw parameter_error("party count out of range");
}

}  // namespace

GhzDiagonalCoefficients make_coefficients(int n_parties, double lambda0_plus,
                                          double lambda0_minus,
                                          std::vector<double> lambdas) {
  require_family_n(n_parties);
  GhzDiagonalCoefficients c{n_parties, lambda0_plus, lambda0_minus, std::move(lambdas)};
  if (c.lambdas.size() != c.label_count())
    throw dimension_error("coefficient family has wrong lambda count for its party count");

  auto clamp = [](double& v) {
    if (v < 0.0) {
      if (v < -1e-12) throw contract_error("negative GHZ-diagonal coefficient");
      v = 0.0;
    }
  };
  clamp(c.lambda0_plus);
  clamp(c.lambda0_minus);
  for (auto& l : c.lambdas) clamp(l);

  if (std::abs(normalization_sum(c) - 1.0) > 1e-10)
    throw contract_error("GHZ-diagonal coefficients do not sum to 1");
  return c;
}

double normalization_sum(const GhzDiagonalCoefficients& c) {
  double s = c.lambda0_plus + c.lambda0_minus;
  for (const double l : c.lambdas) s += 2.0 * l;
  return s;
}

BipartiteSplit make_split(int n_parties, std::uint64_t label) {
  require_family_n(n_parties);
  const std::uint64_t count = (std::uint64_t{1} << (n_parties - 1)) - 1;
  if (label < 1 || label > count)
    throw parameter_error("split label must be a nonzero (N-1)-bit string");
  return BipartiteSplit{n_parties, label};
}

BipartiteSplit parse_split_bits(int n_parties, std::string_view bits) {
  require_family_n(n_parties);
  if (bits.size() != static_cast<std::size_t>(n_parties - 1))
    throw parameter_error("split bit string must have exactly N-1 bits");
  std::uint64_t label = 0;
  for (const char ch : bits) {
    if (ch != '0' && ch != '1') throw parameter_error("split bit string may contain only 0/1");
    label = (label << 1) | static_cast<std::uint64_t>(ch - '0');
  }
  return make_split(n_parties, label);
}

std::string split_bits(const BipartiteSplit& split) {
  std::string s(static_cast<std::size_t>(split.n_parties - 1), '0');
  for (int i = 0; i < split.n_parties - 1; ++i)
    if (split.label >> (split.n_parties - 2 - i) & 1) s[i] = '1';
  return s;
}

std::pair<std::vector<int>, std::vector<int>> split_groups(const BipartiteSplit& split) {
  std::vector<int> with_last, other;
  for (int party = 1; party < split.n_parties; ++party) {
    const bool bit = (split.label >> (split.n_parties - 1 - party)) & 1;
    (bit ? other : with_last).push_back(party);
  }
  with_last.push_back(split.n_parties);
  return {std::move(with_last), std::move(other)};
}

std::vector<BipartiteSplit> enumerate_splits(int n_parties) {
  require_family_n(n_parties);
  const std::uint64_t count = (std::uint64_t{1} << (n_parties - 1)) - 1;
  std::vector<BipartiteSplit> splits;
  splits.reserve(count);
  for (std::uint64_t label = 1; label <= count; ++label)
    splits.push_back(BipartiteSplit{n_parties, label});
  return splits;
}

GhzDiagonalCoefficients extract_coefficients(const ComplexMatrix& rho) {
  const int n = n_parties_of_dim(rho.dim());
  if (n < 2) throw parameter_error("coefficient extraction needs n >= 2");
  const double scale = std::max(1.0, max_abs(rho));
  if (hermiticity_defect(rho) > 1e-10 * scale)
    throw contract_error("coefficient extraction: state is not Hermitian");

  const std::size_t dim = rho.dim();
  const std::size_t d = dim - 1;
  const std::uint64_t half = std::uint64_t{1} << (n - 1);

  // |Psi0+-> live on indices {0, d}; |Psi j+-> on {2j, 2(half-1-j)+1}.
  // Only diagonal entries and the (0, d) coherence ever enter.
  const double corner = rho(0, d).real();
  double l0p = 0.5 * (rho(0, 0).real() + rho(d, d).real()) + corner;
  double l0m = 0.5 * (rho(0, 0).real() + rho(d, d).real()) - corner;
  std::vector<double> lambdas(half - 1);
  for (std::uint64_t j = 1; j < half; ++j) {
    const std::size_t a = 2 * j;
    const std::size_t b = 2 * (half - 1 - j) + 1;
    lambdas[j - 1] = 0.5 * (rho(a, a).real() + rho(b, b).real());
  }

  GhzDiagonalCoefficients c = make_coefficients(n, l0p, l0m, std::move(lambdas));
  // The basis is complete, so the sum equals tr(rho); renormalize the
  // residual roundoff away so Eq-level identities hold exactly downstream.
  const double s = normalization_sum(c);
  c.lambda0_plus /= s;
  c.lambda0_minus /= s;
  for (auto& l : c.lambdas) l /= s;
  return c;
}

GhzDiagonalCoefficients extract_coefficients(const PureState& psi) {
  validate_pure_state(psi);
  if (psi.n_parties < 2) throw parameter_error("coefficient extraction needs n >= 2");
  const int n = psi.n_parties;
  const std::size_t d = psi.amplitudes.size() - 1;
  const std::uint64_t half = std::uint64_t{1} << (n - 1);

  const cdouble a0 = psi.amplitudes[0];
  const cdouble a1 = psi.amplitudes[d];
  const double l0p = 0.5 * std::norm(a0 + a1);
  const double l0m = 0.5 * std::norm(a0 - a1);
  std::vector<double> lambdas(half - 1);
  for (std::uint64_t j = 1; j < half; ++j) {
    const std::size_t a = 2 * j;
    const std::size_t b = 2 * (half - 1 - j) + 1;
    lambdas[j - 1] = 0.5 * (std::norm(psi.amplitudes[a]) + std::norm(psi.amplitudes[b]));
  }

  GhzDiagonalCoefficients c = make_coefficients(n, l0p, l0m, std::move(lambdas));
  const double s = normalization_sum(c);
  c.lambda0_plus /= s;
  c.lambda0_minus /= s;
  for (auto& l : c.lambdas) l /= s;
  return c;
}

ComplexMatrix ghz_diagonal_density(const GhzDiagonalCoefficients& c) {
  const int n = c.n_parties;
  const std::size_t dim = std::size_t{1} << n;
  if (dim > kMaxDenseDim)
    throw dimension_error("GHZ-diagonal family too large to densify");
  const std::size_t d = dim - 1;
  const std::uint64_t half = std::uint64_t{1} << (n - 1);

  ComplexMatrix rho(dim);
  rho(0, 0) = 0.5 * (c.lambda0_plus + c.lambda0_minus);
  rho(d, d) = rho(0, 0);
  rho(0, d) = 0.5 * (c.lambda0_plus - c.lambda0_minus);
  rho(d, 0) = rho(0, d);
  for (std::uint64_t j = 1; j < half; ++j) {
    const std::size_t a = 2 * j;
    const std::size_t b = 2 * (half - 1 - j) + 1;
    rho(a, a) = c.lambda(j);
    rho(b, b) = c.lambda(j);
  }
  return rho;
}

double delta(const GhzDiagonalCoefficients& c) {
  return c.lambda0_plus - c.lambda0_minus;
}

double violation_threshold(int n_parties) {
  require_family_n(n_parties);
  return std::pow(2.0, -(n_parties - 1) / 2.0);
}

bool violates_threshold(const GhzDiagonalCoefficients& c) {
  return delta(c) > violation_threshold(c.n_parties) + kCriterionSlack;
}

BellReport bell_report(const GhzDiagonalCoefficients& c) {
  BellReport r;
  r.quantum_max = std::pow(2.0, (c.n_parties - 1) / 2.0);
  r.value = r.quantum_max * delta(c);
  r.classical_bound = 1.0;
  r.violates = r.value > r.classical_bound + kViolationSlack;
  return r;
}

SplitReport split_report(const GhzDiagonalCoefficients& c, const BipartiteSplit& split) {
  if (split.n_parties != c.n_parties)
    throw dimension_error("split and coefficient family disagree on party count");
  if (split.label < 1 || split.label > c.label_count())
    throw parameter_error("split label out of range");
  SplitReport r;
  r.split = split;
  auto groups = split_groups(split);
  r.group_with_last = std::move(groups.first);
  r.other_group = std::move(groups.second);
  r.two_lambda_j = 2.0 * c.lambda(split.label);
  r.delta = delta(c);
  r.distillable = r.two_lambda_j < r.delta - kCriterionSlack;
  return r;
}

std::vector<SplitReport> scan_splits(const GhzDiagonalCoefficients& c) {
  std::vector<SplitReport> reports;
  reports.reserve(c.label_count());
  for (std::uint64_t label = 1; label <= c.label_count(); ++label)
    reports.push_back(split_report(c, BipartiteSplit{c.n_parties, label}));
  return reports;
}

std::uint64_t count_distillable_splits(const GhzDiagonalCoefficients& c) {
  const double bound = delta(c) - kCriterionSlack;
  std::uint64_t count = 0;
  for (const double l : c.lambdas)
    if (2.0 * l < bound) ++count;
  return count;
}

double pigeonhole_bound(int n_parties) {
  require_family_n(n_parties);
  const double splits = std::pow(2.0, n_parties - 1) - 1.0;
  return splits * std::pow(2.0, -(n_parties - 1) / 2.0);
}

LemmaWitness lemma_witness(const ComplexMatrix& rho, double beta) {
  const int n = n_parties_of_dim(rho.dim());
  if (n < 3) throw parameter_error("lemma witness needs n >= 3");

  LemmaWitness w;
  w.bell = bell_report_xy(rho, beta);
  // Absorbing beta by local phase redefinition aligns rho with the
  // phase-free GHZ basis; split distillability is invariant under it.
  const ComplexMatrix aligned = (beta == 0.0) ? rho : ghz_phase_conjugate(rho, -beta);
  w.coefficients = extract_coefficients(aligned);
  w.splits = scan_splits(w.coefficients);
  w.applicable = w.bell.violates;
  for (const auto& r : w.splits)
    if (r.distillable) w.distillable_labels.push_back(r.split.label);

  if (w.applicable && w.distillable_labels.empty())
    throw contract_error(
        "violating state produced no distillable split; this contradicts the "
        "pigeonhole bound and indicates a defect");
  return w;
}

LemmaWitness lemma_witness(const ComplexMatrix& rho) {
  return lemma_witness(rho, beta_phase(n_parties_of_dim(rho.dim())));
}

}  // namespace bellkit
