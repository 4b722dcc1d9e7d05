// Command-line front end: state generation, Bell evaluation, PPT scans,
// coefficient/split reports and lemma campaigns. JSON on stdout,
// diagnostics on stderr.
//
// Exit codes: 0 success, 1 usage/parameter/file error, 2 numeric-contract
// violation, 3 lemma counterexample.

#include <chrono>
#include <cmath>
#include <cstdint>
#include <filesystem>
#include <iostream>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "bellkit/bell.hpp"
#include "bellkit/eigen_solver.hpp"
#include "bellkit/ghz_family.hpp"
#include "bellkit/parallel.hpp"
#include "bellkit/state_io.hpp"
#include "bellkit/states.hpp"

using nlohmann::json;
using namespace bellkit;

namespace {

constexpr int kGenDenseCap = 12;       // dur / random generation
constexpr int kGenStructuredCap = 20;  // pure ghz / coefficient families
constexpr int kEigenCap = 10;          // eigensolver-backed commands
constexpr double kPptTolerance = 1e-9;

struct Clock {
  std::chrono::steady_clock::time_point start = std::chrono::steady_clock::now();
  double ms() const {
    return std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
        .count();
  }
};

std::vector<std::string> g_command_echo;

void emit_report(const std::string& digest, json result, json tolerances,
                 std::optional<std::uint64_t> seed, const Clock& clock) {
  json report;
  report["command"] = g_command_echo;
  report["input_digest"] = digest;
  report["result"] = std::move(result);
  report["tolerances"] = std::move(tolerances);
  if (seed) report["seed"] = *seed;
  report["wall_time_ms"] = clock.ms();
  std::cout << report.dump(2) << "\n";
}

void check_cap(int n, int default_cap, int max_n, const std::string& what) {
  const int cap = std::max(default_cap, max_n);
  if (n > cap)
    throw parameter_error(what + " is capped at N = " + std::to_string(cap) +
                          "; raise it with --max-n if you accept the cost (N = " +
                          std::to_string(n) + " requested)");
  if (n > default_cap) {
    const double mib = 16.0 * std::pow(4.0, n) / (1024.0 * 1024.0);
    std::cerr << "warning: N = " << n << " exceeds the default cap " << default_cap
              << "; a dense matrix of this size takes about " << static_cast<int>(mib)
              << " MiB and eigendecompositions scale as O(8^N)\n";
  }
}

PhaseSpec parse_phase(const std::string& text) {
  if (text == "matched") return PhaseSpec::matched();
  std::size_t used = 0;
  double value = 0.0;
  try {
    value = std::stod(text, &used);
  } catch (const std::exception&) {
    throw parameter_error("phase must be 'matched' or a number in radians");
  }
  if (used != text.size())
    throw parameter_error("phase must be 'matched' or a number in radians");
  return PhaseSpec::radians(value);
}

// ---------------------------------------------------------------------------
// gen

struct GenArgs {
  std::string kind;
  int n = 0;
  std::string phase = "matched";
  std::uint64_t seed = 1;
  double delta_floor = 0.0;
  std::string out;
  int max_n = 0;
};

int run_gen(const GenArgs& a) {
  Clock clock;
  StateFile state;
  if (a.kind == "ghz") {
    check_cap(a.n, kGenStructuredCap, a.max_n, "pure-state generation");
    state = make_pure_state(ghz(a.n, parse_phase(a.phase)));
  } else if (a.kind == "dur") {
    check_cap(a.n, kGenDenseCap, a.max_n, "dense-state generation");
    state = make_dense_state(dur_state(a.n, parse_phase(a.phase)));
  } else if (a.kind == "random") {
    check_cap(a.n, kGenDenseCap, a.max_n, "dense-state generation");
    state = make_dense_state(random_density_matrix(a.n, a.seed));
  } else if (a.kind == "random-ghz-diagonal") {
    check_cap(a.n, kGenStructuredCap, a.max_n, "coefficient-family generation");
    state = make_ghz_diagonal_state(random_ghz_diagonal(a.n, a.seed, a.delta_floor));
  } else {
    throw parameter_error("unknown state kind '" + a.kind + "'");
  }

  save_state_file(state, a.out);
  const std::string bytes = read_file_bytes(a.out);

  json result;
  result["written"] = a.out;
  result["kind"] = std::string(to_string(state.kind));
  result["n_parties"] = state.n_parties;
  result["phase"] = a.phase;
  result["file_bytes"] = bytes.size();
  result["file_digest"] = fnv1a_hex(bytes);
  if (a.kind == "random-ghz-diagonal") result["delta_floor"] = a.delta_floor;

  const std::string param_digest =
      fnv1a_hex("gen:" + a.kind + ":n=" + std::to_string(a.n) + ":phase=" + a.phase +
                ":seed=" + std::to_string(a.seed) +
                ":delta_floor=" + std::to_string(a.delta_floor));
  const bool seeded = a.kind == "random" || a.kind == "random-ghz-diagonal";
  emit_report(param_digest, std::move(result), json::object(),
              seeded ? std::optional<std::uint64_t>(a.seed) : std::nullopt, clock);
  return 0;
}

// ---------------------------------------------------------------------------
// bell

struct BellArgs {
  std::string state_path;
  bool xy = false;
  std::optional<double> beta;
  std::string settings_path;
  bool expect_violation = false;
  int max_n = 0;
};

MeasurementSettings load_settings(const std::filesystem::path& path, int n_expected) {
  json j;
  try {
    j = json::parse(read_file_bytes(path));
  } catch (const json::exception& e) {
    throw io_error("settings file is not valid JSON: " + std::string(e.what()));
  }
  if (!j.is_object() || !j.contains("parties") || !j["parties"].is_array())
    throw io_error("settings file must carry a parties array");
  MeasurementSettings s;
  for (const auto& p : j["parties"]) {
    if (!p.contains("a") || !p.contains("a_prime") || !p["a"].is_array() ||
        !p["a_prime"].is_array() || p["a"].size() != 3 || p["a_prime"].size() != 3)
      throw io_error("each party needs unit 3-vectors 'a' and 'a_prime'");
    PartyAxes axes;
    for (int k = 0; k < 3; ++k) {
      axes.a[k] = p["a"][k].get<double>();
      axes.a_prime[k] = p["a_prime"][k].get<double>();
    }
    s.parties.push_back(axes);
  }
  if (s.n_parties() != n_expected)
    throw parameter_error("settings file has " + std::to_string(s.n_parties()) +
                          " parties, state has " + std::to_string(n_expected));
  validate_settings(s);
  return s;
}

int run_bell(const BellArgs& a) {
  Clock clock;
  const std::string bytes = read_file_bytes(a.state_path);
  const StateFile state = state_from_json(json::parse(bytes));

  json result;
  result["n_parties"] = state.n_parties;
  BellReport report;

  if (state.kind == StateKind::ghz_diagonal) {
    if (!a.settings_path.empty())
      throw parameter_error(
          "custom settings need a dense or pure state; ghz-diagonal inputs support the x/y "
          "operator only");
    // The family's only coherence is the (0, 2^N-1) corner, so the value of
    // the phase-beta operator is 2^{(N-1)/2} * delta * cos(beta). Default
    // beta = 0: the operator aligned with the family's own basis.
    const double beta = a.beta.value_or(0.0);
    const auto& c = state.coefficients();
    report = bell_report(c);
    report.value *= std::cos(beta);
    report.violates = report.value > report.classical_bound + kViolationSlack;
    result["operator"] = "xy";
    result["beta"] = beta;
    result["delta"] = delta(c);
  } else {
    check_cap(state.n_parties, kGenDenseCap, a.max_n,
              "dense Bell evaluation (use a ghz-diagonal state for larger N)");
    const ComplexMatrix rho =
        state.kind == StateKind::dense ? state.dense() : density_matrix(state.pure());
    if (!a.settings_path.empty()) {
      const auto settings = load_settings(a.settings_path, state.n_parties);
      report = bell_report(rho, settings);
      result["operator"] = "custom";
      result["settings_file"] = a.settings_path;
    } else {
      const double beta = a.beta.value_or(beta_phase(state.n_parties));
      report = bell_report_xy(rho, beta);
      result["operator"] = "xy";
      result["beta"] = beta;
    }
  }

  result["value"] = report.value;
  result["classical_bound"] = report.classical_bound;
  result["quantum_max"] = report.quantum_max;
  result["violates"] = report.violates;

  emit_report(fnv1a_hex(bytes), std::move(result), {{"violation_slack", kViolationSlack}},
              std::nullopt, clock);
  if (a.expect_violation && !report.violates) return 1;
  return 0;
}

// ---------------------------------------------------------------------------
// ppt

struct PptArgs {
  std::string state_path;
  std::string split_bits;
  std::string scan = "single";
  int max_n = 0;
};

PartySubset transpose_subset(const BipartiteSplit& split) {
  const auto groups = split_groups(split);
  std::uint32_t mask = 0;
  for (const int party : groups.second) mask |= std::uint32_t{1} << (party - 1);
  return make_party_subset(split.n_parties, mask);
}

int run_ppt(const PptArgs& a) {
  Clock clock;
  const std::string bytes = read_file_bytes(a.state_path);
  const StateFile state = state_from_json(json::parse(bytes));
  const int n = state.n_parties;
  check_cap(n, kEigenCap, a.max_n, "partial-transpose eigendecomposition");

  ComplexMatrix rho;
  switch (state.kind) {
    case StateKind::dense: rho = state.dense(); break;
    case StateKind::pure: rho = density_matrix(state.pure()); break;
    case StateKind::ghz_diagonal: rho = ghz_diagonal_density(state.coefficients()); break;
  }

  struct Cut {
    json row;
    PartySubset subset;
  };
  std::vector<Cut> cuts;
  std::string mode;

  if (!a.split_bits.empty()) {
    mode = "split";
    const auto split = parse_split_bits(n, a.split_bits);
    const auto groups = split_groups(split);
    Cut cut;
    cut.subset = transpose_subset(split);
    cut.row["label"] = split.label;
    cut.row["bits"] = split_bits(split);
    cut.row["group_with_last"] = groups.first;
    cut.row["other_group"] = groups.second;
    cuts.push_back(std::move(cut));
  } else if (a.scan == "single") {
    mode = "single-cuts";
    for (int party = 1; party <= n; ++party) {
      Cut cut;
      cut.subset = single_party(n, party);
      cut.row["party"] = party;
      cuts.push_back(std::move(cut));
    }
  } else if (a.scan == "all") {
    mode = "all-splits";
    for (const auto& split : enumerate_splits(n)) {
      const auto groups = split_groups(split);
      Cut cut;
      cut.subset = transpose_subset(split);
      cut.row["label"] = split.label;
      cut.row["bits"] = split_bits(split);
      cut.row["group_with_last"] = groups.first;
      cut.row["other_group"] = groups.second;
      cuts.push_back(std::move(cut));
    }
  } else {
    throw parameter_error("--scan must be 'single' or 'all'");
  }

  // Independent eigenproblems; rows keep label order no matter who
  // finishes first.
  std::vector<double> min_eigs(cuts.size());
  parallel_for_index(cuts.size(), [&](std::size_t i) {
    min_eigs[i] = min_eigenvalue(partial_transpose(rho, cuts[i].subset));
  });

  bool all_ppt = true;
  json rows = json::array();
  for (std::size_t i = 0; i < cuts.size(); ++i) {
    json row = std::move(cuts[i].row);
    row["min_eigenvalue"] = min_eigs[i];
    const bool ppt = min_eigs[i] >= -kPptTolerance;
    row["ppt"] = ppt;
    all_ppt = all_ppt && ppt;
    rows.push_back(std::move(row));
  }

  json result;
  result["n_parties"] = n;
  result["mode"] = mode;
  result["cuts"] = std::move(rows);
  result["all_ppt"] = all_ppt;

  emit_report(fnv1a_hex(bytes), std::move(result), {{"ppt_tolerance", kPptTolerance}},
              std::nullopt, clock);
  return 0;
}

// ---------------------------------------------------------------------------
// coeffs / splits

int run_coeffs(const std::string& state_path, bool with_distillability) {
  Clock clock;
  const std::string bytes = read_file_bytes(state_path);
  const StateFile state = state_from_json(json::parse(bytes));

  GhzDiagonalCoefficients c;
  switch (state.kind) {
    case StateKind::dense: c = extract_coefficients(state.dense()); break;
    case StateKind::pure: c = extract_coefficients(state.pure()); break;
    case StateKind::ghz_diagonal: c = state.coefficients(); break;
  }

  json result;
  result["n_parties"] = c.n_parties;
  result["lambda0_plus"] = c.lambda0_plus;
  result["lambda0_minus"] = c.lambda0_minus;
  result["delta"] = delta(c);
  result["threshold"] = violation_threshold(c.n_parties);
  result["violates_threshold"] = violates_threshold(c);

  json table = json::array();
  std::uint64_t distillable_count = 0;
  for (const auto& r : scan_splits(c)) {
    json row;
    row["label"] = r.split.label;
    row["bits"] = split_bits(r.split);
    row["lambda"] = c.lambda(r.split.label);
    row["two_lambda"] = r.two_lambda_j;
    row["group_with_last"] = r.group_with_last;
    row["other_group"] = r.other_group;
    if (with_distillability) {
      row["distillable"] = r.distillable;
      if (r.distillable) ++distillable_count;
    }
    table.push_back(std::move(row));
  }
  result["table"] = std::move(table);
  if (with_distillability) result["distillable_count"] = distillable_count;

  emit_report(fnv1a_hex(bytes), std::move(result), {{"criterion_slack", kCriterionSlack}},
              std::nullopt, clock);
  return 0;
}

// ---------------------------------------------------------------------------
// lemma

struct LemmaArgs {
  int n = 0;
  std::uint64_t trials = 1000;
  std::uint64_t seed = 1;
  std::string delta_floor = "auto";
};

int run_lemma(const LemmaArgs& a) {
  Clock clock;
  if (a.n < 3)
    throw parameter_error(
        "lemma campaigns need --n >= 3: at N = 2 the pigeonhole bound "
        "(2^{N-1}-1)/2^{(N-1)/2} stays below 1 and the split-scan argument has no force");
  if (a.trials < 1) throw parameter_error("--trials must be at least 1");

  const double threshold = violation_threshold(a.n);
  double floor = 0.0;
  if (a.delta_floor == "auto") {
    floor = threshold + 1e-6;
  } else {
    try {
      floor = std::stod(a.delta_floor);
    } catch (const std::exception&) {
      throw parameter_error("--delta-floor must be 'auto' or a number");
    }
    if (!(floor > threshold + kCriterionSlack))
      throw parameter_error("--delta-floor must exceed the violation threshold " +
                            std::to_string(threshold) + " so that every sample violates");
    if (floor > 1.0) throw parameter_error("--delta-floor cannot exceed 1");
  }

  std::uint64_t counterexamples = 0;
  std::vector<std::uint64_t> counterexample_seeds;
  std::map<std::uint64_t, std::uint64_t> histogram;
  std::uint64_t min_witnesses = UINT64_MAX, max_witnesses = 0;

  for (std::uint64_t t = 0; t < a.trials; ++t) {
    const std::uint64_t trial_seed = a.seed + t;
    const auto c = random_ghz_diagonal(a.n, trial_seed, floor);
    if (!violates_threshold(c))
      throw contract_error("sampler produced a non-violating family at the requested floor");
    const std::uint64_t witnesses = count_distillable_splits(c);
    ++histogram[witnesses];
    min_witnesses = std::min(min_witnesses, witnesses);
    max_witnesses = std::max(max_witnesses, witnesses);
    if (witnesses == 0) {
      ++counterexamples;
      if (counterexample_seeds.size() < 16) counterexample_seeds.push_back(trial_seed);
    }
  }

  json hist = json::array();
  for (const auto& [witnesses, count] : histogram)
    hist.push_back(json::array({witnesses, count}));

  json result;
  result["n_parties"] = a.n;
  result["trials"] = a.trials;
  result["delta_floor"] = floor;
  result["threshold"] = threshold;
  result["splits_per_family"] = (std::uint64_t{1} << (a.n - 1)) - 1;
  result["counterexamples"] = counterexamples;
  result["counterexample_seeds"] = counterexample_seeds;
  result["witnessed_splits"] = {{"min", min_witnesses},
                                {"max", max_witnesses},
                                {"histogram", std::move(hist)}};

  const std::string param_digest =
      fnv1a_hex("lemma:n=" + std::to_string(a.n) + ":trials=" + std::to_string(a.trials) +
                ":seed=" + std::to_string(a.seed) + ":floor=" + std::to_string(floor));
  emit_report(param_digest, std::move(result), {{"criterion_slack", kCriterionSlack}},
              a.seed, clock);
  return counterexamples == 0 ? 0 : 3;
}

}  // namespace

int main(int argc, char** argv) {
  for (int i = 1; i < argc; ++i) g_command_echo.emplace_back(argv[i]);

  CLI::App app{
      "bellkit: multiqubit Bell operators, GHZ-diagonal states, partial-transpose "
      "tests and per-split distillability witnesses"};
  app.require_subcommand(1);

  GenArgs gen;
  auto* gen_cmd = app.add_subcommand("gen", "Generate a state file");
  gen_cmd->add_option("kind", gen.kind, "ghz | dur | random | random-ghz-diagonal")
      ->required()
      ->check(CLI::IsMember({"ghz", "dur", "random", "random-ghz-diagonal"}));
  gen_cmd->add_option("--n", gen.n, "number of parties")->required();
  gen_cmd->add_option("--phase", gen.phase, "'matched' or radians (ghz, dur)");
  gen_cmd->add_option("--seed", gen.seed, "64-bit seed (random kinds)");
  gen_cmd->add_option("--delta-floor", gen.delta_floor,
                      "minimum delta (random-ghz-diagonal)");
  gen_cmd->add_option("-o,--out", gen.out, "output path")->required();
  gen_cmd->add_option("--max-n", gen.max_n, "raise the generation cap");

  BellArgs bell;
  auto* bell_cmd = app.add_subcommand("bell", "Evaluate the Bell operator on a state");
  bell_cmd->add_option("state", bell.state_path, "state file")->required();
  bell_cmd->add_flag("--xy", bell.xy, "use the x/y operator (default)");
  double beta_opt = 0.0;
  auto* beta_flag = bell_cmd->add_option("--beta", beta_opt, "x/y operator phase override");
  bell_cmd->add_option("--settings", bell.settings_path,
                       "JSON file of per-party unit-vector pairs");
  bell_cmd->add_flag("--expect-violation", bell.expect_violation,
                     "exit nonzero unless the state violates the classical bound");
  bell_cmd->add_option("--max-n", bell.max_n, "raise the dense cap");

  PptArgs ppt;
  auto* ppt_cmd = app.add_subcommand("ppt", "Partial-transpose spectrum per cut");
  ppt_cmd->add_option("state", ppt.state_path, "state file")->required();
  auto* split_opt = ppt_cmd->add_option("--split", ppt.split_bits,
                                        "one bipartite split as an (N-1)-bit string");
  ppt_cmd->add_option("--scan", ppt.scan, "single (the N one-party cuts) | all")
      ->excludes(split_opt);
  ppt_cmd->add_option("--max-n", ppt.max_n, "raise the eigensolver cap");

  std::string coeffs_path;
  auto* coeffs_cmd =
      app.add_subcommand("coeffs", "GHZ-diagonal coefficients of a state");
  coeffs_cmd->add_option("state", coeffs_path, "state file")->required();

  std::string splits_path;
  auto* splits_cmd = app.add_subcommand(
      "splits", "Coefficients plus the per-split distillability table");
  splits_cmd->add_option("state", splits_path, "state file")->required();

  LemmaArgs lemma;
  auto* lemma_cmd = app.add_subcommand(
      "lemma", "Random violating families; verify a distillable split always exists");
  lemma_cmd->add_option("--n", lemma.n, "number of parties (>= 3)")->required();
  lemma_cmd->add_option("--trials", lemma.trials, "number of sampled families");
  lemma_cmd->add_option("--seed", lemma.seed, "base seed; trial t uses seed + t");
  lemma_cmd->add_option("--delta-floor", lemma.delta_floor,
                        "'auto' (threshold + 1e-6) or an explicit floor");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 1;
  }

  try {
    if (*gen_cmd) return run_gen(gen);
    if (*bell_cmd) {
      if (beta_flag->count() > 0) bell.beta = beta_opt;
      return run_bell(bell);
    }
    if (*ppt_cmd) return run_ppt(ppt);
    if (*coeffs_cmd) return run_coeffs(coeffs_path, false);
    if (*splits_cmd) return run_coeffs(splits_path, true);
    if (*lemma_cmd) return run_lemma(lemma);
  } catch (const contract_error& e) {
    std::cerr << "numeric contract violation: " << e.what() << "\n";
    return 2;
  } catch (const io_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const parameter_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const dimension_error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 0;
}
