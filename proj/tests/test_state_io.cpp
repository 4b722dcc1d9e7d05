#include <doctest.h>

#include <filesystem>
#include <fstream>

#include "bellkit/state_io.hpp"
#include "bellkit/states.hpp"

using namespace bellkit;
namespace fs = std::filesystem;

namespace {

fs::path temp_file(const std::string& name) {
  const auto dir = fs::temp_directory_path() / "bellkit-io-tests";
  fs::create_directories(dir);
  return dir / name;
}

}  // namespace

TEST_SUITE_BEGIN("state_io");

TEST_CASE("dense round trip is bit-exact") {
  const auto state = make_dense_state(random_density_matrix(3, 7));
  const auto path = temp_file("dense.json");
  save_state_file(state, path);
  const auto first = read_file_bytes(path);

  const auto loaded = load_state_file(path);
  CHECK(loaded.kind == StateKind::dense);
  CHECK(loaded.n_parties == 3);
  CHECK(loaded.dense() == state.dense());

  save_state_file(loaded, path);
  CHECK(read_file_bytes(path) == first);
}

TEST_CASE("pure round trip is bit-exact") {
  const auto state = make_pure_state(ghz(4, PhaseSpec::radians(0.37)));
  const auto path = temp_file("pure.json");
  save_state_file(state, path);
  const auto first = read_file_bytes(path);
  const auto loaded = load_state_file(path);
  CHECK(loaded.pure().amplitudes == state.pure().amplitudes);
  save_state_file(loaded, path);
  CHECK(read_file_bytes(path) == first);
}

TEST_CASE("ghz-diagonal round trip is bit-exact") {
  const auto state = make_ghz_diagonal_state(random_ghz_diagonal(6, 3, 0.2));
  const auto path = temp_file("coeffs.json");
  save_state_file(state, path);
  const auto first = read_file_bytes(path);
  const auto loaded = load_state_file(path);
  CHECK(loaded.coefficients().lambdas == state.coefficients().lambdas);
  CHECK(loaded.coefficients().lambda0_plus == state.coefficients().lambda0_plus);
  save_state_file(loaded, path);
  CHECK(read_file_bytes(path) == first);
}

TEST_CASE("schema violations are io errors") {
  CHECK_THROWS_AS(state_from_json(nlohmann::json::array()), io_error);
  CHECK_THROWS_AS(state_from_json({{"format_version", 2},
                                   {"kind", "pure"},
                                   {"n_parties", 1},
                                   {"payload", {{1.0, 0.0}, {0.0, 0.0}}}}),
                  io_error);
  CHECK_THROWS_AS(state_from_json({{"format_version", 1},
                                   {"kind", "mystery"},
                                   {"n_parties", 1},
                                   {"payload", nlohmann::json::array()}}),
                  io_error);
  // wrong amplitude count
  CHECK_THROWS_AS(state_from_json({{"format_version", 1},
                                   {"kind", "pure"},
                                   {"n_parties", 2},
                                   {"payload", {{1.0, 0.0}, {0.0, 0.0}}}}),
                  io_error);
}

TEST_CASE("numeric invariant violations are contract errors") {
  // pure state with norm 1/2
  CHECK_THROWS_AS(state_from_json({{"format_version", 1},
                                   {"kind", "pure"},
                                   {"n_parties", 1},
                                   {"payload", {{0.5, 0.0}, {0.0, 0.0}}}}),
                  contract_error);

  // dense with trace 1 but a negative eigenvalue
  nlohmann::json dense = {{"format_version", 1},
                          {"kind", "dense"},
                          {"n_parties", 1},
                          {"payload",
                           {{{1.5, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}, {-0.5, 0.0}}}}};
  CHECK_THROWS_AS(state_from_json(dense), contract_error);
  CHECK_NOTHROW(state_from_json(dense, /*validate_psd=*/false));

  // dense with trace away from 1
  nlohmann::json bad_trace = {{"format_version", 1},
                              {"kind", "dense"},
                              {"n_parties", 1},
                              {"payload",
                               {{{0.9, 0.0}, {0.0, 0.0}}, {{0.0, 0.0}, {0.2, 0.0}}}}};
  CHECK_THROWS_AS(state_from_json(bad_trace), contract_error);

  // ghz-diagonal with a clearly negative coefficient
  nlohmann::json neg = {{"format_version", 1},
                        {"kind", "ghz-diagonal"},
                        {"n_parties", 2},
                        {"payload",
                         {{"lambda0_plus", 1.2}, {"lambda0_minus", -0.2}, {"lambdas", {0.0}}}}};
  CHECK_THROWS_AS(state_from_json(neg), contract_error);
}

TEST_CASE("atomic save never leaves a partial file") {
  const auto path = temp_file("atomic.json");
  save_state_file(make_pure_state(ghz(2, PhaseSpec::radians(0.0))), path);
  CHECK(fs::exists(path));
  CHECK_FALSE(fs::exists(path.string() + ".tmp"));
}

TEST_CASE("digest is stable") {
  CHECK(fnv1a_hex("") == "fnv1a64:cbf29ce484222325");
  CHECK(fnv1a_hex("bellkit") == fnv1a_hex("bellkit"));
  CHECK(fnv1a_hex("a") != fnv1a_hex("b"));
}

TEST_SUITE_END();
