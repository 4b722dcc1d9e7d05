#pragma once

#include <filesystem>
#include <string>
#include <string_view>
#include <variant>

#include <json.hpp>

#include "bellkit/complex_matrix.hpp"
#include "bellkit/ghz_family.hpp"
#include "bellkit/pure_state.hpp"

namespace bellkit {

// Read/parse failures and schema violations; distinct from numeric
// contract violations so the CLI can map them to different exit codes.
class io_error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

inline constexpr int kStateFormatVersion = 1;

enum class StateKind { dense, pure, ghz_diagonal };

std::string_view to_string(StateKind kind);
StateKind state_kind_from_string(std::string_view s);

/// On-disk state container, format_version 1. Payloads:
///   dense:        2^N x 2^N rows of [re, im] pairs, row-major,
///                 party 1 most significant; carries a density matrix
///   pure:         2^N [re, im] amplitudes
///   ghz-diagonal: {lambda0_plus, lambda0_minus, lambdas[2^{N-1}-1]}
struct StateFile {
  int format_version = kStateFormatVersion;
  StateKind kind = StateKind::dense;
  int n_parties = 0;
  std::variant<ComplexMatrix, PureState, GhzDiagonalCoefficients> payload;

  const ComplexMatrix& dense() const { return std::get<ComplexMatrix>(payload); }
  const PureState& pure() const { return std::get<PureState>(payload); }
  const GhzDiagonalCoefficients& coefficients() const {
    return std::get<GhzDiagonalCoefficients>(payload);
  }
};

StateFile make_dense_state(ComplexMatrix rho);
StateFile make_pure_state(PureState psi);
StateFile make_ghz_diagonal_state(GhzDiagonalCoefficients c);

nlohmann::json state_to_json(const StateFile& state);

/// Decodes and validates the declared invariants of the payload type.
/// Schema violations throw io_error; numeric invariant violations
/// (norm, trace, Hermiticity, negative spectrum) throw contract_error.
/// validate_psd controls the eigensolver-backed positivity check on
/// dense payloads (min eigenvalue >= -1e-9).
StateFile state_from_json(const nlohmann::json& j, bool validate_psd = true);

StateFile load_state_file(const std::filesystem::path& path, bool validate_psd = true);

/// Serializes and atomically replaces path (temp file + rename), so a
/// failed write never leaves a partial file behind.
void save_state_file(const StateFile& state, const std::filesystem::path& path);

/// FNV-1a 64-bit digest, "fnv1a64:" + 16 hex digits.
std::string fnv1a_hex(std::string_view bytes);

std::string read_file_bytes(const std::filesystem::path& path);

}  // namespace bellkit
