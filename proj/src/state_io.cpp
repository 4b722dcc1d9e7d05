#include "bellkit/state_io.hpp"

#include <cmath>
#include <cstdio>
#include <fstream>
#include <sstream>

#include "bellkit/eigen_solver.hpp"

namespace bellkit {

namespace {

nlohmann::json complex_to_json(const cdouble& z) {
  return nlohmann::json::array({z.real(), z.imag()});
}

cdouble complex_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number())
    throw io_error("complex entries must be [re, im] number pairs");
  return {j[0].get<double>(), j[1].get<double>()};
}

int checked_n_parties(const nlohmann::json& j) {
  if (!j.contains("n_parties") || !j["n_parties"].is_number_integer())
    throw io_error("state file: missing integer n_parties");
  const int n = j["n_parties"].get<int>();
  if (n < 1 || n > 30) throw io_error("state file: n_parties out of range");
  return n;
}

void validate_density(const ComplexMatrix& rho, bool validate_psd) {
  if (hermiticity_defect(rho) > 1e-12)
    throw contract_error("dense state is not Hermitian within 1e-12");
  if (std::abs(trace(rho).real() - 1.0) > 1e-12 || std::abs(trace(rho).imag()) > 1e-12)
    throw contract_error("dense state trace differs from 1 by more than 1e-12");
  if (validate_psd && min_eigenvalue(rho) < -1e-9)
    throw contract_error("dense state has an eigenvalue below -1e-9");
}

}  // namespace

std::string_view to_string(StateKind kind) {
  switch (kind) {
    case StateKind::dense: return "dense";
    case StateKind::pure: return "pure";
    case StateKind::ghz_diagonal: return "ghz-diagonal";
  }
  throw parameter_error("unknown state kind");
}

StateKind state_kind_from_string(std::string_view s) {
  if (s == "dense") return StateKind::dense;
  if (s == "pure") return StateKind::pure;
  if (s == "ghz-diagonal") return StateKind::ghz_diagonal;
  throw io_error("unknown state kind '" + std::string(s) + "'");
}

StateFile make_dense_state(ComplexMatrix rho) {
  StateFile s;
  s.kind = StateKind::dense;
  s.n_parties = n_parties_of_dim(rho.dim());
  s.payload = std::move(rho);
  return s;
}

StateFile make_pure_state(PureState psi) {
  validate_pure_state(psi);
  StateFile s;
  s.kind = StateKind::pure;
  s.n_parties = psi.n_parties;
  s.payload = std::move(psi);
  return s;
}

StateFile make_ghz_diagonal_state(GhzDiagonalCoefficients c) {
  StateFile s;
  s.kind = StateKind::ghz_diagonal;
  s.n_parties = c.n_parties;
  s.payload = std::move(c);
  return s;
}

nlohmann::json state_to_json(const StateFile& state) {
  nlohmann::json j;
  j["format_version"] = state.format_version;
  j["kind"] = to_string(state.kind);
  j["n_parties"] = state.n_parties;
  switch (state.kind) {
    case StateKind::dense: {
      const auto& rho = state.dense();
      nlohmann::json rows = nlohmann::json::array();
      for (std::size_t r = 0; r < rho.dim(); ++r) {
        nlohmann::json row = nlohmann::json::array();
        for (std::size_t c = 0; c < rho.dim(); ++c) row.push_back(complex_to_json(rho(r, c)));
        rows.push_back(std::move(row));
      }
      j["payload"] = std::move(rows);
      break;
    }
    case StateKind::pure: {
      nlohmann::json amps = nlohmann::json::array();
      for (const auto& a : state.pure().amplitudes) amps.push_back(complex_to_json(a));
      j["payload"] = std::move(amps);
      break;
    }
    case StateKind::ghz_diagonal: {
      const auto& c = state.coefficients();
      j["payload"] = {{"lambda0_plus", c.lambda0_plus},
                      {"lambda0_minus", c.lambda0_minus},
                      {"lambdas", c.lambdas}};
      break;
    }
  }
  return j;
}

StateFile state_from_json(const nlohmann::json& j, bool validate_psd) {
  if (!j.is_object()) throw io_error("state file: top level must be an object");
  if (!j.contains("format_version") || !j["format_version"].is_number_integer())
    throw io_error("state file: missing integer format_version");
  if (j["format_version"].get<int>() != kStateFormatVersion)
    throw io_error("state file: unsupported format_version");
  if (!j.contains("kind") || !j["kind"].is_string())
    throw io_error("state file: missing kind");
  if (!j.contains("payload")) throw io_error("state file: missing payload");

  StateFile s;
  s.kind = state_kind_from_string(j["kind"].get<std::string>());
  s.n_parties = checked_n_parties(j);
  const auto& payload = j["payload"];
  const std::size_t dim = std::size_t{1} << s.n_parties;

  switch (s.kind) {
    case StateKind::dense: {
      if (s.n_parties > 14) throw io_error("dense state exceeds the dense cap");
      if (!payload.is_array() || payload.size() != dim)
        throw io_error("dense payload must have 2^N rows");
      ComplexMatrix rho(dim);
      for (std::size_t r = 0; r < dim; ++r) {
        const auto& row = payload[r];
        if (!row.is_array() || row.size() != dim)
          throw io_error("dense payload rows must have 2^N entries");
        for (std::size_t c = 0; c < dim; ++c) rho(r, c) = complex_from_json(row[c]);
      }
      validate_density(rho, validate_psd);
      s.payload = std::move(rho);
      break;
    }
    case StateKind::pure: {
      if (!payload.is_array() || payload.size() != dim)
        throw io_error("pure payload must have 2^N amplitudes");
      PureState psi{s.n_parties, std::vector<cdouble>(dim)};
      for (std::size_t i = 0; i < dim; ++i) psi.amplitudes[i] = complex_from_json(payload[i]);
      validate_pure_state(psi);
      s.payload = std::move(psi);
      break;
    }
    case StateKind::ghz_diagonal: {
      if (!payload.is_object() || !payload.contains("lambda0_plus") ||
          !payload.contains("lambda0_minus") || !payload.contains("lambdas") ||
          !payload["lambdas"].is_array())
        throw io_error("ghz-diagonal payload must carry lambda0_plus, lambda0_minus, lambdas");
      std::vector<double> lambdas;
      lambdas.reserve(payload["lambdas"].size());
      for (const auto& v : payload["lambdas"]) {
        if (!v.is_number()) throw io_error("lambdas must be numbers");
        lambdas.push_back(v.get<double>());
      }
      s.payload = make_coefficients(s.n_parties, payload["lambda0_plus"].get<double>(),
                                    payload["lambda0_minus"].get<double>(),
                                    std::move(lambdas));
      break;
    }
  }
  return s;
}

StateFile load_state_file(const std::filesystem::path& path, bool validate_psd) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open state file " + path.string());
  nlohmann::json j;
  try {
    in >> j;
  } catch (const nlohmann::json::exception& e) {
    throw io_error("state file " + path.string() + " is not valid JSON: " + e.what());
  }
  return state_from_json(j, validate_psd);
}

void save_state_file(const StateFile& state, const std::filesystem::path& path) {
  const std::string body = state_to_json(state).dump();
  const std::filesystem::path tmp = path.string() + ".tmp";
  {
    std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
    if (!out) throw io_error("cannot write " + tmp.string());
    out << body << '\n';
    out.flush();
    if (!out) {
      std::remove(tmp.c_str());
      throw io_error("short write to " + tmp.string());
    }
  }
  std::error_code ec;
  std::filesystem::rename(tmp, path, ec);
  if (ec) {
    std::remove(tmp.c_str());
    throw io_error("cannot rename " + tmp.string() + " to " + path.string());
  }
}

std::string fnv1a_hex(std::string_view bytes) {
  std::uint64_t h = 0xcbf29ce484222325ULL;
  for (const unsigned char c : bytes) {
    h ^= c;
    h *= 0x100000001b3ULL;
  }
  char buf[32];
  std::snprintf(buf, sizeof buf, "fnv1a64:%016llx", static_cast<unsigned long long>(h));
  return buf;
}

std::string read_file_bytes(const std::filesystem::path& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw io_error("cannot open " + path.string());
  std::ostringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

}  // namespace bellkit
