#pragma once

#include <array>
#include <cmath>
#include <complex>
#include <cstdint>
#include <numbers>
#include <random>

namespace bellkit {

/// Deterministic random stream: std::mt19937_64 (fully specified by the
/// standard) with explicit output mappings, so a given 64-bit seed yields
/// the same draws on every platform.
///   uniform01: (x >> 11) * 2^-53, in [0, 1)
///   normal:    Box-Muller on one fresh uniform pair
class SeededRng {
 public:
  explicit SeededRng(std::uint64_t seed) : gen_(seed) {}

  double uniform01() { return static_cast<double>(gen_() >> 11) * 0x1.0p-53; }

  // Box-Muller; consumes two uniforms, returns (r cos t, r sin t).
  std::complex<double> normal_pair() {
    const double u1 = static_cast<double>((gen_() >> 11) + 1) * 0x1.0p-53;  // (0, 1]
    const double u2 = uniform01();
    const double r = std::sqrt(-2.0 * std::log(u1));
    const double t = 2.0 * std::numbers::pi * u2;
    return {r * std::cos(t), r * std::sin(t)};
  }

  double normal() {
    if (have_spare_) {
      have_spare_ = false;
      return spare_;
    }
    const auto z = normal_pair();
    spare_ = z.imag();
    have_spare_ = true;
    return z.real();
  }

  std::array<double, 3> unit_vector3() {
    for (;;) {
      const double x = normal(), y = normal(), z = normal();
      const double n = std::sqrt(x * x + y * y + z * z);
      if (n > 1e-6) return {x / n, y / n, z / n};
    }
  }

  std::uint64_t raw() { return gen_(); }

 private:
  std::mt19937_64 gen_;
  bool have_spare_ = false;
  double spare_ = 0.0;
};

}  // namespace bellkit
