#pragma once

#include <cmath>
#include <cstdint>
#include <numbers>
#include <random>

namespace kaar {

/// Reproducible random source. The engine is std::mt19937_64, whose output
/// sequence is fixed by the C++ standard. The distributions are written out
/// here instead of using <random>'s, whose algorithms vary between standard
/// libraries:
///   uniform: top 53 bits of one draw, times 2^-53, in [0, 1)
///   normal:  Box-Muller, sqrt(-2 ln(1-u1)) cos(2 pi u2), two draws per value
///   sign:    top bit of one draw, 1 -> +1, 0 -> -1
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t bits() { return engine_(); }
  double uniform() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }
  double uniform(double lo, double hi) { return lo + (hi - lo) * uniform(); }
  double normal() {
    const double u1 = 1.0 - uniform();
    const double u2 = uniform();
    return std::sqrt(-2.0 * std::log(u1)) * std::cos(2.0 * std::numbers::pi * u2);
  }
  int sign() { return (engine_() >> 63) != 0 ? 1 : -1; }

 private:
  std::mt19937_64 engine_;
};

}  // namespace kaar
