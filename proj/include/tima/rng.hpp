#pragma once

#include <cstdint>
#include <random>

namespace tima {

/// Seeded random source with a platform-independent output sequence.
///
/// std::mt19937_64 itself is fully specified by the standard, but the
/// std::*_distribution adaptors are not, so the draw helpers here map raw
/// engine output to the requested range by hand. Every random decision in
/// the library flows through this type, which is what makes runs with the
/// same seed bit-identical everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform double in [0, 1).
  double unit() { return static_cast<double>(engine_() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, n). Requires n > 0.
  std::uint32_t below(std::uint32_t n) {
    return static_cast<std::uint32_t>(unit() * static_cast<double>(n));
  }

  std::uint64_t raw() { return engine_(); }

 private:
  std::mt19937_64 engine_;
};

}  // namespace tima
