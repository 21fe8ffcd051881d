#pragma once

#include <cstdint>

namespace cyclespec {

/// splitmix64: tiny, fast, full-period 64-bit generator.  Used everywhere a
/// reproducible stream is needed; parallel replica streams are derived by
/// seeding one instance per replica via mix_seed below.
struct SplitMix64 {
  std::uint64_t state = 0;

  explicit SplitMix64(std::uint64_t seed) : state(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  /// Uniform in (0, 1]: ((x >> 11) + 1) * 2^-53.  Never returns 0, so it is
  /// safe inside logarithms.
  double next_double() {
    return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
  }

  /// Uniform in [lo, hi).
  double next_in(double lo, double hi) {
    return lo + (hi - lo) * static_cast<double>(next() >> 11) * 0x1.0p-53;
  }
};

/// Stream seed for substream `index` of `master`: one extra splitmix64
/// scramble keeps distinct (master, index) pairs statistically independent.
inline std::uint64_t mix_seed(std::uint64_t master, std::uint64_t index) {
  SplitMix64 m(master ^ (0xA0761D6478BD642FULL + index));
  std::uint64_t s = m.next();
  return s ^ master;
}

}  // namespace cyclespec
