#pragma once

#include <cstdint>

namespace stylochron {

/// SplitMix64: tiny, fast, and identical on every platform. Used everywhere a
/// reproducible stream is needed; std::mt19937 would work but its distribution
/// adapters are implementation-defined, which would break byte-identical runs
/// across standard libraries.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform integer in [0, n). Rejection sampling keeps it unbiased.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t threshold = n == 0 ? 0 : (0 - n) % n;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % n;
    }
  }

  /// Uniform double in [0, 1) with 53 bits of precision.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

/// Stream seed for run `run` derived from the user seed. Golden-ratio stride
/// keeps the streams decorrelated.
inline std::uint64_t stream_seed(std::uint64_t seed, std::uint64_t run) {
  return seed ^ (0x9E3779B97F4A7C15ull * (run + 1));
}

}  // namespace stylochron
