// Seeded PRNG for reproducible stochastic runs. SplitMix64 core: the output
// sequence is fully specified by the seed and identical on every platform,
// unlike std::uniform_real_distribution.
#pragma once

#include <cstdint>

namespace uavcov {

class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ull);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1), 53-bit resolution.
  double uniform() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  double uniform(double lo, double hi) { return lo + uniform() * (hi - lo); }

  /// Decorrelated child seed, e.g. one per restart or worker.
  static std::uint64_t derive(std::uint64_t seed, std::uint64_t stream) {
    SplitMix64 mix(seed ^ (0x6A09E667F3BCC909ull + stream * 0x9E3779B97F4A7C15ull));
    return mix.next();
  }

 private:
  std::uint64_t state_;
};

}  // namespace uavcov
