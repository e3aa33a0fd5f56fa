#pragma once

#include <cstdint>

namespace mcuforge {

/// Counter-friendly PRNG (splitmix64). Used everywhere randomness is needed so
/// that results are bit-reproducible across platforms and thread counts:
/// per-trajectory streams are derived from (seed, counter), never from
/// scheduling order.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform double in [0, 1) with 53 random bits.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  /// Uniform integer in [0, 4).
  std::uint32_t next_two_bits() { return static_cast<std::uint32_t>(next() >> 62); }

 private:
  std::uint64_t state_;
};

/// Deterministic stream derivation: hash a seed with one or more counters.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t a, std::uint64_t b = 0) {
  SplitMix64 g(seed ^ (a * 0xd1342543de82ef95ull) ^ (b * 0xaf251af3b0f025b5ull));
  g.next();
  return g.next();
}

}  // namespace mcuforge
