#pragma once

#include <cstdint>
#include <random>

namespace matcode {

inline std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9E3779B97F4A7C15ull;
  x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ull;
  x = (x ^ (x >> 27)) * 0x94D049BB133111EBull;
  return x ^ (x >> 31);
}

// Deterministic RNG with platform-independent output (mt19937_64 is fully
// specified; std::uniform_int_distribution is not, so draws go through an
// explicit rejection loop). Substreams keep trials independent of each other
// and of trial ordering.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  static Rng substream(std::uint64_t seed, std::uint64_t stream) {
    return Rng(splitmix64(seed ^ splitmix64(stream + 0x51ED2701)));
  }

  std::uint64_t next() { return engine_(); }

  // Unbiased draw in [0, bound); bound must be positive.
  std::uint64_t below(std::uint64_t bound) {
    const std::uint64_t limit = (0 - bound) % bound;  // 2^64 mod bound
    for (;;) {
      std::uint64_t x = engine_();
      if (x >= limit) return x % bound;
    }
  }

  std::uint32_t below32(std::uint32_t bound) {
    return static_cast<std::uint32_t>(below(bound));
  }

 private:
  std::mt19937_64 engine_;
};

}  // namespace matcode
