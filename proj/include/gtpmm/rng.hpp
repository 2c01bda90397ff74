#pragma once

#include <cstdint>

namespace gtpmm {

// SplitMix64. Every draw in the library goes through this generator so that
// results are reproducible across platforms and standard libraries:
//
//   state += 0x9E3779B97F4A7C15
//   z = state
//   z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9
//   z = (z ^ (z >> 27)) * 0x94D049BB133111EB
//   return z ^ (z >> 31)
//
// uniform(n) rejects draws at or above the largest multiple of n below 2^64,
// then returns draw % n. unit() returns (draw >> 11) * 2^-53.
class SplitMix64 {
 public:
  explicit constexpr SplitMix64(std::uint64_t seed) : state_(seed) {}

  constexpr std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform integer in [0, n). n must be > 0.
  constexpr std::uint64_t uniform(std::uint64_t n) {
    const std::uint64_t limit = UINT64_MAX - (UINT64_MAX % n);
    std::uint64_t x = next();
    while (x >= limit) x = next();
    return x % n;
  }

  double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

 private:
  std::uint64_t state_;
};

// Derives an independent stream seed from a base seed and a salt.
constexpr std::uint64_t mix_seed(std::uint64_t base, std::uint64_t salt) {
  SplitMix64 g(base ^ (salt * 0xD1B54A32D192ED03ULL));
  g.next();
  return g.next();
}

}  // namespace gtpmm
