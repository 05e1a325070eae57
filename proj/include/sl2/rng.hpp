#pragma once

#include <cstdint>
#include <vector>

namespace sl2 {

/// Deterministic, language-independent PRNG: splitmix64 (Steele, Lea, Flood 2014).
/// Every random draw in the project comes from one of these, seeded explicitly,
/// so identical seeds give identical sample streams on any platform.
class Rng {
 public:
  explicit Rng(uint64_t seed) : state_(seed) {}

  uint64_t next_u64() {
    state_ += 0x9e3779b97f4a7c15ull;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  /// Uniform draw in [0, n) via the 128-bit multiply-shift reduction
  /// (Lemire 2019, without the rejection step; bias is below 2^-64).
  uint64_t below(uint64_t n) {
    return static_cast<uint64_t>((static_cast<unsigned __int128>(next_u64()) * n) >> 64);
  }

  /// k distinct values from [0, n), by partial Fisher-Yates on a scratch
  /// index array. No rejection, deterministic order of draws.
  std::vector<uint32_t> distinct(uint32_t n, uint32_t k);

  double unit_double() { return static_cast<double>(next_u64() >> 11) * 0x1.0p-53; }

 private:
  uint64_t state_;
};

}  // namespace sl2
