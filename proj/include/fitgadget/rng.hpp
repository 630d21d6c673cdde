#pragma once

#include <cstdint>

namespace fitgadget {

// splitmix64; used instead of <random> so sampled runs are reproducible
// bit-for-bit regardless of the standard library in use.
struct DetRng {
  uint64_t state;

  explicit DetRng(uint64_t seed) : state(seed) {}

  uint64_t next() {
    uint64_t z = (state += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform-ish in [0, n); modulo bias is irrelevant at test scale
  uint64_t below(uint64_t n) { return n == 0 ? 0 : next() % n; }
};

inline constexpr uint64_t kDefaultSeed = 0xF177;

}  // namespace fitgadget
