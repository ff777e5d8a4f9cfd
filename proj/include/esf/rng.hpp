#pragma once

#include <cstdint>
#include <random>

namespace esf {

// SplitMix64 mixing step.
constexpr std::uint64_t splitmix64(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31);
}

// Derives an independent substream seed from a base seed and up to three
// stream tags (grid index, replication index, redraw attempt, ...). No
// sequential generator state is ever shared between substreams, which is
// what makes serial and parallel runs produce identical draws.
constexpr std::uint64_t derive_seed(std::uint64_t base, std::uint64_t tag0,
                                    std::uint64_t tag1 = 0,
                                    std::uint64_t tag2 = 0) {
  std::uint64_t h = splitmix64(base ^ 0x8f1bbcdcbfa53e0bULL);
  h = splitmix64(h ^ splitmix64(tag0 ^ 0x2545f4914f6cdd1dULL));
  h = splitmix64(h ^ splitmix64(tag1 ^ 0xd1342543de82ef95ULL));
  h = splitmix64(h ^ splitmix64(tag2 ^ 0x9e3779b97f4a7c15ULL));
  return h;
}

using Rng = std::mt19937_64;

inline Rng make_rng(std::uint64_t seed) { return Rng{seed}; }

}  // namespace esf
