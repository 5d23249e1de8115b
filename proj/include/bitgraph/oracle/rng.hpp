#pragma once

#include <cstdint>

namespace bitgraph::oracle {

/// SplitMix64: the 64-bit mixing generator used by every graph generator.
/// The exact algorithm is fixed so any implementation, in any language,
/// reproduces identical graphs from a seed:
///   state += 0x9E3779B97F4A7C15
///   z = state; z ^= z >> 30; z *= 0xBF58476D1CE4E5B9
///   z ^= z >> 27; z *= 0x94D049BB133111EB; z ^= z >> 31; return z
/// Bounded draws use plain modulo: next_below(b) = next() % b.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    state_ += 0x9E3779B97F4A7C15ULL;
    uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  uint64_t next_below(uint64_t bound) { return next() % bound; }

 private:
  uint64_t state_;
};

}  // namespace bitgraph::oracle
