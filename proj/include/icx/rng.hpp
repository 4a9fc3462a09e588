#pragma once

#include <cstdint>

namespace icx {

// splitmix64: the state advances by the golden-gamma constant and the
// output is a finalizing mix of it. Used wherever reproducible streams
// are needed (simulation, randomized sweeps).
class SplitMix64 {
public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9E3779B97F4A7C15ULL);
    z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
    z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
    return z ^ (z >> 31);
  }

  // Uniform-ish draw in [0, n) by modulo reduction; n must be positive.
  std::uint64_t next_below(std::uint64_t n) { return next() % n; }

private:
  std::uint64_t state_;
};

}  // namespace icx
