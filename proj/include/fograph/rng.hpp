#pragma once

#include <cstdint>

namespace fograph {

// Counter-based splittable generator (splitmix64 core). Every randomized
// operation takes an explicit 64-bit seed; there is no global RNG.
class SplitMix64 {
 public:
  explicit SplitMix64(uint64_t seed) : state_(seed) {}

  uint64_t next() {
    uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // One draw per call, true with probability p.
  bool bernoulli(double p) {
    if (p <= 0.0) return false;
    if (p >= 1.0) return true;
    return next() < static_cast<uint64_t>(p * 18446744073709551616.0);
  }

  // Uniform in [0, n). Modulo bias is irrelevant at the scales used here.
  uint64_t below(uint64_t n) { return next() % n; }

 private:
  uint64_t state_;
};

// Independent stream for subtask i of a seeded experiment.
inline uint64_t split_seed(uint64_t seed, uint64_t i) {
  SplitMix64 g(seed ^ (0x9e3779b97f4a7c15ull * (i + 1)));
  return g.next();
}

}  // namespace fograph
