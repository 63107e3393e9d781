#pragma once

#include <cstdint>

namespace sgb {

// splitmix64: the fixed PRNG behind every seeded fixture in this project.
// Chosen over std engines so that identical seeds give identical streams on
// every platform and standard library.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // uniform in [0, bound); bound > 0
  std::uint64_t below(std::uint64_t bound) { return next() % bound; }

  // uniform in [1, bound)
  std::uint64_t nonzero_below(std::uint64_t bound) {
    return 1 + next() % (bound - 1);
  }

 private:
  std::uint64_t state_;
};

}  // namespace sgb
