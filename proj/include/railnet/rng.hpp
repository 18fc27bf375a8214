#pragma once

#include <cstdint>

namespace railnet {

// Counter-friendly splitmix64 generator. Substreams are derived by hashing
// (seed, key) pairs, so replaying any (seed, sample, step) tuple is exact
// regardless of evaluation order.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    state_ += 0x9e3779b97f4a7c15ull;
    std::uint64_t z = state_;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
  }

  // Uniform in [0, bound). Rejection keeps it exactly uniform.
  std::uint64_t below(std::uint64_t bound) {
    if (bound <= 1) return 0;
    const std::uint64_t limit = ~0ull - (~0ull % bound);
    std::uint64_t v = next();
    while (v >= limit) v = next();
    return v % bound;
  }

  static std::uint64_t derive(std::uint64_t seed, std::uint64_t key) {
    Rng r(seed ^ (key * 0xd1b54a32d192ed03ull + 0x8cb92ba72f3d8dd7ull));
    return r.next();
  }

private:
  std::uint64_t state_;
};

}  // namespace railnet
