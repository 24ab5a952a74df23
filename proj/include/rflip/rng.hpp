#pragma once

#include <cstdint>

namespace rflip {

// splitmix64: the fixed, seedable, splittable generator used everywhere the
// library needs reproducible randomness (instance generation, random starts,
// perturbations). The draw sequence for a given seed is part of the on-disk
// reproducibility contract, so the implementation must not change.
class SplitMix64 {
 public:
  explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

  std::uint64_t next() {
    std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
    return z ^ (z >> 31);
  }

  // Uniform in [0, 1) with 53 bits of precision.
  double next_double() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }

  // Unbiased uniform in [0, bound) by rejection. bound must be >= 1.
  std::uint64_t next_below(std::uint64_t bound) {
    const std::uint64_t threshold = (0ULL - bound) % bound;
    for (;;) {
      const std::uint64_t r = next();
      if (r >= threshold) return r % bound;
    }
  }

  // Uniform integer in [lo, hi], inclusive.
  std::int64_t next_int(std::int64_t lo, std::int64_t hi) {
    const std::uint64_t span =
        static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1ULL;
    return static_cast<std::int64_t>(static_cast<std::uint64_t>(lo) + next_below(span));
  }

  bool next_bool() { return (next() >> 63) != 0; }

  // Derives an independent child stream.
  SplitMix64 split() { return SplitMix64(next()); }

 private:
  std::uint64_t state_;
};

// Stable seed derivation for experiment cells keyed by (base, a, b).
inline std::uint64_t derive_seed(std::uint64_t base, std::uint64_t a, std::uint64_t b) {
  SplitMix64 g(base);
  std::uint64_t s = g.next() ^ (a * 0x9e3779b97f4a7c15ULL);
  SplitMix64 h(s);
  return h.next() ^ (b * 0xc2b2ae3d27d4eb4fULL);
}

}  // namespace rflip
