#pragma once

#include <cstdint>
#include <vector>

#include "rflip/generator.hpp"
#include "rflip/instance.hpp"
#include "rflip/rng.hpp"

namespace rflip::test {

// n=3, linear (2, -1, 3), q12=-4, q13=1, q23=-2. Unique 1-flip local optimum
// (1,0,1) with f=6, which is also the global maximum.
inline QuboInstance tiny3() {
  return QuboInstance(3, {2, -1, 3}, {{0, 1, -4}, {0, 2, 1}, {1, 2, -2}}, "tiny3");
}

// n=2, linear (-1, -1), q12=3. (0,0) is 1-flip locally optimal with f=0; the
// pair flip {0,1} reaches the global maximum f=1.
inline QuboInstance tiny2b() {
  return QuboInstance(2, {-1, -1}, {{0, 1, 3}}, "tiny2b");
}

inline QuboInstance random_instance(SplitMix64& rng, int n, double density,
                                    std::int64_t lo = -100, std::int64_t hi = 100) {
  GeneratorSpec spec;
  spec.n = n;
  spec.density = density;
  spec.coeff_lo = lo;
  spec.coeff_hi = hi;
  spec.seed = rng.next();
  return generate_instance(spec);
}

inline std::vector<std::uint8_t> random_assignment(SplitMix64& rng, int n) {
  std::vector<std::uint8_t> x(n);
  for (auto& b : x) b = rng.next_bool() ? 1 : 0;
  return x;
}

}  // namespace rflip::test
