#pragma once

#include <cstdint>
#include <string>

#include "rflip/instance.hpp"

namespace rflip {

/// Parameters for the random benchmark generator. The same spec always
/// produces the same instance, on any platform: coefficients come from a
/// fixed splitmix64 stream in a fixed order (all linear terms first, then
/// pair decisions row-major).
struct GeneratorSpec {
  int n = 0;
  double density = 1.0;  ///< pair inclusion probability, in (0, 1]
  std::int64_t coeff_lo = -100;
  std::int64_t coeff_hi = 100;
  std::uint64_t seed = 0;
  std::string rng = "splitmix64";
  std::string name;  ///< defaults to gen_n<n>_d<density>_s<seed>
};

/// Each pair i < j is included independently with probability `density`;
/// included pairs and all linear terms draw a uniform integer in
/// [coeff_lo, coeff_hi]. A pair that draws 0 is stored as absent.
QuboInstance generate_instance(const GeneratorSpec& spec);

}  // namespace rflip
