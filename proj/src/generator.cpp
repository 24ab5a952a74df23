#include "rflip/generator.hpp"

#include <cstdio>
#include <stdexcept>
#include <vector>

#include "rflip/rng.hpp"

namespace rflip {

QuboInstance generate_instance(const GeneratorSpec& spec) {
  if (spec.n < 1) throw std::invalid_argument("generator: n must be >= 1");
  if (!(spec.density > 0.0) || spec.density > 1.0) {
    throw std::invalid_argument("generator: density must be in (0, 1]");
  }
  if (spec.coeff_lo > spec.coeff_hi) {
    throw std::invalid_argument("generator: coeff_lo must be <= coeff_hi");
  }
  if (spec.rng != "splitmix64") {
    throw std::invalid_argument("generator: unknown rng '" + spec.rng + "'");
  }

  SplitMix64 rng(spec.seed);

  std::vector<double> linear(spec.n);
  for (int i = 0; i < spec.n; ++i) {
    linear[i] = static_cast<double>(rng.next_int(spec.coeff_lo, spec.coeff_hi));
  }

  std::vector<Entry> pairs;
  if (spec.n >= 2) {
    pairs.reserve(static_cast<std::size_t>(
        spec.density * spec.n * (spec.n - 1) / 2.0 * 1.05) + 16);
    for (int i = 0; i < spec.n; ++i) {
      for (int j = i + 1; j < spec.n; ++j) {
        if (rng.next_double() < spec.density) {
          const auto v = rng.next_int(spec.coeff_lo, spec.coeff_hi);
          if (v != 0) pairs.push_back({i, j, static_cast<double>(v)});
        }
      }
    }
  }

  std::string name = spec.name;
  if (name.empty()) {
    char buf[96];
    std::snprintf(buf, sizeof(buf), "gen_n%d_d%.2f_s%llu", spec.n, spec.density,
                  static_cast<unsigned long long>(spec.seed));
    name = buf;
  }
  return QuboInstance(spec.n, std::move(linear), std::move(pairs), std::move(name));
}

}  // namespace rflip
