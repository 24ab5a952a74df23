#pragma once

#include <cstdint>
#include <optional>

#include "rflip/search.hpp"

namespace rflip {

/// Multistart tabu baseline in the MST2 style: a long steepest-descent tabu
/// phase per random start (25000*n candidate-move iterations on the first
/// start, 10000*n afterwards), an immediate 1-flip polish whenever a phase
/// move improves the incumbent, and a time check at phase ends only — a
/// short limit can therefore be overshot by up to one full phase.
struct Mst2Config {
  long long initial_iters_factor = 25000;
  long long subsequent_iters_factor = 10000;
  long long tenure = 100;
  double time_limit_s = 60.0;
  std::uint64_t seed = 0;
  long long max_starts = 0;  ///< 0 = run until the time limit
  std::optional<double> target_objective;
};

SearchResult mst2_run(const QuboInstance& inst, const Mst2Config& config);

}  // namespace rflip
