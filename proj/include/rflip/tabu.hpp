#pragma once

#include <cstdint>
#include <optional>
#include <span>

#include "rflip/search.hpp"

namespace rflip {

/// Configuration for the hybrid r-flip / tabu search (alg5).
struct SearchConfig {
  int r = 2;               ///< flip order: 1 runs plain 1-flip local search,
                           ///< 2 adds the D(1)-guided pair machinery
  double time_limit_s = 10.0;
  std::uint64_t seed = 0;
  long long tenure = 100;
  double destruction_fraction = 0.25;
  double rand_change_p = 0.1;
  long long budget_factor = 50;      ///< candidate evaluations per pruning round
  long long tabu_phase_factor = 20;  ///< phase ends after factor*n non-improving moves
  long long max_restarts = 0;        ///< 0 = run until the time limit
  std::optional<double> target_objective;  ///< stop as soon as best reaches this
};

/// Hybrid search: seeded random start, r-flip local search (aborted early
/// when its 1-flip optimum is already below the incumbent), a tabu phase
/// with tenure and aspiration, then Destruction/Construction or randChange
/// perturbation of the incumbent — until the time limit, which is checked
/// before each tabu phase. Deterministic given the seed and restart count.
SearchResult alg5_hybrid(const QuboInstance& inst, const SearchConfig& config);

/// Marks ceil(fraction * n) distinct variables chosen uniformly at random
/// and unassigns them (sets them to 0, the neutral value for derivatives).
/// Returns the marked indices in ascending order.
std::vector<int> destruction(SolutionState& state, double fraction, SplitMix64& rng);

/// Greedily reassigns the marked variables in ascending index order: each one
/// takes value 1 iff its derivative under the current partial assignment is
/// strictly positive, with derivatives updated incrementally as it goes.
void construction(SolutionState& state, std::span<const int> marked);

/// Toggles every variable independently with probability p.
void rand_change(SolutionState& state, double p, SplitMix64& rng);

}  // namespace rflip
