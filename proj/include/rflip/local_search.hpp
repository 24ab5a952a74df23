#pragma once

#include <cstdint>
#include <vector>

#include "rflip/solution.hpp"

namespace rflip {

/// Candidate-pruning data computed at a 1-flip local optimum.
///
/// phi is the maximum stored pair coefficient and bound_m = phi * C(r, 2)
/// caps the pair-interaction gain any r-flip can collect. Variables are
/// ordered by increasing |E| (ties by index); prefix[k] is the sum of the k
/// smallest |E| values and k_max the largest k with prefix[k] < bound_m.
/// The prefix set {order[0..k_max)} is the D(n) candidate pool: any improving
/// r-flip must have its |E| sum under bound_m, so nothing outside a sum that
/// small can participate via this route.
struct PruningContext {
  double phi = 0.0;
  double bound_m = 0.0;
  std::vector<int> order;      ///< permutation of all indices, |E| ascending
  std::vector<double> prefix;  ///< prefix[k] = sum of the k smallest |E|, prefix[0] = 0
  int k_max = 0;

  /// D(n): the first k_max indices of the ordering.
  std::vector<int> candidates() const {
    return {order.begin(), order.begin() + k_max};
  }
};

struct LocalSearchResult {
  SolutionState state;
  long long flips = 0;   ///< accepted moves (a set flip counts once)
  long long passes = 0;  ///< completed sweeps / scan rounds
  bool improved = false;
};

struct RflipOptions {
  int r_max = 2;
  /// Cap on delta evaluations per pruning round: budget_factor * |candidates|.
  long long budget_factor = 50;
};

/// M = phi * C(r, 2) with phi the maximum stored pair coefficient.
double compute_M(const QuboInstance& inst, int r);

/// D(1): indices with |E_i| < m (strict). Every member of an improving
/// r-flip at a 1-flip local optimum lands in here.
std::vector<int> build_D1(const SolutionState& state, double m);

/// D(n) construction: |E|-ascending order, prefix sums, and the largest k
/// whose prefix stays under m.
PruningContext build_Dn(const SolutionState& state, double m);

/// The nested prefix family {order[0..2)}, {order[0..3)}, ..., {order[0..K)};
/// empty when k_max < 2.
std::vector<FlipSet> candidate_prefix_sets(const PruningContext& ctx);

/// At a 1-flip local optimum, true iff sum_{i in S} |E_i| is strictly less
/// than the pair-interaction term of s — which is exactly delta(s) > 0 there.
/// If the state is not locally optimal the check falls back to evaluating
/// delta_set_flip directly.
bool improving_rflip_certificate(const SolutionState& state, const FlipSet& s);

/// Sequential 1-flip descent: sweeps variables in index order, taking every
/// strictly improving flip, until a full sweep accepts nothing. The result is
/// 1-flip locally optimal.
LocalSearchResult alg1_one_flip(SolutionState state);

/// Exhaustive r-flip descent: scans all C(n, r) subsets in lexicographic
/// order, applies the first improving one, and restarts the scan; stops when
/// no subset improves. Small-n / oracle use only.
LocalSearchResult alg2_exhaustive_rflip(SolutionState state, int r);

/// Strategy 1: 1-flip descent to local optimality, then for r = 2..r_max a
/// scan of the D(n) prefix sets and of size-<=r subsets of D(n) under the
/// evaluation budget; each accepted set restarts the 1-flip descent.
LocalSearchResult alg3_strategy1(SolutionState state, const RflipOptions& opts = {});

/// Strategy 2: like alg3 but candidates come from D(1); pairs are seeded in
/// |E|-ascending order and grown one index at a time while the sum bound
/// sum |E| < M(|S|) still holds.
LocalSearchResult alg4_strategy2(SolutionState state, const RflipOptions& opts = {});

}  // namespace rflip
