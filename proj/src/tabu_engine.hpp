#pragma once

// Internal hot path shared by the tabu phases of alg5 and the MST2-style
// baseline. Move selection is split into a vectorizable masked max-reduction
// over candidate gains followed by a first-index rescan, which keeps the
// per-iteration cost close to the memory bandwidth of the derivative update
// itself. Behavior is identical to select_tabu_move (same admissibility rule,
// same lowest-index tie-breaking); a unit test pins the equivalence.

#include <cstdint>
#include <vector>

#include "rflip/search.hpp"
#include "rflip/solution.hpp"

namespace rflip::detail {

class TabuEngine {
 public:
  TabuEngine(SolutionState& state, long long tenure)
      : state_(&state),
        tenure_(std::min<long long>(tenure, state.num_vars() > 1 ? state.num_vars() - 1 : 0)),
        tabu_until_(state.num_vars(), 0),
        sign_(state.num_vars()) {
    sync_signs();
  }

  // Re-reads the assignment after the caller changed the state externally
  // (local search polish, restart) and clears the tabu stamps.
  void reset() {
    std::fill(tabu_until_.begin(), tabu_until_.end(), 0);
    iter_ = 0;
    sync_signs();
  }
  void sync_signs() {
    const auto& x = state_->assignment();
    for (int i = 0; i < state_->num_vars(); ++i) sign_[i] = 1.0 - 2.0 * x[i];
  }

  long long iter() const { return iter_; }
  bool is_tabu(int i) const { return tabu_until_[i] > iter_; }

  // Advances the clock without a move (nothing admissible this iteration).
  void tick() { ++iter_; }

  // Steepest admissible 1-flip: best gain over variables that are not tabu
  // or that aspire by strictly improving best_f. Returns the chosen variable
  // without applying it, or -1 when nothing is admissible.
  int select(double best_f, double eps) const {
    const int n = state_->num_vars();
    const double* e = state_->derivatives().data();
    const double* sgn = sign_.data();
    const long long* until = tabu_until_.data();
    const long long it = iter_;
    const double thresh = best_f - state_->objective() + eps;

    // Chunked max-reduction so the winning index is recovered by rescanning
    // one chunk instead of the whole array.
    constexpr int kChunk = 256;
    double best = kNegInf;
    int best_chunk = -1;
    for (int base = 0; base < n; base += kChunk) {
      const int end = std::min(n, base + kChunk);
      double chunk_best = kNegInf;
#pragma omp simd reduction(max : chunk_best)
      for (int j = base; j < end; ++j) {
        const double cand = sgn[j] * e[j];
        const double masked = ((until[j] <= it) | (cand > thresh)) ? cand : kNegInf;
        chunk_best = masked > chunk_best ? masked : chunk_best;
      }
      if (chunk_best > best) {
        best = chunk_best;
        best_chunk = base;
      }
    }
    if (best == kNegInf) return -1;
    const int end = std::min(n, best_chunk + kChunk);
    for (int j = best_chunk; j < end; ++j) {
      const double cand = sgn[j] * e[j];
      if (cand == best && ((until[j] <= it) || cand > thresh)) return j;
    }
    return -1;  // unreachable
  }

  // Applies variable i as a tabu move: flip, advance the clock, stamp.
  void apply(int i) {
    state_->apply_one_flip(i);
    sign_[i] = -sign_[i];
    ++iter_;
    tabu_until_[i] = iter_ + tenure_;
  }

  // Marks an additional variable of a compound move (2-flip partner).
  void apply_partner(int i) {
    sign_[i] = -sign_[i];
    tabu_until_[i] = iter_ + tenure_;
  }

 private:
  static constexpr double kNegInf = -1e300;

  SolutionState* state_;
  long long tenure_;
  long long iter_ = 0;
  std::vector<long long> tabu_until_;
  std::vector<double> sign_;
};

}  // namespace rflip::detail
