#pragma once

#include <cstdint>
#include <limits>
#include <vector>

#include "rflip/solution.hpp"

namespace rflip {

/// Outcome of a time-limited search run.
struct SearchResult {
  std::vector<std::uint8_t> best_x;
  double best_f = -std::numeric_limits<double>::infinity();
  double time_to_best_s = 0.0;
  double total_time_s = 0.0;
  long long restarts = 0;         ///< starts / perturbation rounds
  long long flips = 0;            ///< all applied moves, local search included
  long long tabu_iterations = 0;  ///< applied tabu moves only
  std::uint64_t seed = 0;
};

/// Per-variable tabu stamps against a global iteration counter. The
/// configured tenure is clamped to n-1 so that some admissible move always
/// exists even on instances smaller than the tenure.
class TabuList {
 public:
  TabuList(int n, long long tenure)
      : tenure_(std::min<long long>(tenure, n > 1 ? n - 1 : 0)),
        tabu_until_(n, 0) {}

  bool is_tabu(int i, long long iter) const { return tabu_until_[i] > iter; }
  void mark(int i, long long iter) { tabu_until_[i] = iter + tenure_; }
  void reset() { std::fill(tabu_until_.begin(), tabu_until_.end(), 0); }
  long long tenure() const { return tenure_; }

 private:
  long long tenure_;
  std::vector<long long> tabu_until_;
};

/// Steepest admissible 1-flip under tabu rules: the best gain over variables
/// that are not tabu, or that aspire by strictly beating best_f. Ties go to
/// the lowest index; returns -1 when nothing is admissible.
int select_tabu_move(const SolutionState& state, const TabuList& tabu, long long iter,
                     double best_f, double eps);

}  // namespace rflip
