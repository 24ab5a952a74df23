#include "rflip/search.hpp"

namespace rflip {

int select_tabu_move(const SolutionState& state, const TabuList& tabu, long long iter,
                     double best_f, double eps) {
  const int n = state.num_vars();
  const auto& x = state.assignment();
  const auto& e = state.derivatives();
  const double f = state.objective();

  int best_idx = -1;
  double best_gain = 0.0;
  for (int i = 0; i < n; ++i) {
    const double gain = (1.0 - 2.0 * x[i]) * e[i];
    if (tabu.is_tabu(i, iter) && !(f + gain > best_f + eps)) continue;
    if (best_idx == -1 || gain > best_gain) {
      best_idx = i;
      best_gain = gain;
    }
  }
  return best_idx;
}

}  // namespace rflip
