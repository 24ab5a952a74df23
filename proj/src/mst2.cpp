#include "rflip/mst2.hpp"

#include <chrono>
#include <stdexcept>

#include "rflip/local_search.hpp"
#include "tabu_engine.hpp"

namespace rflip {

SearchResult mst2_run(const QuboInstance& inst, const Mst2Config& config) {
  if (config.initial_iters_factor <= 0 || config.subsequent_iters_factor <= 0) {
    throw std::invalid_argument("iteration factors must be positive");
  }
  if (!(config.time_limit_s > 0.0)) throw std::invalid_argument("time limit must be positive");
  if (config.tenure < 0) throw std::invalid_argument("tenure must be nonnegative");

  const int n = inst.num_vars();
  const double eps = inst.improvement_epsilon();
  const auto t0 = std::chrono::steady_clock::now();
  const auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  SplitMix64 rng(config.seed);
  SearchResult res;
  res.seed = config.seed;

  SolutionState state = SolutionState::random(inst, rng);
  detail::TabuEngine engine(state, config.tenure);

  const auto update_best = [&](const SolutionState& s) {
    if (s.objective() > res.best_f) {
      res.best_f = s.objective();
      res.best_x = s.assignment();
      res.time_to_best_s = elapsed();
    }
  };
  const auto target_hit = [&] {
    return config.target_objective && res.best_f >= *config.target_objective;
  };

  for (;;) {
    ++res.restarts;
    if (res.restarts > 1) {
      std::vector<std::uint8_t> x(n);
      for (auto& b : x) b = rng.next_bool() ? 1 : 0;
      state.reassign(std::move(x));
    }
    update_best(state);
    if (target_hit()) break;

    const long long iters =
        (res.restarts == 1 ? config.initial_iters_factor : config.subsequent_iters_factor) *
        static_cast<long long>(n);
    engine.reset();
    bool stop = false;
    for (long long it = 0; it < iters; ++it) {
      const int mv = engine.select(res.best_f, eps);
      ++res.tabu_iterations;
      if (mv < 0) {
        engine.tick();
        continue;
      }
      engine.apply(mv);
      ++res.flips;
      if (state.objective() > res.best_f + eps) {
        // An improvement inside the tabu phase triggers an immediate 1-flip
        // polish before the phase resumes.
        LocalSearchResult polish = alg1_one_flip(std::move(state));
        res.flips += polish.flips;
        state = std::move(polish.state);
        engine.sync_signs();
        update_best(state);
        if (target_hit()) {
          stop = true;
          break;
        }
      }
    }
    if (stop) break;
    // CPU limit is consulted at phase ends only; a short limit can be
    // overshot by up to one full phase.
    if (elapsed() >= config.time_limit_s) break;
    if (config.max_starts > 0 && res.restarts >= config.max_starts) break;
  }

  res.total_time_s = elapsed();
  return res;
}

}  // namespace rflip
