#include "rflip/tabu.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <numeric>
#include <stdexcept>
#include <cstdlib>

#include "rflip/local_search.hpp"
#include "tabu_engine.hpp"

namespace rflip {

std::vector<int> destruction(SolutionState& state, double fraction, SplitMix64& rng) {
  if (!(fraction > 0.0) || fraction > 1.0) {
    throw std::invalid_argument("destruction fraction must be in (0, 1]");
  }
  const int n = state.num_vars();
  const int k = std::min(n, static_cast<int>(std::ceil(fraction * n)));

  std::vector<int> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  for (int t = 0; t < k; ++t) {
    const int swap_at = t + static_cast<int>(rng.next_below(n - t));
    std::swap(perm[t], perm[swap_at]);
  }
  std::vector<int> marked(perm.begin(), perm.begin() + k);
  std::sort(marked.begin(), marked.end());

  // Unassigned variables read as 0, the value that contributes nothing to
  // any derivative.
  for (int i : marked) {
    if (state.assignment()[i]) state.apply_one_flip(i);
  }
  return marked;
}

void construction(SolutionState& state, std::span<const int> marked) {
  const double eps = state.instance().improvement_epsilon();
  for (int i : marked) {
    if (state.assignment()[i]) state.apply_one_flip(i);
  }
  for (int i : marked) {
    if (state.deriv(i) > eps) state.apply_one_flip(i);
  }
}

void rand_change(SolutionState& state, double p, SplitMix64& rng) {
  if (p < 0.0 || p > 1.0) throw std::invalid_argument("toggle probability must be in [0, 1]");
  const int n = state.num_vars();
  for (int i = 0; i < n; ++i) {
    if (rng.next_double() < p) state.apply_one_flip(i);
  }
}

namespace {

struct PairMove {
  int a = -1;
  int b = -1;
  double gain = 0.0;
};

// Best admissible 2-flip among D(1) pairs whose |E| sum stays under M(2),
// scanned in |E|-ascending order up to the evaluation budget. This is the
// Strategy-2 candidate set reused as a tabu neighborhood.
PairMove find_pair_move(const SolutionState& s, const detail::TabuEngine& tabu,
                        double best_f, long long budget_factor) {
  const QuboInstance& inst = s.instance();
  const double eps = inst.improvement_epsilon();
  const double m2 = compute_M(inst, 2);
  PairMove best;
  if (m2 <= 0.0) return best;
  std::vector<int> d1 = build_D1(s, m2);
  if (d1.size() < 2) return best;
  std::sort(d1.begin(), d1.end(), [&](int a, int b) {
    const double ea = std::abs(s.deriv(a));
    const double eb = std::abs(s.deriv(b));
    return ea != eb ? ea < eb : a < b;
  });

  const auto& x = s.assignment();
  const double f = s.objective();
  const long long budget = budget_factor * static_cast<long long>(d1.size());
  long long evals = 0;
  for (std::size_t ai = 0; ai + 1 < d1.size() && evals < budget; ++ai) {
    const int a = d1[ai];
    const double ea = std::abs(s.deriv(a));
    const double da = 1.0 - 2.0 * x[a];
    for (std::size_t bi = ai + 1; bi < d1.size() && evals < budget; ++bi) {
      const int b = d1[bi];
      if (ea + std::abs(s.deriv(b)) >= m2) break;
      const double db = 1.0 - 2.0 * x[b];
      const double gain =
          da * s.deriv(a) + db * s.deriv(b) + da * db * inst.pair(a, b);
      ++evals;
      const bool admissible =
          (!tabu.is_tabu(a) && !tabu.is_tabu(b)) || f + gain > best_f + eps;
      if (admissible && (best.a == -1 || gain > best.gain)) best = {a, b, gain};
    }
  }
  return best;
}

}  // namespace

SearchResult alg5_hybrid(const QuboInstance& inst, const SearchConfig& config) {
  if (!(config.time_limit_s > 0.0)) throw std::invalid_argument("time limit must be positive");
  if (config.r < 1) throw std::invalid_argument("r must be >= 1");
  if (config.tenure < 0) throw std::invalid_argument("tenure must be nonnegative");
  if (!(config.destruction_fraction > 0.0) || config.destruction_fraction > 1.0) {
    throw std::invalid_argument("destruction fraction must be in (0, 1]");
  }
  if (config.rand_change_p < 0.0 || config.rand_change_p > 1.0) {
    throw std::invalid_argument("rand_change probability must be in [0, 1]");
  }

  const int n = inst.num_vars();
  const double eps = inst.improvement_epsilon();
  const auto t0 = std::chrono::steady_clock::now();
  const auto elapsed = [&] {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  };

  SplitMix64 rng(config.seed);
  SearchResult res;
  res.seed = config.seed;

  SolutionState cur = SolutionState::random(inst, rng);
  detail::TabuEngine engine(cur, config.tenure);

  const auto update_best = [&](const SolutionState& s) {
    if (s.objective() > res.best_f) {
      res.best_f = s.objective();
      res.best_x = s.assignment();
      res.time_to_best_s = elapsed();
      return true;
    }
    return false;
  };
  const auto target_hit = [&] {
    return config.target_objective && res.best_f >= *config.target_objective;
  };

  RflipOptions ropts;
  ropts.r_max = std::max(2, config.r);
  ropts.budget_factor = config.budget_factor;

  const bool x_noreset = std::getenv("RFLIP_X_NORESET") != nullptr;   // experiment toggle
  const bool x_pcur = std::getenv("RFLIP_X_PERTURB_CURRENT") != nullptr;  // experiment toggle
  const auto tabu_phase = [&](SolutionState& s) {
    if (x_noreset) engine.sync_signs(); else engine.reset();
    const long long nonimproving_limit = config.tabu_phase_factor * n;
    long long nonimproving = 0;
    long long polled = 0;
    while (nonimproving < nonimproving_limit) {
      // Poll the clock every n iterations so one phase cannot overshoot the
      // limit by more than a sliver.
      if (polled++ % std::max(1, n) == 0 && elapsed() >= config.time_limit_s) return;

      const int one = engine.select(res.best_f, eps);
      const double gain1 =
          one >= 0 ? (1.0 - 2.0 * s.assignment()[one]) * s.deriv(one)
                   : -std::numeric_limits<double>::infinity();

      PairMove pm;
      if (config.r >= 2 && gain1 <= eps) {
        pm = find_pair_move(s, engine, res.best_f, config.budget_factor);
      }

      if (pm.a != -1 && pm.gain > gain1) {
        s.apply_set_flip(FlipSet{pm.a, pm.b});
        engine.tick();
        engine.apply_partner(pm.a);
        engine.apply_partner(pm.b);
        ++res.flips;
        ++res.tabu_iterations;
      } else if (one >= 0) {
        engine.apply(one);
        ++res.flips;
        ++res.tabu_iterations;
      } else {
        engine.tick();
      }

      if (update_best(s)) {
        nonimproving = 0;
      } else {
        ++nonimproving;
      }
      if (target_hit()) return;
    }
  };

  for (;;) {
    if (config.max_restarts > 0 && res.restarts >= config.max_restarts) break;
    ++res.restarts;

    LocalSearchResult ls = alg1_one_flip(std::move(cur));
    res.flips += ls.flips;
    // Modified Strategy-2 step: skip the r-flip stage when the 1-flip
    // optimum already trails the incumbent.
    if (config.r >= 2 && ls.state.objective() >= res.best_f) {
      LocalSearchResult ext = alg4_strategy2(std::move(ls.state), ropts);
      res.flips += ext.flips;
      ls.state = std::move(ext.state);
    }
    update_best(ls.state);
    cur = std::move(ls.state);

    if (target_hit()) break;
    // The stopping criterion is checked before each tabu phase.
    if (elapsed() >= config.time_limit_s) break;

    tabu_phase(cur);
    if (target_hit()) break;

    // Perturb the incumbent into the next start.
    if (!x_pcur) cur.reassign(res.best_x);
    if (rng.next_bool()) {
      const std::vector<int> marked = destruction(cur, config.destruction_fraction, rng);
      construction(cur, marked);
    } else {
      rand_change(cur, config.rand_change_p, rng);
    }
  }

  res.total_time_s = elapsed();
  return res;
}

}  // namespace rflip
