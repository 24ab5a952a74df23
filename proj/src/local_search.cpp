#include "rflip/local_search.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <stdexcept>

namespace rflip {

namespace {

// Advances c to the next combination of {0..n-1} in lexicographic order.
bool next_combination(std::vector<int>& c, int n) {
  const int r = static_cast<int>(c.size());
  for (int i = r - 1; i >= 0; --i) {
    if (c[i] < n - r + i) {
      ++c[i];
      for (int j = i + 1; j < r; ++j) c[j] = c[j - 1] + 1;
      return true;
    }
  }
  return false;
}

}  // namespace

double compute_M(const QuboInstance& inst, int r) {
  if (r < 1) throw std::invalid_argument("r must be >= 1");
  return inst.max_pair_coefficient() * (static_cast<double>(r) * (r - 1) / 2.0);
}

std::vector<int> build_D1(const SolutionState& state, double m) {
  std::vector<int> out;
  for (int i = 0; i < state.num_vars(); ++i) {
    if (std::abs(state.deriv(i)) < m) out.push_back(i);
  }
  return out;
}

PruningContext build_Dn(const SolutionState& state, double m) {
  const int n = state.num_vars();
  PruningContext ctx;
  ctx.phi = state.instance().max_pair_coefficient();
  ctx.bound_m = m;
  ctx.order.resize(n);
  std::iota(ctx.order.begin(), ctx.order.end(), 0);
  std::sort(ctx.order.begin(), ctx.order.end(), [&](int a, int b) {
    const double ea = std::abs(state.deriv(a));
    const double eb = std::abs(state.deriv(b));
    return ea != eb ? ea < eb : a < b;
  });
  ctx.prefix.resize(n + 1);
  ctx.prefix[0] = 0.0;
  for (int k = 0; k < n; ++k) {
    ctx.prefix[k + 1] = ctx.prefix[k] + std::abs(state.deriv(ctx.order[k]));
  }
  ctx.k_max = 0;
  for (int k = 1; k <= n; ++k) {
    if (ctx.prefix[k] < m) ctx.k_max = k;
  }
  return ctx;
}

std::vector<FlipSet> candidate_prefix_sets(const PruningContext& ctx) {
  std::vector<FlipSet> out;
  for (int k = 2; k <= ctx.k_max; ++k) {
    out.emplace_back(std::vector<int>(ctx.order.begin(), ctx.order.begin() + k));
  }
  return out;
}

bool improving_rflip_certificate(const SolutionState& state, const FlipSet& s) {
  const double eps = state.instance().improvement_epsilon();
  if (!state.is_one_flip_local_opt()) return state.delta_set_flip(s) > eps;
  const auto& idx = s.indices();
  double lhs = 0.0;
  for (int i : idx) lhs += std::abs(state.deriv(i));
  double rhs = 0.0;
  const auto& x = state.assignment();
  for (std::size_t a = 0; a < idx.size(); ++a) {
    const double da = 1.0 - 2.0 * x[idx[a]];
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      const double db = 1.0 - 2.0 * x[idx[b]];
      rhs += da * db * state.instance().pair(idx[a], idx[b]);
    }
  }
  return lhs < rhs;
}

LocalSearchResult alg1_one_flip(SolutionState state) {
  const double eps = state.instance().improvement_epsilon();
  const int n = state.num_vars();
  LocalSearchResult res{std::move(state)};
  bool accepted = true;
  while (accepted) {
    accepted = false;
    for (int i = 0; i < n; ++i) {
      if (res.state.delta_one_flip(i) > eps) {
        res.state.apply_one_flip(i);
        ++res.flips;
        accepted = true;
      }
    }
    ++res.passes;
  }
  res.improved = res.flips > 0;
  return res;
}

LocalSearchResult alg2_exhaustive_rflip(SolutionState state, int r) {
  const int n = state.num_vars();
  if (r < 1 || r > n) throw std::invalid_argument("r out of range");
  const double eps = state.instance().improvement_epsilon();
  LocalSearchResult res{std::move(state)};
  bool accepted = true;
  while (accepted) {
    accepted = false;
    std::vector<int> comb(r);
    std::iota(comb.begin(), comb.end(), 0);
    do {
      const FlipSet s(comb);
      if (res.state.delta_set_flip(s) > eps) {
        res.state.apply_set_flip(s);
        ++res.flips;
        accepted = true;
        break;
      }
    } while (next_combination(comb, n));
    ++res.passes;
  }
  res.improved = res.flips > 0;
  return res;
}

namespace {

// Scans one pruning round of Strategy 1 at a 1-flip local optimum; applies
// the first improving set it finds. Returns true on acceptance.
bool strategy1_round(SolutionState& state, const RflipOptions& opts) {
  const QuboInstance& inst = state.instance();
  const double eps = inst.improvement_epsilon();
  for (int r = 2; r <= opts.r_max; ++r) {
    const double m = compute_M(inst, r);
    if (m <= 0.0) continue;
    const PruningContext ctx = build_Dn(state, m);
    if (ctx.k_max < 2) continue;
    const long long budget = opts.budget_factor * ctx.k_max;
    long long evals = 0;

    // The nested prefix family first (the dynamically growing r),
    for (int k = 2; k <= ctx.k_max && evals < budget; ++k) {
      const FlipSet s(std::vector<int>(ctx.order.begin(), ctx.order.begin() + k));
      ++evals;
      if (state.delta_set_flip(s) > eps) {
        state.apply_set_flip(s);
        return true;
      }
    }
    // then the remaining size-<=r subsets of D(n) in lexicographic order
    // over the |E|-ascending positions.
    for (int size = 2; size <= std::min(r, ctx.k_max) && evals < budget; ++size) {
      std::vector<int> comb(size);
      std::iota(comb.begin(), comb.end(), 0);
      do {
        std::vector<int> idx(size);
        for (int t = 0; t < size; ++t) idx[t] = ctx.order[comb[t]];
        const FlipSet s(std::move(idx));
        ++evals;
        if (state.delta_set_flip(s) > eps) {
          state.apply_set_flip(s);
          return true;
        }
      } while (evals < budget && next_combination(comb, ctx.k_max));
    }
  }
  return false;
}

// One pruning round of Strategy 2: pair seeds from D(1) in |E|-ascending
// order, grown while the sum bound allows. Returns true on acceptance.
bool strategy2_round(SolutionState& state, const RflipOptions& opts) {
  const QuboInstance& inst = state.instance();
  const double eps = inst.improvement_epsilon();
  const double m_top = compute_M(inst, opts.r_max);
  if (m_top <= 0.0) return false;
  std::vector<int> d1 = build_D1(state, m_top);
  if (d1.size() < 2) return false;
  std::sort(d1.begin(), d1.end(), [&](int a, int b) {
    const double ea = std::abs(state.deriv(a));
    const double eb = std::abs(state.deriv(b));
    return ea != eb ? ea < eb : a < b;
  });

  const double m2 = compute_M(inst, 2);
  const long long budget = opts.budget_factor * static_cast<long long>(d1.size());
  long long evals = 0;

  for (std::size_t a = 0; a + 1 < d1.size() && evals < budget; ++a) {
    const double ea = std::abs(state.deriv(d1[a]));
    for (std::size_t b = a + 1; b < d1.size() && evals < budget; ++b) {
      const double sum2 = ea + std::abs(state.deriv(d1[b]));
      // Later seeds only grow the sum, and M(r_max) is the loosest bound any
      // superset could be held to.
      if (sum2 >= m_top) break;
      if (sum2 < m2) {
        const FlipSet pair_set({d1[a], d1[b]});
        ++evals;
        if (state.delta_set_flip(pair_set) > eps) {
          state.apply_set_flip(pair_set);
          return true;
        }
      }
      if (opts.r_max <= 2) continue;
      std::vector<int> grown = {d1[a], d1[b]};
      double sum = sum2;
      for (std::size_t c = b + 1; c < d1.size() && evals < budget; ++c) {
        if (static_cast<int>(grown.size()) >= opts.r_max) break;
        const double next_sum = sum + std::abs(state.deriv(d1[c]));
        if (next_sum >= compute_M(inst, static_cast<int>(grown.size()) + 1)) break;
        grown.push_back(d1[c]);
        sum = next_sum;
        const FlipSet s(grown);
        ++evals;
        if (state.delta_set_flip(s) > eps) {
          state.apply_set_flip(s);
          return true;
        }
      }
    }
  }
  return false;
}

template <class Round>
LocalSearchResult hybrid_rflip_descent(SolutionState state, const RflipOptions& opts,
                                       Round&& round) {
  if (opts.r_max < 2) throw std::invalid_argument("r_max must be >= 2");
  LocalSearchResult res = alg1_one_flip(std::move(state));
  while (round(res.state, opts)) {
    ++res.flips;
    LocalSearchResult polish = alg1_one_flip(std::move(res.state));
    res.state = std::move(polish.state);
    res.flips += polish.flips;
    res.passes += polish.passes;
    res.improved = true;
  }
  return res;
}

}  // namespace

LocalSearchResult alg3_strategy1(SolutionState state, const RflipOptions& opts) {
  return hybrid_rflip_descent(std::move(state), opts, strategy1_round);
}

LocalSearchResult alg4_strategy2(SolutionState state, const RflipOptions& opts) {
  return hybrid_rflip_descent(std::move(state), opts, strategy2_round);
}

}  // namespace rflip
