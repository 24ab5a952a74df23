#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "rflip/instance.hpp"
#include "rflip/rng.hpp"

namespace rflip {

/// A set of distinct variable indices to flip simultaneously. Canonical form
/// is strictly increasing; construction sorts and rejects duplicates.
class FlipSet {
 public:
  explicit FlipSet(std::vector<int> indices);
  FlipSet(std::initializer_list<int> indices);

  const std::vector<int>& indices() const { return indices_; }
  int size() const { return static_cast<int>(indices_.size()); }

 private:
  std::vector<int> indices_;
};

/// f(x) from scratch.
double evaluate_objective(const QuboInstance& inst, std::span<const std::uint8_t> x);

/// Derivative vector E(x): E_i = q_i + sum_{j != i} q_{ij} x_j.
std::vector<double> compute_derivatives(const QuboInstance& inst,
                                        std::span<const std::uint8_t> x);

/// Binary assignment with its derivative vector and objective value kept
/// exactly in sync through incremental flips. For integer instances every
/// cached quantity equals a from-scratch recomputation with zero error.
///
/// The referenced instance must outlive the state. A state belongs to one
/// worker at a time; the instance itself may be shared.
class SolutionState {
 public:
  SolutionState(const QuboInstance& inst, std::vector<std::uint8_t> x);
  SolutionState(const QuboInstance&& inst, std::vector<std::uint8_t> x) = delete;

  static SolutionState all_zero(const QuboInstance& inst);
  static SolutionState all_zero(const QuboInstance&& inst) = delete;
  static SolutionState random(const QuboInstance& inst, SplitMix64& rng);
  static SolutionState random(const QuboInstance&& inst, SplitMix64& rng) = delete;

  const QuboInstance& instance() const { return *inst_; }
  int num_vars() const { return inst_->num_vars(); }
  const std::vector<std::uint8_t>& assignment() const { return x_; }
  double objective() const { return objective_; }
  double deriv(int i) const { return deriv_[i]; }
  const std::vector<double>& derivatives() const { return deriv_; }

  /// Objective change from toggling variable i: (x'_i - x_i) * E_i.
  double delta_one_flip(int i) const;

  /// Toggles variable i, updating E over the neighbors of i and the cached
  /// objective. E_i itself is left untouched: x_i does not occur in its own
  /// derivative, so the value stays consistent with the new assignment.
  void apply_one_flip(int i);

  /// Objective change from toggling every index in s:
  ///   sum_{i in S} (x'_i - x_i) E_i
  ///   + sum_{i<j in S} (x'_i - x_i)(x'_j - x_j) q_{ij},
  /// evaluated with O(|S|^2) coefficient lookups.
  double delta_set_flip(const FlipSet& s) const;

  /// Toggles every index in s and updates all derivatives in O(n * |S|).
  void apply_set_flip(const FlipSet& s);

  /// True iff no single toggle improves: (x_i = 0 => E_i <= eps) and
  /// (x_i = 1 => E_i >= -eps), with eps = 0 for integer instances.
  bool is_one_flip_local_opt() const;

  /// Replaces the assignment and rebuilds E and f from scratch.
  void reassign(std::vector<std::uint8_t> x);

 private:
  void rebuild();
  void check_index(int i) const;

  const QuboInstance* inst_;
  std::vector<std::uint8_t> x_;
  std::vector<double> deriv_;
  double objective_ = 0.0;
};

}  // namespace rflip
