#pragma once

#include <cstddef>
#include <cstdint>
#include <string>
#include <vector>

namespace rflip {

/// One coefficient entry in upper-triangular form: a linear term when i == j,
/// a quadratic pair when i < j. Indices are 0-based.
struct Entry {
  int i;
  int j;
  double value;

  bool operator==(const Entry&) const = default;
};

/// Immutable QUBO instance in maximization form
///
///   f(x) = sum_i q_i x_i + sum_{i<j} q_{ij} x_i x_j,   x in {0,1}^n.
///
/// Off-diagonal coefficients are stored once (i < j) and read symmetrically:
/// pair(j, i) returns the (i, j) value. Zero-valued pairs are never stored,
/// so density() counts exactly the nonzero off-diagonal structure.
///
/// Storage is chosen at construction: adjacency lists (per-row sorted) for
/// sparse instances, a full symmetric matrix when density > 0.5 so that pair
/// lookups and row updates are O(1)/contiguous on high-density benchmarks.
/// Instances are safe to share across threads.
class QuboInstance {
 public:
  QuboInstance(int n, std::vector<double> linear, std::vector<Entry> pairs,
               std::string name = "");

  int num_vars() const { return n_; }
  const std::string& name() const { return name_; }

  double linear(int i) const;

  /// Symmetric pair lookup; 0.0 when the pair is absent. Requires i != j.
  double pair(int i, int j) const;

  std::size_t num_pairs() const { return num_pairs_; }

  /// (# stored nonzero pairs) / C(n,2); 0 when n < 2.
  double density() const { return density_; }

  /// True when every coefficient is an exact integer. Integral instances use
  /// a zero improvement threshold; real-valued ones use kRealEpsilon.
  bool integral() const { return integral_; }
  double improvement_epsilon() const { return integral_ ? 0.0 : kRealEpsilon; }

  /// phi = max over stored |q_ij|; 0 when no pairs are stored (then the
  /// pruning bound M = phi*C(r,2) is 0 and all candidate sets come out
  /// empty). The magnitude is the sound bound: a flip set collects each pair
  /// coefficient with either sign depending on the flip directions.
  double max_pair_coefficient() const { return phi_; }

  bool dense_storage() const { return dense_; }

  /// Row pointer for the dense layout (nullptr in sparse mode). The diagonal
  /// slot is 0, which lets derivative updates run branch-free over the row.
  const double* dense_row(int i) const {
    return dense_ ? dense_values_.data() + static_cast<std::size_t>(i) * n_ : nullptr;
  }

  /// Visits stored neighbors of i as f(j, q_ij) in ascending j.
  template <class F>
  void for_each_neighbor(int i, F&& f) const {
    if (dense_) {
      const double* row = dense_values_.data() + static_cast<std::size_t>(i) * n_;
      for (int j = 0; j < n_; ++j) {
        if (row[j] != 0.0) f(j, row[j]);
      }
    } else {
      for (std::size_t k = row_offset_[i]; k < row_offset_[i + 1]; ++k) {
        f(nbr_index_[k], nbr_value_[k]);
      }
    }
  }

  /// Visits stored pairs as f(i, j, value) with i < j, sorted by (i, j).
  template <class F>
  void for_each_pair(F&& f) const {
    if (dense_) {
      for (int i = 0; i < n_; ++i) {
        const double* row = dense_values_.data() + static_cast<std::size_t>(i) * n_;
        for (int j = i + 1; j < n_; ++j) {
          if (row[j] != 0.0) f(i, j, row[j]);
        }
      }
    } else {
      for (int i = 0; i < n_; ++i) {
        for (std::size_t k = row_offset_[i]; k < row_offset_[i + 1]; ++k) {
          if (nbr_index_[k] > i) f(i, nbr_index_[k], nbr_value_[k]);
        }
      }
    }
  }

  /// Sorted copy of the stored pairs (test/IO convenience, not a hot path).
  std::vector<Entry> pair_entries() const;

  /// Same structure with every coefficient negated (minimization input files).
  QuboInstance negated() const;

  bool operator==(const QuboInstance& other) const;

  static constexpr double kRealEpsilon = 1e-9;

 private:
  // Full matrices above this size would dominate memory; fall back to
  // adjacency storage there regardless of density.
  static constexpr int kDenseMaxVars = 12000;

  int n_ = 0;
  std::string name_;
  std::vector<double> linear_;
  std::size_t num_pairs_ = 0;
  double density_ = 0.0;
  double phi_ = 0.0;
  bool integral_ = true;
  bool dense_ = false;

  // Sparse layout: symmetric adjacency, rows sorted by neighbor index.
  std::vector<std::size_t> row_offset_;
  std::vector<int> nbr_index_;
  std::vector<double> nbr_value_;

  // Dense layout: row-major symmetric matrix with zero diagonal.
  std::vector<double> dense_values_;
};

}  // namespace rflip
