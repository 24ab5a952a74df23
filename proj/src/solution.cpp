#include "rflip/solution.hpp"

#include <algorithm>
#include <stdexcept>
#include <utility>

namespace rflip {

FlipSet::FlipSet(std::vector<int> indices) : indices_(std::move(indices)) {
  if (indices_.empty()) throw std::invalid_argument("flip set must be nonempty");
  std::sort(indices_.begin(), indices_.end());
  if (std::adjacent_find(indices_.begin(), indices_.end()) != indices_.end()) {
    throw std::invalid_argument("flip set indices must be distinct");
  }
}

FlipSet::FlipSet(std::initializer_list<int> indices)
    : FlipSet(std::vector<int>(indices)) {}

double evaluate_objective(const QuboInstance& inst, std::span<const std::uint8_t> x) {
  if (static_cast<int>(x.size()) != inst.num_vars()) {
    throw std::invalid_argument("assignment length does not match instance");
  }
  double f = 0.0;
  for (int i = 0; i < inst.num_vars(); ++i) {
    if (x[i]) f += inst.linear(i);
  }
  inst.for_each_pair([&](int i, int j, double v) {
    if (x[i] && x[j]) f += v;
  });
  return f;
}

std::vector<double> compute_derivatives(const QuboInstance& inst,
                                        std::span<const std::uint8_t> x) {
  if (static_cast<int>(x.size()) != inst.num_vars()) {
    throw std::invalid_argument("assignment length does not match instance");
  }
  std::vector<double> e(inst.num_vars());
  for (int i = 0; i < inst.num_vars(); ++i) e[i] = inst.linear(i);
  inst.for_each_pair([&](int i, int j, double v) {
    if (x[j]) e[i] += v;
    if (x[i]) e[j] += v;
  });
  return e;
}

SolutionState::SolutionState(const QuboInstance& inst, std::vector<std::uint8_t> x)
    : inst_(&inst), x_(std::move(x)) {
  if (static_cast<int>(x_.size()) != inst_->num_vars()) {
    throw std::invalid_argument("assignment length does not match instance");
  }
  for (std::uint8_t b : x_) {
    if (b > 1) throw std::invalid_argument("assignment values must be 0 or 1");
  }
  rebuild();
}

SolutionState SolutionState::all_zero(const QuboInstance& inst) {
  return SolutionState(inst, std::vector<std::uint8_t>(inst.num_vars(), 0));
}

SolutionState SolutionState::random(const QuboInstance& inst, SplitMix64& rng) {
  std::vector<std::uint8_t> x(inst.num_vars());
  for (auto& b : x) b = rng.next_bool() ? 1 : 0;
  return SolutionState(inst, std::move(x));
}

void SolutionState::rebuild() {
  deriv_ = compute_derivatives(*inst_, x_);
  objective_ = evaluate_objective(*inst_, x_);
}

void SolutionState::check_index(int i) const {
  if (i < 0 || i >= inst_->num_vars()) throw std::out_of_range("variable index out of range");
}

double SolutionState::delta_one_flip(int i) const {
  check_index(i);
  return (1.0 - 2.0 * x_[i]) * deriv_[i];
}

void SolutionState::apply_one_flip(int i) {
  check_index(i);
  const double d = 1.0 - 2.0 * x_[i];
  objective_ += d * deriv_[i];
  if (const double* row = inst_->dense_row(i)) {
    // Diagonal slot is zero, so E_i picks up d * 0 and stays put.
    const int n = inst_->num_vars();
    double* e = deriv_.data();
#pragma omp simd
    for (int j = 0; j < n; ++j) e[j] += d * row[j];
  } else {
    inst_->for_each_neighbor(i, [&](int j, double v) { deriv_[j] += d * v; });
  }
  x_[i] ^= 1;
}

double SolutionState::delta_set_flip(const FlipSet& s) const {
  const auto& idx = s.indices();
  check_index(idx.front());
  check_index(idx.back());
  double delta = 0.0;
  for (int i : idx) delta += (1.0 - 2.0 * x_[i]) * deriv_[i];
  for (std::size_t a = 0; a < idx.size(); ++a) {
    const double da = 1.0 - 2.0 * x_[idx[a]];
    for (std::size_t b = a + 1; b < idx.size(); ++b) {
      const double db = 1.0 - 2.0 * x_[idx[b]];
      delta += da * db * inst_->pair(idx[a], idx[b]);
    }
  }
  return delta;
}

void SolutionState::apply_set_flip(const FlipSet& s) {
  objective_ += delta_set_flip(s);
  const auto& idx = s.indices();
  // All direction terms are taken from the pre-flip assignment.
  for (int i : idx) {
    const double d = 1.0 - 2.0 * x_[i];
    if (const double* row = inst_->dense_row(i)) {
      const int n = inst_->num_vars();
      for (int j = 0; j < n; ++j) deriv_[j] += d * row[j];
    } else {
      inst_->for_each_neighbor(i, [&](int j, double v) { deriv_[j] += d * v; });
    }
  }
  for (int i : idx) x_[i] ^= 1;
}

bool SolutionState::is_one_flip_local_opt() const {
  const double eps = inst_->improvement_epsilon();
  for (int i = 0; i < inst_->num_vars(); ++i) {
    if ((1.0 - 2.0 * x_[i]) * deriv_[i] > eps) return false;
  }
  return true;
}

void SolutionState::reassign(std::vector<std::uint8_t> x) {
  if (static_cast<int>(x.size()) != inst_->num_vars()) {
    throw std::invalid_argument("assignment length does not match instance");
  }
  x_ = std::move(x);
  rebuild();
}

}  // namespace rflip
