#include "rflip/instance.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>
#include <utility>

namespace rflip {

namespace {

bool is_integral_value(double v) {
  return std::isfinite(v) && v == std::floor(v) && std::abs(v) < 9.007199254740992e15;
}

}  // namespace

QuboInstance::QuboInstance(int n, std::vector<double> linear, std::vector<Entry> pairs,
                           std::string name)
    : n_(n), name_(std::move(name)), linear_(std::move(linear)) {
  if (n_ < 1) throw std::invalid_argument("instance needs at least one variable");
  if (static_cast<int>(linear_.size()) != n_) {
    throw std::invalid_argument("linear coefficient count does not match n");
  }

  // Drop zero pairs, canonicalize, and validate.
  std::erase_if(pairs, [](const Entry& e) { return e.value == 0.0; });
  for (Entry& e : pairs) {
    if (e.i == e.j) throw std::invalid_argument("self-pair in quadratic entries");
    if (e.i > e.j) std::swap(e.i, e.j);
    if (e.i < 0 || e.j >= n_) throw std::invalid_argument("pair index out of range");
  }
  std::sort(pairs.begin(), pairs.end(), [](const Entry& a, const Entry& b) {
    return a.i != b.i ? a.i < b.i : a.j < b.j;
  });
  for (std::size_t k = 1; k < pairs.size(); ++k) {
    if (pairs[k - 1].i == pairs[k].i && pairs[k - 1].j == pairs[k].j) {
      throw std::invalid_argument("duplicate quadratic pair");
    }
  }

  num_pairs_ = pairs.size();
  const double total_pairs = static_cast<double>(n_) * (n_ - 1) / 2.0;
  density_ = n_ >= 2 ? static_cast<double>(num_pairs_) / total_pairs : 0.0;

  integral_ = std::all_of(linear_.begin(), linear_.end(), is_integral_value) &&
              std::all_of(pairs.begin(), pairs.end(),
                          [](const Entry& e) { return is_integral_value(e.value); });
  // phi must bound the pair term of any flip set: every summand there is
  // +-q_{ij} depending on the flip directions, so the magnitude is what
  // matters, not the signed maximum.
  phi_ = 0.0;
  for (const Entry& e : pairs) phi_ = std::max(phi_, std::abs(e.value));

  dense_ = density_ > 0.5 && n_ <= kDenseMaxVars;
  if (dense_) {
    dense_values_.assign(static_cast<std::size_t>(n_) * n_, 0.0);
    for (const Entry& e : pairs) {
      dense_values_[static_cast<std::size_t>(e.i) * n_ + e.j] = e.value;
      dense_values_[static_cast<std::size_t>(e.j) * n_ + e.i] = e.value;
    }
  } else {
    std::vector<std::size_t> degree(n_, 0);
    for (const Entry& e : pairs) {
      ++degree[e.i];
      ++degree[e.j];
    }
    row_offset_.assign(n_ + 1, 0);
    for (int i = 0; i < n_; ++i) row_offset_[i + 1] = row_offset_[i] + degree[i];
    nbr_index_.resize(2 * num_pairs_);
    nbr_value_.resize(2 * num_pairs_);
    std::vector<std::size_t> cursor(row_offset_.begin(), row_offset_.end() - 1);
    for (const Entry& e : pairs) {
      nbr_index_[cursor[e.i]] = e.j;
      nbr_value_[cursor[e.i]++] = e.value;
      nbr_index_[cursor[e.j]] = e.i;
      nbr_value_[cursor[e.j]++] = e.value;
    }
    // Rows come out sorted: pairs are sorted by (i, j), and the mirrored
    // entries land in ascending i per row j for the same reason.
  }
}

double QuboInstance::linear(int i) const {
  if (i < 0 || i >= n_) throw std::out_of_range("variable index out of range");
  return linear_[i];
}

double QuboInstance::pair(int i, int j) const {
  if (i < 0 || i >= n_ || j < 0 || j >= n_) throw std::out_of_range("pair index out of range");
  if (i == j) throw std::invalid_argument("diagonal is not a pair");
  if (dense_) return dense_values_[static_cast<std::size_t>(i) * n_ + j];
  const auto begin = nbr_index_.begin() + static_cast<std::ptrdiff_t>(row_offset_[i]);
  const auto end = nbr_index_.begin() + static_cast<std::ptrdiff_t>(row_offset_[i + 1]);
  const auto it = std::lower_bound(begin, end, j);
  if (it == end || *it != j) return 0.0;
  return nbr_value_[static_cast<std::size_t>(it - nbr_index_.begin())];
}

std::vector<Entry> QuboInstance::pair_entries() const {
  std::vector<Entry> out;
  out.reserve(num_pairs_);
  for_each_pair([&](int i, int j, double v) { out.push_back({i, j, v}); });
  return out;
}

QuboInstance QuboInstance::negated() const {
  std::vector<double> lin(linear_);
  for (double& v : lin) v = -v;
  std::vector<Entry> pairs = pair_entries();
  for (Entry& e : pairs) e.value = -e.value;
  return QuboInstance(n_, std::move(lin), std::move(pairs), name_);
}

bool QuboInstance::operator==(const QuboInstance& other) const {
  return n_ == other.n_ && linear_ == other.linear_ &&
         num_pairs_ == other.num_pairs_ && pair_entries() == other.pair_entries();
}

}  // namespace rflip
