#include <doctest.h>

#include <cstdint>
#include <vector>

#include "helpers.hpp"
#include "oracle.hpp"
#include "rflip/solution.hpp"

using namespace rflip;
using namespace rflip::test;

namespace {

SolutionState make_state(const QuboInstance& inst, std::vector<std::uint8_t> x) {
  return SolutionState(inst, std::move(x));
}

}  // namespace

TEST_CASE("objective evaluation on tiny3") {
  const QuboInstance inst = tiny3();
  CHECK(evaluate_objective(inst, std::vector<std::uint8_t>{0, 0, 0}) == 0);
  CHECK(evaluate_objective(inst, std::vector<std::uint8_t>{1, 0, 1}) == 6);
  CHECK(evaluate_objective(inst, std::vector<std::uint8_t>{1, 1, 1}) == -1);
  CHECK_THROWS(evaluate_objective(inst, std::vector<std::uint8_t>{0, 0}));
}

TEST_CASE("derivatives on tiny3") {
  const QuboInstance inst = tiny3();
  CHECK(compute_derivatives(inst, std::vector<std::uint8_t>{0, 0, 0}) ==
        std::vector<double>{2, -1, 3});
  CHECK(compute_derivatives(inst, std::vector<std::uint8_t>{1, 0, 1}) ==
        std::vector<double>{3, -7, 4});
}

TEST_CASE("single-variable instance has constant derivative") {
  const QuboInstance inst(1, {5}, {});
  CHECK(compute_derivatives(inst, std::vector<std::uint8_t>{0}) == std::vector<double>{5});
  CHECK(compute_derivatives(inst, std::vector<std::uint8_t>{1}) == std::vector<double>{5});
}

TEST_CASE("one-flip delta and update on tiny3") {
  const QuboInstance inst = tiny3();
  SolutionState s = make_state(inst, {0, 0, 0});
  CHECK(s.delta_one_flip(0) == 2);

  s.apply_one_flip(0);
  CHECK(s.assignment() == std::vector<std::uint8_t>{1, 0, 0});
  CHECK(s.derivatives() == std::vector<double>{2, -5, 4});
  CHECK(s.objective() == 2);

  s.apply_one_flip(2);
  CHECK(s.assignment() == std::vector<std::uint8_t>{1, 0, 1});
  CHECK(s.derivatives() == std::vector<double>{3, -7, 4});
  CHECK(s.objective() == 6);

  CHECK(s.delta_one_flip(1) == -7);
  CHECK_THROWS(s.delta_one_flip(3));
}

TEST_CASE("flip twice restores the state exactly") {
  SplitMix64 rng(21);
  const QuboInstance inst = random_instance(rng, 25, 0.6);
  SolutionState s(inst, random_assignment(rng, 25));
  const auto x0 = s.assignment();
  const auto e0 = s.derivatives();
  const double f0 = s.objective();

  s.apply_one_flip(7);
  s.apply_one_flip(7);
  CHECK(s.assignment() == x0);
  CHECK(s.derivatives() == e0);
  CHECK(s.objective() == f0);

  const FlipSet set{3, 11, 19};
  s.apply_set_flip(set);
  s.apply_set_flip(set);
  CHECK(s.assignment() == x0);
  CHECK(s.derivatives() == e0);
  CHECK(s.objective() == f0);
}

TEST_CASE("set-flip delta on tiny instances") {
  const QuboInstance t3 = tiny3();
  SolutionState s3 = make_state(t3, {0, 0, 0});
  CHECK(s3.delta_set_flip(FlipSet{0, 2}) == 6);

  const QuboInstance t2 = tiny2b();
  SolutionState s2 = make_state(t2, {0, 0});
  CHECK(s2.delta_set_flip(FlipSet{0, 1}) == 1);

  s2.apply_set_flip(FlipSet{0, 1});
  CHECK(s2.assignment() == std::vector<std::uint8_t>{1, 1});
  CHECK(s2.derivatives() == std::vector<double>{2, 2});
  CHECK(s2.objective() == 1);

  s3.apply_set_flip(FlipSet{0, 2});
  CHECK(s3.derivatives() == std::vector<double>{3, -7, 4});
  CHECK(s3.objective() == 6);
}

TEST_CASE("flip set validation") {
  CHECK_THROWS(FlipSet{});
  CHECK_THROWS(FlipSet{1, 1});
  const FlipSet s{4, 2, 9};
  CHECK(s.indices() == std::vector<int>{2, 4, 9});
}

TEST_CASE("one-flip local optimality per the sign condition") {
  const QuboInstance inst = tiny3();
  CHECK(make_state(inst, {1, 0, 1}).is_one_flip_local_opt());
  CHECK_FALSE(make_state(inst, {0, 0, 0}).is_one_flip_local_opt());

  const QuboInstance zero(1, {0}, {});
  CHECK(make_state(zero, {0}).is_one_flip_local_opt());
  CHECK(make_state(zero, {1}).is_one_flip_local_opt());
}

TEST_CASE("deltas match scratch recomputation on random integer instances") {
  SplitMix64 rng(31);
  for (int trial = 0; trial < 60; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(13));
    const double density = trial % 3 == 0 ? 0.3 : (trial % 3 == 1 ? 0.7 : 1.0);
    const QuboInstance inst = random_instance(rng, n, density);
    auto x = random_assignment(rng, n);
    SolutionState s(inst, x);

    for (int i = 0; i < n; ++i) {
      auto flipped = x;
      flipped[i] ^= 1;
      CHECK(s.delta_one_flip(i) == oracle_objective(inst, flipped) - oracle_objective(inst, x));
    }

    for (int a = 0; a < n; ++a) {
      for (int b = a + 1; b < n; ++b) {
        auto flipped = x;
        flipped[a] ^= 1;
        flipped[b] ^= 1;
        CHECK(s.delta_set_flip(FlipSet{a, b}) ==
              oracle_objective(inst, flipped) - oracle_objective(inst, x));
        CHECK(s.delta_set_flip(FlipSet{a, b}) == s.delta_set_flip(FlipSet{b, a}));
      }
    }

    for (int i = 0; i < n; ++i) {
      CHECK(s.delta_set_flip(FlipSet{std::vector<int>{i}}) == s.delta_one_flip(i));
    }
  }
}

TEST_CASE("derivatives and objective stay exact through mixed flip sequences") {
  SplitMix64 rng(32);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 5 + static_cast<int>(rng.next_below(60));
    const QuboInstance inst = random_instance(rng, n, trial % 2 == 0 ? 0.4 : 0.9);
    SolutionState s(inst, random_assignment(rng, n));

    for (int step = 0; step < 300; ++step) {
      if (rng.next_bool()) {
        s.apply_one_flip(static_cast<int>(rng.next_below(n)));
      } else {
        const int r = 2 + static_cast<int>(rng.next_below(3));
        std::vector<int> idx;
        while (static_cast<int>(idx.size()) < r) {
          const int c = static_cast<int>(rng.next_below(n));
          if (std::find(idx.begin(), idx.end(), c) == idx.end()) idx.push_back(c);
        }
        s.apply_set_flip(FlipSet(idx));
      }
    }

    CHECK(s.objective() == oracle_objective(inst, s.assignment()));
    CHECK(s.derivatives() == oracle_derivatives(inst, s.assignment()));
  }
}

TEST_CASE("every one-flip delta is nonpositive at a local optimum") {
  SplitMix64 rng(33);
  for (int trial = 0; trial < 40; ++trial) {
    const int n = 2 + static_cast<int>(rng.next_below(12));
    const QuboInstance inst = random_instance(rng, n, 0.8);
    SolutionState s(inst, random_assignment(rng, n));
    // Descend greedily to some local optimum.
    bool moved = true;
    while (moved) {
      moved = false;
      for (int i = 0; i < n; ++i) {
        if (s.delta_one_flip(i) > 0) {
          s.apply_one_flip(i);
          moved = true;
        }
      }
    }
    REQUIRE(s.is_one_flip_local_opt());
    for (int i = 0; i < n; ++i) CHECK(s.delta_one_flip(i) <= 0);
  }
}
