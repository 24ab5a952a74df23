#include <doctest.h>

#include <stdexcept>

#include "helpers.hpp"
#include "rflip/instance.hpp"

using namespace rflip;
using namespace rflip::test;

TEST_CASE("symmetric pair access and stored structure") {
  const QuboInstance inst = tiny3();
  CHECK(inst.num_vars() == 3);
  CHECK(inst.linear(0) == 2);
  CHECK(inst.linear(1) == -1);
  CHECK(inst.linear(2) == 3);
  CHECK(inst.pair(0, 1) == -4);
  CHECK(inst.pair(1, 0) == -4);
  CHECK(inst.pair(0, 2) == 1);
  CHECK(inst.pair(2, 1) == -2);
  CHECK(inst.num_pairs() == 3);
  CHECK(inst.density() == 1.0);
  CHECK(inst.integral());
  CHECK(inst.max_pair_coefficient() == 4.0);  // |q12| dominates
}

TEST_CASE("construction rejects bad entries") {
  CHECK_THROWS_AS(QuboInstance(2, {0, 0}, {{0, 0, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(QuboInstance(2, {0, 0}, {{0, 1, 1}, {1, 0, 2}}), std::invalid_argument);
  CHECK_THROWS_AS(QuboInstance(2, {0, 0}, {{0, 2, 1}}), std::invalid_argument);
  CHECK_THROWS_AS(QuboInstance(2, {0.0}, {}), std::invalid_argument);
  CHECK_THROWS_AS(QuboInstance(0, {}, {}), std::invalid_argument);
}

TEST_CASE("zero pairs are stored as absent") {
  const QuboInstance inst(3, {1, 2, 3}, {{0, 1, 0.0}, {1, 2, 5}});
  CHECK(inst.num_pairs() == 1);
  CHECK(inst.pair(0, 1) == 0.0);
  CHECK(inst.pair(1, 2) == 5.0);
  CHECK(inst.density() == doctest::Approx(1.0 / 3.0));
}

TEST_CASE("reversed input pairs are normalized") {
  const QuboInstance inst(3, {0, 0, 0}, {{2, 0, 7}});
  CHECK(inst.pair(0, 2) == 7);
  CHECK(inst.pair_entries() == std::vector<Entry>{{0, 2, 7}});
}

TEST_CASE("density boundary picks the storage mode") {
  SplitMix64 rng(11);
  const QuboInstance sparse = random_instance(rng, 40, 0.2);
  const QuboInstance dense = random_instance(rng, 40, 0.95);
  CHECK_FALSE(sparse.dense_storage());
  CHECK(dense.dense_storage());

  // Both layouts must agree with the entry list.
  for (const QuboInstance* inst : {&sparse, &dense}) {
    for (const Entry& e : inst->pair_entries()) {
      CHECK(inst->pair(e.i, e.j) == e.value);
      CHECK(inst->pair(e.j, e.i) == e.value);
    }
  }
}

TEST_CASE("neighbor iteration is sorted and symmetric") {
  SplitMix64 rng(12);
  for (double density : {0.3, 0.9}) {
    const QuboInstance inst = random_instance(rng, 30, density);
    for (int i = 0; i < inst.num_vars(); ++i) {
      int prev = -1;
      inst.for_each_neighbor(i, [&](int j, double v) {
        CHECK(j > prev);
        prev = j;
        CHECK(v == inst.pair(i, j));
      });
    }
  }
}

TEST_CASE("negated flips every coefficient") {
  const QuboInstance inst = tiny3();
  const QuboInstance neg = inst.negated();
  CHECK(neg.linear(0) == -2);
  CHECK(neg.pair(0, 1) == 4);
  CHECK(neg.max_pair_coefficient() == 4.0);
  CHECK(neg.negated() == inst);
}

TEST_CASE("integral detection and epsilon") {
  CHECK(tiny3().improvement_epsilon() == 0.0);
  const QuboInstance real_inst(2, {0.5, 1.0}, {{0, 1, 2.0}});
  CHECK_FALSE(real_inst.integral());
  CHECK(real_inst.improvement_epsilon() == QuboInstance::kRealEpsilon);
}
