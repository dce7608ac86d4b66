// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "subcover/general_cover.hpp"

#include <cmath>
#include <limits>
#include <random>
#include <sstream>
#include <vector>

#include "gtest/gtest.h"
#include "reference.hpp"
#include "subcover/instances.hpp"

namespace subcover {
namespace {

using testing::RefCoverage;
using testing::RefCut;

constexpr double kInf = std::numeric_limits<double>::infinity();

RefCut FourCycle() {
  return RefCut{4, {{0, 1, 1.0}, {1, 2, 1.0}, {2, 3, 1.0}, {0, 3, 1.0}}};
}

// Center 0, leaves 1..4.
RefCut Star() {
  return RefCut{5, {{0, 1, 1.0}, {0, 2, 1.0}, {0, 3, 1.0}, {0, 4, 1.0}}};
}

TEST(SubroutineTest, StopFractions) {
  EXPECT_EQ(StopFraction(SmpSubroutine::kExact), 1.0);
  EXPECT_EQ(StopFraction(SmpSubroutine::kFastExact), 1.0);
  EXPECT_EQ(StopFraction(SmpSubroutine::kDoubleGreedy), 0.5);
  EXPECT_DOUBLE_EQ(StopFraction(SmpSubroutine::kRandomGreedy), 1.0 / std::exp(1.0));
  for (auto kind : {SmpSubroutine::kRandomGreedy, SmpSubroutine::kDoubleGreedy,
                    SmpSubroutine::kExact, SmpSubroutine::kFastExact}) {
    EXPECT_EQ(SubroutineFromString(ToString(kind)), kind);
  }
  EXPECT_THROW(SubroutineFromString("lp"), InputError);
}

TEST(StreamCoverTest, ZeroThresholdIsEmpty) {
  const auto result = StreamCover({Oracle(FourCycle().Build()), 0.0}, 0.5, 0.2,
                                  SmpSubroutine::kExact, 1);
  EXPECT_EQ(result.status, Status::kSolved);
  EXPECT_TRUE(result.solution.empty());
  EXPECT_EQ(result.queries, 1u);
}

TEST(StreamCoverTest, MonotoneCoverageWithExactSubroutine) {
  std::mt19937_64 rng(3);
  const double eps = 0.5, alpha = 0.2;
  for (int trial = 0; trial < 20; ++trial) {
    const RefCoverage ref = testing::RandomRefCoverage(10, 20, 0.2, rng);
    const testing::BitCoverage bits(ref);
    const double tau = ref(Iota(10));
    if (tau == 0.0) continue;
    const auto [found, opt] = testing::RefMinCover(bits, 10, tau);
    ASSERT_TRUE(found);
    const auto result = StreamCover({Oracle(ref.Build()), tau}, eps, alpha,
                                    SmpSubroutine::kExact, trial);
    ASSERT_EQ(result.status, Status::kSolved);
    EXPECT_GE(ref(result.solution), (1 - eps) * tau - 1e-9);
    EXPECT_LE(static_cast<double>(result.size),
              (1 + alpha) * (2 / eps + 1) * static_cast<double>(opt.size()) + 1e-9);
  }
}

TEST(StreamCoverTest, FourCycleCut) {
  const RefCut ref = FourCycle();
  EXPECT_EQ(testing::RefMax(ref, 4, 4), 4.0);
  const auto result = StreamCover({Oracle(ref.Build()), 4.0}, 0.5, 0.2,
                                  SmpSubroutine::kExact, 0);
  ASSERT_EQ(result.status, Status::kSolved);
  EXPECT_GE(ref(result.solution), 2.0);
}

TEST(StreamCoverTest, InfeasibleThreshold) {
  const auto result = StreamCover({Oracle(FourCycle().Build()), 10.0}, 0.5, 0.5,
                                  SmpSubroutine::kExact, 0);
  EXPECT_EQ(result.status, Status::kInfeasibleDetected);
}

TEST(StreamCoverTest, TraceLinesAndBucketInvariant) {
  Oracle oracle(MakeRandomGraphCut(12, 0.4, 5));
  std::ostringstream trace;
  std::vector<StreamPass> passes;
  bool invariant = true;
  StreamOptions options;
  options.trace = &trace;
  options.passes = &passes;
  options.observer = [&](const BucketState& b) {
    invariant = invariant && b.CheckInvariants() &&
                b.stored() <= b.num_buckets() * b.cap();
  };
  const double tau = 0.9 * oracle.Peek(DoubleGreedyUsm(oracle.Clone(), 1));
  StreamCover({oracle, tau}, 0.4, 0.3, SmpSubroutine::kFastExact, 2, options);
  EXPECT_TRUE(invariant);
  ASSERT_FALSE(passes.empty());
  std::istringstream lines(trace.str());
  std::string line;
  std::size_t count = 0;
  while (std::getline(lines, line)) {
    EXPECT_EQ(line.rfind("g=", 0), 0u) << line;
    EXPECT_NE(line.find(" stored="), std::string::npos);
    EXPECT_NE(line.find(" smp_value="), std::string::npos);
    ++count;
  }
  EXPECT_EQ(count, passes.size());
}

TEST(StreamCoverTest, RetainModeAlsoSolves) {
  Oracle oracle(MakeRandomGraphCut(10, 0.4, 9));
  const double tau = 0.8 * oracle.Peek(DoubleGreedyUsm(oracle.Clone(), 3));
  StreamOptions options;
  options.retain_buckets = true;
  const auto result =
      StreamCover({oracle, tau}, 0.5, 0.2, SmpSubroutine::kExact, 1, options);
  EXPECT_EQ(result.status, Status::kSolved);
  EXPECT_GE(result.f_value, 0.5 * tau - 1e-9);
}

TEST(RandomGreedyTest, FullBudgetCanReachGroundSet) {
  const RefCoverage ref{{{0}, {1}, {2}}};
  Oracle oracle(ref.Build());
  bool saw_all = false;
  for (std::uint64_t seed = 0; seed < 60; ++seed) {
    const ElementSet s = RandomGreedySmp({oracle, 3}, seed);
    EXPECT_LE(s.size(), 3u);
    if (s == Iota(3)) {
      saw_all = true;
      EXPECT_EQ(ref(s), ref(Iota(3)));
    }
  }
  EXPECT_TRUE(saw_all);
}

TEST(RandomGreedyTest, SingleElement) {
  Oracle oracle(RefCoverage{{{0, 1}}}.Build());
  EXPECT_EQ(RandomGreedySmp({oracle, 1}, 5), ElementSet({0}));
}

TEST(RandomGreedyTest, MeanAgainstExhaustiveOptimum) {
  std::mt19937_64 rng(11);
  const RefCut ref = testing::RandomRefCut(5, 0.6, rng);
  const double optimum = testing::RefMax(ref, 5, 2);
  ASSERT_GT(optimum, 0.0);
  Oracle oracle(ref.Build());
  double total = 0.0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    total += ref(RandomGreedySmp({oracle, 2}, seed));
  }
  EXPECT_GE(total / 300.0, optimum / std::exp(1.0));
}

TEST(DoubleGreedyTest, ModularFunctionTakesPositiveElements) {
  // Disjoint tags make coverage modular; element 2 is worthless.
  const RefCoverage ref{{{0, 1}, {2}, {}, {3, 4, 5}}};
  Oracle oracle(ref.Build());
  for (std::uint64_t seed = 0; seed < 20; ++seed) {
    const ElementSet s = DoubleGreedyUsm(oracle, seed);
    for (ElementId x : {0u, 1u, 3u}) {
      EXPECT_TRUE(std::binary_search(s.begin(), s.end(), x));
    }
    EXPECT_EQ(ref(s), 6.0);
  }
}

TEST(DoubleGreedyTest, EmptyGraphGivesZero) {
  const RefCut ref{6, {}};
  Oracle oracle(ref.Build());
  for (std::uint64_t seed = 0; seed < 10; ++seed) {
    EXPECT_EQ(ref(DoubleGreedyUsm(oracle, seed)), 0.0);
  }
}

TEST(DoubleGreedyTest, MeanAgainstExhaustiveMaximum) {
  std::mt19937_64 rng(13);
  const RefCut ref = testing::RandomRefCut(5, 0.6, rng);
  const double optimum = testing::RefMax(ref, 5, 5);
  Oracle oracle(ref.Build());
  double total = 0.0;
  for (std::uint64_t seed = 0; seed < 300; ++seed) {
    total += ref(DoubleGreedyUsm(oracle, seed));
  }
  EXPECT_GE(total / 300.0, 0.5 * optimum);
}

TEST(ExactSmpTest, MonotoneFullBudgetTakesGround) {
  Oracle oracle(MakeRandomCoverage(8, 20, 0.3, 4));
  const ElementSet ground = {1, 2, 5, 7};
  const auto result = ExactSmp(oracle, ground, 4, kInf);
  EXPECT_DOUBLE_EQ(result.value, oracle.Peek(ground));
  EXPECT_FALSE(result.met_target);
}

TEST(ExactSmpTest, FourCycleBestOfAll) {
  const RefCut ref = FourCycle();
  const auto result = ExactSmp(Oracle(ref.Build()), Iota(4), 2, kInf);
  EXPECT_EQ(result.value, 4.0);
  EXPECT_EQ(ref(result.set), 4.0);
  EXPECT_EQ(testing::RefMax(ref, 4, 2), 4.0);
}

TEST(ExactSmpTest, CoverageMatchesEnumeration) {
  std::mt19937_64 rng(17);
  for (int trial = 0; trial < 30; ++trial) {
    const RefCoverage ref = testing::RandomRefCoverage(6, 15, 0.25, rng);
    const auto result = ExactSmp(Oracle(ref.Build()), Iota(6), 2, kInf);
    EXPECT_EQ(result.value, testing::RefMax(ref, 6, 2));
    EXPECT_EQ(ref(result.set), result.value);
    EXPECT_LE(result.set.size(), 2u);
  }
}

TEST(ExactSmpTest, StopsAtFirstSetMeetingTarget) {
  const RefCut ref = FourCycle();
  const auto result = ExactSmp(Oracle(ref.Build()), Iota(4), 2, 3.0);
  EXPECT_TRUE(result.met_target);
  EXPECT_GE(ref(result.set), 3.0);
}

TEST(ClassifyTest, MonotoneOracleIsAllMonotone) {
  Oracle oracle(MakeRandomCoverage(7, 12, 0.3, 2));
  const auto parts = ClassifyMonotoneElements(oracle, Iota(7));
  EXPECT_EQ(parts.monotone, Iota(7));
  EXPECT_TRUE(parts.nonmonotone.empty());
}

TEST(ClassifyTest, StarCenterIsNonMonotone) {
  const RefCut ref = Star();
  EXPECT_EQ(ref(Iota(5)), 0.0);
  EXPECT_EQ(ref({1, 2, 3, 4}), 4.0);
  const auto parts = ClassifyMonotoneElements(Oracle(ref.Build()), Iota(5));
  ASSERT_FALSE(parts.nonmonotone.empty());
  EXPECT_EQ(parts.nonmonotone.front(), 0u);
  // Each leaf x has f(T) - f(T - x) = -1 as well.
  EXPECT_EQ(parts.nonmonotone, Iota(5));
}

TEST(ClassifyTest, StarLeavesAloneAreMonotone) {
  const auto parts =
      ClassifyMonotoneElements(Oracle(Star().Build()), ElementSet{1, 2, 3, 4});
  EXPECT_EQ(parts.monotone, ElementSet({1, 2, 3, 4}));
}

TEST(ClassifyTest, EmptySet) {
  const auto parts = ClassifyMonotoneElements(Oracle(Star().Build()), {});
  EXPECT_TRUE(parts.monotone.empty());
  EXPECT_TRUE(parts.nonmonotone.empty());
}

TEST(FastExactSmpTest, AllMonotoneReturnsGround) {
  Oracle oracle(MakeRandomCoverage(6, 12, 0.3, 6));
  const auto result = FastExactSmp(oracle, Iota(6), 6, kInf);
  EXPECT_EQ(result.set, Iota(6));
  EXPECT_EQ(result.nonmonotone, 0u);
}

TEST(FastExactSmpTest, StarBestOfLeavesAndAll) {
  const RefCut ref = Star();
  const auto result = FastExactSmp(Oracle(ref.Build()), Iota(5), 5, kInf);
  EXPECT_EQ(result.value, std::max(ref({1, 2, 3, 4}), ref(Iota(5))));
  EXPECT_EQ(ref(result.set), 4.0);
}

TEST(FastExactSmpTest, MatchesExactOnSmallCuts) {
  std::mt19937_64 rng(19);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 3 + trial % 8;
    const RefCut ref = testing::RandomRefCut(n, 0.4, rng, trial % 2 == 1);
    Oracle oracle(ref.Build());
    const auto fast = FastExactSmp(oracle, Iota(n), n, kInf);
    const auto exact = ExactSmp(oracle, Iota(n), n, kInf);
    EXPECT_NEAR(fast.value, exact.value, 1e-9);
    EXPECT_NEAR(fast.value, testing::RefMax(ref, n, n), 1e-9);
  }
}

TEST(FastExactSmpTest, FallsBackWhenBudgetIsBinding) {
  const RefCut ref = FourCycle();
  const auto result = FastExactSmp(Oracle(ref.Build()), Iota(4), 1, kInf);
  EXPECT_EQ(result.value, testing::RefMax(ref, 4, 1));
}

TEST(BucketStateTest, PlacesInFirstFittingBucket) {
  const RefCoverage ref{{{0, 1}, {0, 1}, {2}, {3, 4}}};
  Oracle oracle(ref.Build());
  BucketState buckets(oracle, 2, 1);
  EXPECT_EQ(buckets.Offer(0, 1.0), std::optional<std::size_t>(0));
  EXPECT_EQ(buckets.Offer(1, 1.0), std::optional<std::size_t>(1));
  EXPECT_EQ(buckets.Offer(3, 1.0), std::nullopt);  // both buckets full
  EXPECT_EQ(buckets.Offer(0, 0.0), std::nullopt);  // already stored
  EXPECT_TRUE(buckets.CheckInvariants());
  EXPECT_EQ(buckets.Union(), ElementSet({0, 1}));
  buckets.Clear();
  EXPECT_EQ(buckets.stored(), 0u);
}

}  // namespace
}  // namespace subcover
