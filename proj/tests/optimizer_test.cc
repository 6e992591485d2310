// Copyright 2026 The subselect Authors.
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

#include "subselect/optimizer.h"

#include <limits>
#include <numeric>
#include <random>
#include <stdexcept>
#include <vector>

#include "gtest/gtest.h"
#include "subselect/candidate_queue.h"
#include "subselect/error.h"
#include "subselect/facility_location.h"
#include "subselect/feature_based.h"
#include "test_util.h"

namespace subselect {
namespace {

using testing::ModularObjective;
using testing::RandomFeatures;
using testing::RandomSimilarity;
using testing::SmallSimilarity;

std::size_t NaiveEvaluations(std::size_t n, std::size_t k) {
  std::size_t total = 0;
  for (std::size_t i = 0; i < k; ++i) total += n - i;
  return total;
}

MaximizeOptions Options(std::size_t k, std::size_t naive_rounds = 0,
                        std::size_t parallelism = 1) {
  MaximizeOptions o;
  o.k = k;
  o.naive_rounds = naive_rounds;
  o.parallelism = parallelism;
  return o;
}

TEST(CandidateQueueTest, OrdersByBoundThenIndex) {
  CandidateQueue q({{1.0, 4, 0}, {2.0, 9, 0}, {2.0, 3, 0}, {0.5, 0, 0}});
  q.Push({1.0, 1, 0});
  std::vector<std::size_t> order;
  while (!q.empty()) order.push_back(q.Pop().index);
  EXPECT_EQ(order, (std::vector<std::size_t>{3, 9, 1, 4, 0}));
  EXPECT_THROW(q.Pop(), PreconditionError);
}

TEST(NaiveGreedyStepTest, ModularArgmax) {
  ModularObjective f({3, 1, 2});
  const std::vector<std::size_t> candidates = {0, 1, 2};
  const StepResult step = NaiveGreedyStep(f, candidates, 1);
  EXPECT_EQ(step.index, 0u);
  EXPECT_EQ(step.gain, 3.0);
  EXPECT_EQ(step.evaluations, 3u);
  EXPECT_EQ(f.selected(), (std::vector<std::size_t>{0}));
}

TEST(NaiveGreedyStepTest, TiesGoToSmallestIndex) {
  ModularObjective f({1, 1, 1, 1});
  const std::vector<std::size_t> candidates = {3, 2, 1};
  EXPECT_EQ(NaiveGreedyStep(f, candidates, 1).index, 1u);
}

TEST(NaiveGreedyStepTest, FacilityLocationPicksLargestSingleton) {
  // Singleton values are 1.7, 1.8 and 1.5.
  FacilityLocation f(SmallSimilarity());
  const std::vector<std::size_t> candidates = {0, 1, 2};
  std::vector<double> gains;
  const StepResult step = NaiveGreedyStep(f, candidates, 1, &gains);
  EXPECT_EQ(step.index, 1u);
  EXPECT_NEAR(step.gain, 1.8, 1e-15);
  ASSERT_EQ(gains.size(), 3u);
  EXPECT_NEAR(gains[0], 1.7, 1e-15);
  EXPECT_NEAR(gains[2], 1.5, 1e-15);
}

TEST(NaiveGreedyStepTest, EmptyCandidatesRejected) {
  ModularObjective f({1});
  EXPECT_THROW(NaiveGreedyStep(f, {}, 1), PreconditionError);
}

TEST(LazyGreedyStepTest, FirstStepMatchesNaive) {
  FacilityLocation lazy(SmallSimilarity());
  std::vector<QueueEntry> seeds;
  for (std::size_t v = 0; v < 3; ++v) {
    seeds.push_back({std::numeric_limits<double>::infinity(), v,
                     kNeverEvaluated});
  }
  CandidateQueue queue(seeds);
  const StepResult step = LazyGreedyStep(lazy, queue, 0);
  EXPECT_GE(step.evaluations, 1u);
  EXPECT_EQ(step.index, 1u);
  EXPECT_NEAR(step.gain, 1.8, 1e-15);
  EXPECT_EQ(queue.size(), 2u);
}

TEST(LazyGreedyStepTest, ModularNeedsOneRefreshPerStepAfterTheFirst) {
  // Modular gains never move, so after the first full refresh only the top
  // entry is re-evaluated before it is taken.
  ModularObjective f({3, 1, 2, 5, 4});
  const SelectionResult r = Maximize(f, Options(5));
  EXPECT_EQ(r.ranking, (std::vector<std::size_t>{3, 4, 0, 2, 1}));
  EXPECT_EQ(r.gains, (std::vector<double>{5, 4, 3, 2, 1}));
  // 5 evaluations for the first step, then one per remaining step.
  EXPECT_EQ(r.evaluations, 5u + 4u);
}

TEST(LazyGreedyStepTest, EmptyQueueRejected) {
  ModularObjective f({1});
  CandidateQueue queue;
  EXPECT_THROW(LazyGreedyStep(f, queue, 0), PreconditionError);
}

TEST(MaximizeTest, LazyMatchesNaiveOnRandomFeatureBased) {
  std::mt19937_64 rng(29);
  const auto feats = RandomFeatures(rng, 200, 20);
  FeatureBased lazy(feats, Saturator::kSqrt);
  FeatureBased naive(feats, Saturator::kSqrt);
  const SelectionResult a = Maximize(lazy, Options(25, 0));
  const SelectionResult b = Maximize(naive, Options(25, 25));
  EXPECT_EQ(a.ranking, b.ranking);
  EXPECT_EQ(a.gains, b.gains);
  EXPECT_EQ(b.evaluations, NaiveEvaluations(200, 25));
  EXPECT_LT(a.evaluations, b.evaluations);
}

TEST(MaximizeTest, HybridSwitchOverDoesNotChangeResult) {
  std::mt19937_64 rng(31);
  const auto sim = RandomSimilarity(rng, 150);
  FacilityLocation f(sim);
  const SelectionResult reference = Maximize(f, Options(30, 30));
  for (const std::size_t rounds : {0, 1, 2, 7, 29, 30, 100}) {
    const SelectionResult r = Maximize(f, Options(30, rounds));
    EXPECT_EQ(r.ranking, reference.ranking) << "naive_rounds " << rounds;
    EXPECT_EQ(r.gains, reference.gains) << "naive_rounds " << rounds;
    EXPECT_LE(r.evaluations, reference.evaluations);
  }
}

TEST(MaximizeTest, ParallelismDoesNotChangeResult) {
  std::mt19937_64 rng(37);
  const auto feats = RandomFeatures(rng, 1200, 10);
  FeatureBased f(feats, Saturator::kLog);
  const SelectionResult serial = Maximize(f, Options(20, 20, 1));
  for (const std::size_t p : {2, 3, 4, 8}) {
    EXPECT_EQ(Maximize(f, Options(20, 20, p)), serial) << "parallelism " << p;
    EXPECT_EQ(Maximize(f, Options(20, 5, p)).ranking, serial.ranking);
  }
}

TEST(MaximizeTest, InitialSelectionReplaysUserOrder) {
  FacilityLocation f(SmallSimilarity());
  MaximizeOptions o = Options(3);
  o.initial = {2, 0, 1};
  const SelectionResult r = Maximize(f, o);
  EXPECT_EQ(r.ranking, o.initial);
  // f({2}) = 1.5; then {2,0}: 1 + .5 + 1 = 2.5; then {0,1,2} = 3.
  EXPECT_NEAR(r.gains[0], 1.5, 1e-15);
  EXPECT_NEAR(r.gains[1], 1.0, 1e-15);
  EXPECT_NEAR(r.gains[2], 0.5, 1e-15);
}

TEST(MaximizeTest, InitialThenGreedy) {
  ModularObjective f({3, 1, 2, 5});
  MaximizeOptions o = Options(3, 1);
  o.initial = {1};
  const SelectionResult r = Maximize(f, o);
  EXPECT_EQ(r.ranking, (std::vector<std::size_t>{1, 3, 0}));
  EXPECT_EQ(r.gains, (std::vector<double>{1, 5, 3}));
}

TEST(MaximizeTest, KLargerThanGroundSetSelectsEverything) {
  std::mt19937_64 rng(41);
  FeatureBased f(RandomFeatures(rng, 7, 3), Saturator::kSqrt);
  const SelectionResult r = Maximize(f, Options(50));
  ASSERT_EQ(r.ranking.size(), 7u);
  std::vector<std::size_t> sorted = r.ranking;
  std::sort(sorted.begin(), sorted.end());
  std::vector<std::size_t> all(7);
  std::iota(all.begin(), all.end(), std::size_t{0});
  EXPECT_EQ(sorted, all);
}

TEST(MaximizeTest, Validation) {
  ModularObjective f({1, 2, 3});
  EXPECT_THROW(Maximize(f, Options(0)), ValidationError);
  MaximizeOptions dup = Options(3);
  dup.initial = {1, 1};
  EXPECT_THROW(Maximize(f, dup), ValidationError);
  MaximizeOptions range = Options(3);
  range.initial = {3};
  EXPECT_THROW(Maximize(f, range), IndexError);
  MaximizeOptions too_many = Options(1);
  too_many.initial = {0, 1};
  EXPECT_THROW(Maximize(f, too_many), ValidationError);
}

TEST(MaximizeTest, GainsNonIncreasingAndTelescoping) {
  std::mt19937_64 rng(43);
  for (int trial = 0; trial < 20; ++trial) {
    const auto sim = RandomSimilarity(rng, 80);
    FacilityLocation f(sim);
    const SelectionResult r = Maximize(f, Options(20, trial % 5));
    for (std::size_t i = 1; i < r.gains.size(); ++i) {
      EXPECT_LE(r.gains[i], r.gains[i - 1] + 1e-9);
    }
    const double direct = FacilityLocationValue(sim, r.ranking);
    EXPECT_NEAR(r.value(), direct, 1e-9 * direct);
  }
}

TEST(MaximizeTest, ProgressReportsEveryStep) {
  FacilityLocation f(SmallSimilarity());
  std::vector<ProgressRecord> records;
  MaximizeOptions o = Options(3, 1);
  o.progress = [&](const ProgressRecord& r) { records.push_back(r); };
  const SelectionResult r = Maximize(f, o);
  ASSERT_EQ(records.size(), 3u);
  double total = 0.0;
  for (std::size_t i = 0; i < 3; ++i) {
    total += r.gains[i];
    EXPECT_EQ(records[i].step, i);
    EXPECT_EQ(records[i].index, r.ranking[i]);
    EXPECT_EQ(records[i].objective_value, total);
  }
  EXPECT_EQ(records.back().evaluations, r.evaluations);
  EXPECT_EQ(records.front().evaluations, 3u);
}

class ThrowingObjective : public SubmodularObjective {
 public:
  ThrowingObjective() : SubmodularObjective(1000) {}

 protected:
  double ComputeGain(std::size_t v) const override {
    if (v == 999) throw std::runtime_error("gain failure");
    return 1.0;
  }
  void ApplyUpdate(std::size_t) override {}
  void ResetState() override {}
};

TEST(EvaluateGainsTest, WorkerExceptionsPropagate) {
  ThrowingObjective f;
  EXPECT_THROW(Maximize(f, Options(2, 2, 4)), std::runtime_error);
}

}  // namespace
}  // namespace subselect
