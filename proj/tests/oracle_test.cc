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

#include "subselect/oracle.h"

#include <cmath>
#include <random>
#include <vector>

#include "gtest/gtest.h"
#include "subselect/facility_location.h"
#include "subselect/feature_based.h"
#include "test_util.h"

namespace subselect::oracle {
namespace {

using testing::ModularObjective;
using testing::RandomFeatures;
using testing::RandomSimilarity;
using testing::SmallSimilarity;

SetFunction Modular(std::vector<double> c) {
  return [c](std::span<const std::size_t> subset) {
    double total = 0.0;
    for (const std::size_t x : subset) total += c[x];
    return total;
  };
}

TEST(ChooseTest, SmallValues) {
  EXPECT_EQ(Choose(10, 3), 120.0);
  EXPECT_EQ(Choose(5, 0), 1.0);
  EXPECT_EQ(Choose(5, 5), 1.0);
  EXPECT_EQ(Choose(3, 4), 0.0);
  EXPECT_EQ(Choose(52, 5), 2598960.0);
}

TEST(BruteForceTest, ModularTopTwo) {
  const BruteForceResult r = BruteForceMax(Modular({3, 1, 2}), 3, 2);
  EXPECT_EQ(r.value, 5.0);
  EXPECT_EQ(r.subset, (std::vector<std::size_t>{0, 2}));
}

TEST(BruteForceTest, FullSet) {
  const auto s = SmallSimilarity();
  const BruteForceResult r = BruteForceMax(FacilityLocationFunction(s), 3, 3);
  EXPECT_EQ(r.subset, (std::vector<std::size_t>{0, 1, 2}));
  EXPECT_NEAR(r.value, 3.0, 1e-15);
}

TEST(BruteForceTest, FacilityLocationPairs) {
  // {0,1}: 1 + 1 + .3 = 2.3; {0,2}: 1 + .5 + 1 = 2.5; {1,2}: .5 + 1 + 1 = 2.5.
  const auto f = FacilityLocationFunction(SmallSimilarity());
  const std::vector<std::size_t> p01 = {0, 1}, p02 = {0, 2}, p12 = {1, 2};
  EXPECT_NEAR(f(p01), 2.3, 1e-15);
  EXPECT_NEAR(f(p02), 2.5, 1e-15);
  EXPECT_NEAR(f(p12), 2.5, 1e-15);
  const BruteForceResult r = BruteForceMax(f, 3, 2);
  EXPECT_NEAR(r.value, 2.5, 1e-15);
  // Exact tie; the lexicographically smaller pair wins.
  EXPECT_EQ(r.subset, (std::vector<std::size_t>{0, 2}));
}

TEST(BruteForceTest, RefusesHugeEnumerations) {
  EXPECT_THROW(BruteForceMax(Modular(std::vector<double>(60, 1.0)), 60, 10),
               EnumerationLimitError);
}

TEST(BruteForceTest, VisitsEverySubsetOnce) {
  std::size_t calls = 0;
  const SetFunction counting = [&](std::span<const std::size_t> s) {
    ++calls;
    EXPECT_EQ(s.size(), 4u);
    return 0.0;
  };
  BruteForceMax(counting, 9, 4);
  EXPECT_EQ(calls, 126u);
}

TEST(OracleEvaluationTest, AgreesWithIncrementalObjectives) {
  std::mt19937_64 rng(13);
  for (int trial = 0; trial < 50; ++trial) {
    const std::size_t n = 3 + rng() % 15;
    const auto sim = RandomSimilarity(rng, n);
    const auto feats = RandomFeatures(rng, n, 1 + rng() % 6);
    std::vector<std::size_t> subset;
    for (std::size_t v = 0; v < n; ++v) {
      if (rng() % 2) subset.push_back(v);
    }
    const double fl = EvalFacilityLocation(sim, subset);
    EXPECT_NEAR(fl, FacilityLocationValue(sim, subset), 1e-9 * fl);
    const double fb = EvalFeatureBased(feats, {}, Saturator::kSqrt, subset);
    EXPECT_NEAR(fb, FeatureBasedValue(feats, {}, Saturator::kSqrt, subset),
                1e-9 * std::max(1.0, fb));
  }
}

TEST(CheckRatioTest, ModularIsExact) {
  ModularObjective m({0.3, 2.0, 1.5, 0.1, 4.0, 0.2});
  const OracleReport report =
      CheckRatio(m, Modular({0.3, 2.0, 1.5, 0.1, 4.0, 0.2}), 3);
  EXPECT_EQ(report.ratio, 1.0);
  EXPECT_EQ(report.opt_set, (std::vector<std::size_t>{1, 2, 4}));
}

TEST(CheckRatioTest, RandomInstancesMeetGuarantee) {
  std::mt19937_64 rng(19);
  double worst_fb = 1.0, worst_fl = 1.0;
  for (int trial = 0; trial < 50; ++trial) {
    const auto feats = RandomFeatures(rng, 10, 4);
    subselect::FeatureBased fb(feats, Saturator::kSqrt);
    const OracleReport a =
        CheckRatio(fb, FeatureBasedFunction(feats, Saturator::kSqrt), 3);
    worst_fb = std::min(worst_fb, a.ratio);

    const auto sim = RandomSimilarity(rng, 10);
    subselect::FacilityLocation fl(sim);
    const OracleReport b = CheckRatio(fl, FacilityLocationFunction(sim), 3);
    worst_fl = std::min(worst_fl, b.ratio);
  }
  EXPECT_GE(worst_fb, kGreedyGuarantee);
  EXPECT_GE(worst_fl, kGreedyGuarantee);
}

TEST(CheckRatioTest, ZeroOptimumGivesRatioOne) {
  ModularObjective m({0, 0, 0});
  EXPECT_EQ(CheckRatio(m, Modular({0, 0, 0}), 2).ratio, 1.0);
}

// A non-submodular function where greedy is badly suboptimal: gains are
// modular for the greedy pick but pairs {1,2} are worth far more.
class PairBonus : public SubmodularObjective {
 public:
  PairBonus() : SubmodularObjective(3) {}

 protected:
  double ComputeGain(std::size_t v) const override {
    if (v == 0) return 1.0;
    const bool other = is_selected(v == 1 ? 2 : 1);
    return other ? 10.0 : 0.5;
  }
  void ApplyUpdate(std::size_t) override {}
  void ResetState() override {}
};

TEST(CheckRatioTest, ViolationCarriesBothSubsets) {
  PairBonus f;
  const SetFunction direct = [](std::span<const std::size_t> s) {
    bool has0 = false, has1 = false, has2 = false;
    for (const std::size_t x : s) {
      has0 |= x == 0;
      has1 |= x == 1;
      has2 |= x == 2;
    }
    return (has0 ? 1.0 : 0.0) + (has1 && has2 ? 10.5 : 0.5 * (has1 + has2));
  };
  try {
    CheckRatio(f, direct, 2);
    FAIL() << "expected RatioViolationError";
  } catch (const RatioViolationError& e) {
    EXPECT_EQ(e.report().opt_set, (std::vector<std::size_t>{1, 2}));
    EXPECT_EQ(e.report().greedy_set, (std::vector<std::size_t>{0, 1}));
    EXPECT_LT(e.report().ratio, kGreedyGuarantee);
  }
}

}  // namespace
}  // namespace subselect::oracle
