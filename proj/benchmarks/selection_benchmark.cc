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

#include <random>
#include <vector>

#include "benchmark/benchmark.h"
#include "subselect/facility_location.h"
#include "subselect/feature_based.h"
#include "subselect/matrix.h"
#include "subselect/optimizer.h"

namespace subselect {
namespace {

FeatureMatrix Features(std::size_t n, std::size_t d) {
  std::mt19937_64 rng(42);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> values(n * d);
  for (double& v : values) v = u(rng);
  return FeatureMatrix(n, d, std::move(values));
}

SimilarityMatrix Similarity(std::size_t n) {
  std::mt19937_64 rng(43);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<double> values(n * n);
  for (double& v : values) v = u(rng);
  return SimilarityMatrix::Dense(n, std::move(values));
}

// Args: n, k, naive_rounds.
void BM_FeatureBased(benchmark::State& state) {
  FeatureBased f(Features(state.range(0), 50), Saturator::kSqrt);
  MaximizeOptions options;
  options.k = state.range(1);
  options.naive_rounds = state.range(2);
  std::size_t evaluations = 0;
  for (auto _ : state) {
    const SelectionResult r = Maximize(f, options);
    evaluations = r.evaluations;
    benchmark::DoNotOptimize(r.gains.data());
  }
  state.counters["evaluations"] = static_cast<double>(evaluations);
}
BENCHMARK(BM_FeatureBased)
    ->Args({10000, 100, 0})
    ->Args({10000, 100, 10})
    ->Args({10000, 100, 100})
    ->Unit(benchmark::kMillisecond);

void BM_FacilityLocationDense(benchmark::State& state) {
  FacilityLocation f(Similarity(state.range(0)));
  MaximizeOptions options;
  options.k = state.range(1);
  options.naive_rounds = state.range(2);
  std::size_t evaluations = 0;
  for (auto _ : state) {
    const SelectionResult r = Maximize(f, options);
    evaluations = r.evaluations;
    benchmark::DoNotOptimize(r.gains.data());
  }
  state.counters["evaluations"] = static_cast<double>(evaluations);
}
BENCHMARK(BM_FacilityLocationDense)
    ->Args({2000, 100, 0})
    ->Args({2000, 100, 5})
    ->Args({2000, 100, 100})
    ->Unit(benchmark::kMillisecond);

void BM_FacilityLocationSparse(benchmark::State& state) {
  const std::size_t n = state.range(0);
  std::mt19937_64 rng(44);
  std::uniform_real_distribution<double> u(0.0, 1.0);
  std::vector<Triple> triples;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (u(rng) < 0.01) triples.push_back({i, j, u(rng)});
    }
  }
  FacilityLocation f(SimilarityMatrix::FromTriples(n, triples));
  MaximizeOptions options;
  options.k = state.range(1);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Maximize(f, options).gains.data());
  }
}
BENCHMARK(BM_FacilityLocationSparse)
    ->Args({5000, 100})
    ->Unit(benchmark::kMillisecond);

void BM_NaiveRoundParallelism(benchmark::State& state) {
  FeatureBased f(Features(50000, 50), Saturator::kSqrt);
  MaximizeOptions options;
  options.k = 5;
  options.naive_rounds = 5;
  options.parallelism = state.range(0);
  for (auto _ : state) {
    benchmark::DoNotOptimize(Maximize(f, options).gains.data());
  }
}
BENCHMARK(BM_NaiveRoundParallelism)->Arg(1)->Arg(2)->Arg(4)->Unit(
    benchmark::kMillisecond);

void BM_SquaredCorrelation(benchmark::State& state) {
  const FeatureMatrix data = Features(state.range(0), 50);
  for (auto _ : state) {
    benchmark::DoNotOptimize(SquaredCorrelationSimilarity(data.values()));
  }
}
BENCHMARK(BM_SquaredCorrelation)->Arg(1000)->Unit(benchmark::kMillisecond);

}  // namespace
}  // namespace subselect

BENCHMARK_MAIN();
