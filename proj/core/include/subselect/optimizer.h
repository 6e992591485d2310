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

#ifndef SUBSELECT_OPTIMIZER_H_
#define SUBSELECT_OPTIMIZER_H_

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "subselect/candidate_queue.h"
#include "subselect/objective.h"

namespace subselect {

// Outcome of a greedy run. ranking[i] is the i-th element selected and
// gains[i] its marginal gain at the time it was added, so every prefix of the
// ranking is itself the greedy solution for that budget.
struct SelectionResult {
  std::vector<std::size_t> ranking;
  std::vector<double> gains;
  // Number of marginal-gain evaluations performed.
  std::size_t evaluations = 0;

  // Sum of gains, i.e. the objective value of the selected set.
  double value() const;

  friend bool operator==(const SelectionResult&,
                         const SelectionResult&) = default;
};

struct StepResult {
  std::size_t index = 0;
  double gain = 0.0;
  std::size_t evaluations = 0;
};

// One record per selected element when progress reporting is on.
struct ProgressRecord {
  std::size_t step = 0;
  std::size_t index = 0;
  double gain = 0.0;
  double objective_value = 0.0;
  std::size_t evaluations = 0;
};

using ProgressSink = std::function<void(const ProgressRecord&)>;

struct MaximizeOptions {
  // Cardinality budget, including `initial`. Must be >= 1.
  std::size_t k = 1;
  // Naive rounds to run before switching to lazy greedy. 0 is pure lazy
  // greedy; any value >= k is pure naive greedy. A good value is dataset
  // specific: tens to hundreds of rounds for feature-based functions, and
  // one to a few dozen for facility location, are reasonable starting
  // points.
  std::size_t naive_rounds = 0;
  // Elements forced into the selection first, in this order.
  std::vector<std::size_t> initial;
  // Worker threads used to evaluate gains inside a naive round.
  std::size_t parallelism = 1;
  ProgressSink progress;
};

// Writes GainUnchecked(candidates[i]) to gains[i], splitting the candidates
// across up to `parallelism` threads. The values do not depend on the
// thread count.
void EvaluateGains(const SubmodularObjective& objective,
                   std::span<const std::size_t> candidates,
                   std::size_t parallelism, std::span<double> gains);

// Evaluates every candidate, adds the one with the largest gain (smallest
// index among ties) to the objective and returns it. If `gains` is non-null
// it receives the gain of every candidate, aligned with `candidates`.
StepResult NaiveGreedyStep(SubmodularObjective& objective,
                           std::span<const std::size_t> candidates,
                           std::size_t parallelism,
                           std::vector<double>* gains = nullptr);

// Lazy greedy step. Pops the top entry; if it was computed at
// `current_iter` it is selected, otherwise its gain is recomputed, stamped
// with `current_iter` and pushed back. Selecting only fresh entries makes
// the choice identical to NaiveGreedyStep, ties included.
StepResult LazyGreedyStep(SubmodularObjective& objective,
                          CandidateQueue& queue, std::size_t current_iter);

// Resets `objective` and greedily selects min(k, n) elements: `initial`
// first, then `naive_rounds` naive steps, then lazy steps. The ranking does
// not depend on naive_rounds or parallelism.
SelectionResult Maximize(SubmodularObjective& objective,
                         const MaximizeOptions& options);

}  // namespace subselect

#endif  // SUBSELECT_OPTIMIZER_H_
