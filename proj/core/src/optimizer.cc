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

#include <algorithm>
#include <exception>
#include <limits>
#include <numeric>
#include <string>
#include <thread>
#include <utility>
#include <vector>

#include "subselect/error.h"

namespace subselect {
namespace {

// Below this many candidates per thread, extra threads cost more than they
// save.
constexpr std::size_t kMinCandidatesPerThread = 64;

void ValidateOptions(const SubmodularObjective& objective,
                     const MaximizeOptions& options) {
  if (options.k == 0) throw ValidationError("k must be at least 1");
  if (options.initial.size() > options.k) {
    throw ValidationError("initial selection of " +
                          std::to_string(options.initial.size()) +
                          " elements exceeds k = " + std::to_string(options.k));
  }
  std::vector<bool> seen(objective.size(), false);
  for (const std::size_t v : options.initial) {
    if (v >= objective.size()) {
      throw IndexError("initial index " + std::to_string(v) +
                       " outside ground set of size " +
                       std::to_string(objective.size()));
    }
    if (seen[v]) {
      throw ValidationError("initial index " + std::to_string(v) +
                            " appears more than once");
    }
    seen[v] = true;
  }
}

}  // namespace

double SelectionResult::value() const {
  return std::accumulate(gains.begin(), gains.end(), 0.0);
}

void EvaluateGains(const SubmodularObjective& objective,
                   std::span<const std::size_t> candidates,
                   std::size_t parallelism, std::span<double> gains) {
  const std::size_t count = candidates.size();
  const std::size_t threads = std::max<std::size_t>(
      1, std::min(parallelism, count / kMinCandidatesPerThread));
  if (threads <= 1) {
    for (std::size_t i = 0; i < count; ++i) {
      gains[i] = objective.GainUnchecked(candidates[i]);
    }
    return;
  }

  std::vector<std::exception_ptr> errors(threads);
  auto work = [&](std::size_t t) {
    const std::size_t begin = count * t / threads;
    const std::size_t end = count * (t + 1) / threads;
    try {
      for (std::size_t i = begin; i < end; ++i) {
        gains[i] = objective.GainUnchecked(candidates[i]);
      }
    } catch (...) {
      errors[t] = std::current_exception();
    }
  };
  {
    std::vector<std::jthread> workers;
    workers.reserve(threads - 1);
    for (std::size_t t = 1; t < threads; ++t) workers.emplace_back(work, t);
    work(0);
  }
  for (const auto& error : errors) {
    if (error) std::rethrow_exception(error);
  }
}

StepResult NaiveGreedyStep(SubmodularObjective& objective,
                           std::span<const std::size_t> candidates,
                           std::size_t parallelism,
                           std::vector<double>* gains) {
  if (candidates.empty()) {
    throw PreconditionError("naive greedy step with no candidates");
  }
  std::vector<double> local;
  std::vector<double>& out = gains != nullptr ? *gains : local;
  out.resize(candidates.size());
  EvaluateGains(objective, candidates, parallelism, out);

  std::size_t best = 0;
  for (std::size_t i = 1; i < candidates.size(); ++i) {
    if (out[i] > out[best] ||
        (out[i] == out[best] && candidates[i] < candidates[best])) {
      best = i;
    }
  }
  objective.Update(candidates[best]);
  return {candidates[best], out[best], candidates.size()};
}

StepResult LazyGreedyStep(SubmodularObjective& objective,
                          CandidateQueue& queue, std::size_t current_iter) {
  StepResult step;
  while (true) {
    if (queue.empty()) {
      throw PreconditionError("lazy greedy step with an empty queue");
    }
    const QueueEntry top = queue.Pop();
    if (top.stamp == current_iter) {
      objective.Update(top.index);
      step.index = top.index;
      step.gain = top.bound;
      return step;
    }
    const double gain = objective.GainUnchecked(top.index);
    ++step.evaluations;
    queue.Push({gain, top.index, current_iter});
  }
}

SelectionResult Maximize(SubmodularObjective& objective,
                         const MaximizeOptions& options) {
  ValidateOptions(objective, options);
  objective.Reset();

  const std::size_t n = objective.size();
  const std::size_t target = std::min(options.k, n);
  SelectionResult result;
  result.ranking.reserve(target);
  result.gains.reserve(target);
  double value = 0.0;

  auto record = [&](std::size_t index, double gain, std::size_t evaluations) {
    result.ranking.push_back(index);
    result.gains.push_back(gain);
    result.evaluations += evaluations;
    value += gain;
    if (options.progress) {
      options.progress({result.ranking.size() - 1, index, gain, value,
                        result.evaluations});
    }
  };

  for (const std::size_t v : options.initial) {
    const double gain = objective.Gain(v);
    objective.Update(v);
    record(v, gain, 1);
  }

  std::vector<std::size_t> candidates;
  candidates.reserve(n - objective.selected().size());
  for (std::size_t v = 0; v < n; ++v) {
    if (!objective.is_selected(v)) candidates.push_back(v);
  }

  const std::size_t naive_steps =
      std::min(options.naive_rounds, target - result.ranking.size());
  std::vector<double> gains;
  for (std::size_t s = 0; s < naive_steps; ++s) {
    const StepResult step =
        NaiveGreedyStep(objective, candidates, options.parallelism, &gains);
    record(step.index, step.gain, step.evaluations);
    const auto pos = static_cast<std::ptrdiff_t>(
        std::find(candidates.begin(), candidates.end(), step.index) -
        candidates.begin());
    candidates.erase(candidates.begin() + pos);
    gains.erase(gains.begin() + pos);
  }

  if (result.ranking.size() == target) return result;

  // Gains from the last naive round bound the current ones from above; they
  // were measured one selection ago, so they start out stale.
  std::vector<QueueEntry> entries;
  entries.reserve(candidates.size());
  const bool seeded = naive_steps > 0;
  const std::size_t seed_stamp =
      seeded ? objective.selected().size() - 1 : kNeverEvaluated;
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const double bound =
        seeded ? gains[i] : std::numeric_limits<double>::infinity();
    entries.push_back({bound, candidates[i], seed_stamp});
  }
  CandidateQueue queue(std::move(entries));

  while (result.ranking.size() < target) {
    const StepResult step =
        LazyGreedyStep(objective, queue, objective.selected().size());
    record(step.index, step.gain, step.evaluations);
  }
  return result;
}

}  // namespace subselect
