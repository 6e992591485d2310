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

#ifndef SUBSELECT_SELECTOR_H_
#define SUBSELECT_SELECTOR_H_

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "subselect/feature_based.h"
#include "subselect/matrix.h"
#include "subselect/objective.h"
#include "subselect/optimizer.h"

namespace subselect {

enum class ObjectiveKind {
  kFacilityLocation,
  kFeatureBased,
  // Any SubmodularObjective supplied by the caller at fit time.
  kUserSupplied,
};

// How a facility-location selector obtains its similarity matrix.
enum class SimilarityKind {
  kPrecomputed,
  kSquaredCorrelation,
  kCosine,
};

struct SelectorConfig {
  ObjectiveKind objective = ObjectiveKind::kFeatureBased;
  std::size_t k = 1;
  // Feature-based only; defaults to sqrt.
  std::optional<Saturator> saturator;
  // Feature-based only; empty means all ones.
  std::vector<double> weights;
  // Facility location only.
  std::optional<SimilarityKind> similarity;
  // With kCosine, map negative cosines to 0 instead of failing.
  bool clamp_negative_cosine = false;
  std::size_t naive_rounds = 0;
  std::vector<std::size_t> initial;
  std::size_t parallelism = 1;
  // Report each step to `progress`, or to stderr when no sink is set.
  bool verbose = false;
  ProgressSink progress;
};

// Result of Selector::Fit. Immutable; Transform may be called concurrently.
class FittedSelector {
 public:
  FittedSelector(SelectionResult result, std::size_t ground_set_size)
      : result_(std::move(result)), ground_set_size_(ground_set_size) {}

  const SelectionResult& result() const { return result_; }
  const std::vector<std::size_t>& ranking() const { return result_.ranking; }
  const std::vector<double>& gains() const { return result_.gains; }
  std::size_t ground_set_size() const { return ground_set_size_; }

  // Rows of `data` at the ranking, in selection order (not original order).
  // `data` must have one row per ground-set element.
  FeatureMatrix Transform(const FeatureMatrix& data) const;
  RealMatrix Transform(const RealMatrix& data) const;

 private:
  void CheckRows(std::size_t rows) const;

  SelectionResult result_;
  std::size_t ground_set_size_;
};

// Configure-then-fit front end over the objectives and the optimizer.
//
//   SelectorConfig config;
//   config.objective = ObjectiveKind::kFeatureBased;
//   config.k = 100;
//   config.saturator = Saturator::kSqrt;
//   FeatureMatrix subset = Selector(config).FitTransform(features);
class Selector {
 public:
  // Throws ValidationError for k = 0 or options that do not belong to the
  // chosen objective.
  explicit Selector(SelectorConfig config);

  const SelectorConfig& config() const { return config_; }

  // Feature-based selection, or facility location over a similarity built
  // from the rows (squared correlation or cosine). With kPrecomputed or no
  // similarity kind, a square matrix is read as the similarity itself.
  FittedSelector Fit(const FeatureMatrix& data) const;
  // As above; signed values are only accepted for facility location.
  FittedSelector Fit(const RealMatrix& data) const;
  // Facility location over a precomputed similarity.
  FittedSelector Fit(const SimilarityMatrix& similarity) const;
  // User-supplied objective.
  FittedSelector Fit(SubmodularObjective& objective) const;

  FeatureMatrix FitTransform(const FeatureMatrix& data) const;
  RealMatrix FitTransform(const RealMatrix& data) const;

 private:
  FittedSelector Run(SubmodularObjective& objective) const;
  SimilarityMatrix BuildSimilarity(const RealMatrix& data) const;

  SelectorConfig config_;
};

}  // namespace subselect

#endif  // SUBSELECT_SELECTOR_H_
