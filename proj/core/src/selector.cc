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

#include "subselect/selector.h"

#include <cstdio>
#include <string>
#include <utility>

#include "subselect/error.h"
#include "subselect/facility_location.h"

namespace subselect {
namespace {

void PrintProgress(const ProgressRecord& r) {
  std::fprintf(stderr,
               "step %zu: index %zu gain %.17g objective %.17g "
               "evaluations %zu\n",
               r.step, r.index, r.gain, r.objective_value, r.evaluations);
}

}  // namespace

void FittedSelector::CheckRows(std::size_t rows) const {
  if (rows != ground_set_size_) {
    throw ValidationError("transform given " + std::to_string(rows) +
                          " rows but the selector was fit on " +
                          std::to_string(ground_set_size_));
  }
}

FeatureMatrix FittedSelector::Transform(const FeatureMatrix& data) const {
  CheckRows(data.n_examples());
  return data.SelectRows(result_.ranking);
}

RealMatrix FittedSelector::Transform(const RealMatrix& data) const {
  CheckRows(data.rows());
  return data.SelectRows(result_.ranking);
}

Selector::Selector(SelectorConfig config) : config_(std::move(config)) {
  if (config_.k == 0) throw ValidationError("k must be at least 1");
  switch (config_.objective) {
    case ObjectiveKind::kFeatureBased:
      if (config_.similarity.has_value()) {
        throw ValidationError(
            "a feature-based selector does not take a similarity source");
      }
      if (!config_.saturator.has_value()) config_.saturator = Saturator::kSqrt;
      break;
    case ObjectiveKind::kFacilityLocation:
      if (config_.saturator.has_value()) {
        throw ValidationError(
            "a facility-location selector does not take a concave function");
      }
      if (!config_.weights.empty()) {
        throw ValidationError(
            "a facility-location selector does not take feature weights");
      }
      break;
    case ObjectiveKind::kUserSupplied:
      if (config_.saturator.has_value() || config_.similarity.has_value() ||
          !config_.weights.empty()) {
        throw ValidationError(
            "a user-supplied objective takes no saturator, similarity or "
            "weights");
      }
      break;
  }
}

FittedSelector Selector::Run(SubmodularObjective& objective) const {
  MaximizeOptions options;
  options.k = config_.k;
  options.naive_rounds = config_.naive_rounds;
  options.initial = config_.initial;
  options.parallelism = config_.parallelism;
  if (config_.verbose) {
    options.progress = config_.progress ? config_.progress : PrintProgress;
  }
  SelectionResult result = Maximize(objective, options);
  return FittedSelector(std::move(result), objective.size());
}

SimilarityMatrix Selector::BuildSimilarity(const RealMatrix& data) const {
  switch (config_.similarity.value_or(SimilarityKind::kPrecomputed)) {
    case SimilarityKind::kSquaredCorrelation:
      return SquaredCorrelationSimilarity(data);
    case SimilarityKind::kCosine:
      return CosineSimilarity(data, config_.clamp_negative_cosine);
    case SimilarityKind::kPrecomputed:
      break;
  }
  if (data.rows() != data.cols()) {
    throw ValidationError(
        "a precomputed similarity must be square; got " +
        std::to_string(data.rows()) + "x" + std::to_string(data.cols()));
  }
  return SimilarityMatrix::Dense(data.rows(), data.values());
}

FittedSelector Selector::Fit(const FeatureMatrix& data) const {
  return Fit(data.values());
}

FittedSelector Selector::Fit(const RealMatrix& data) const {
  switch (config_.objective) {
    case ObjectiveKind::kFeatureBased: {
      FeatureBased objective(FeatureMatrix(data), *config_.saturator,
                             config_.weights);
      return Run(objective);
    }
    case ObjectiveKind::kFacilityLocation: {
      FacilityLocation objective(BuildSimilarity(data));
      return Run(objective);
    }
    case ObjectiveKind::kUserSupplied:
      break;
  }
  throw ValidationError(
      "a user-supplied selector must be fit on a SubmodularObjective");
}

FittedSelector Selector::Fit(const SimilarityMatrix& similarity) const {
  if (config_.objective != ObjectiveKind::kFacilityLocation) {
    throw ValidationError(
        "only a facility-location selector can be fit on a similarity "
        "matrix");
  }
  if (config_.similarity.value_or(SimilarityKind::kPrecomputed) !=
      SimilarityKind::kPrecomputed) {
    throw ValidationError(
        "selector builds its own similarity from features; pass the feature "
        "matrix instead");
  }
  FacilityLocation objective(similarity);
  return Run(objective);
}

FittedSelector Selector::Fit(SubmodularObjective& objective) const {
  if (config_.objective != ObjectiveKind::kUserSupplied) {
    throw ValidationError(
        "only a user-supplied selector can be fit on an objective");
  }
  return Run(objective);
}

FeatureMatrix Selector::FitTransform(const FeatureMatrix& data) const {
  return Fit(data).Transform(data);
}

RealMatrix Selector::FitTransform(const RealMatrix& data) const {
  return Fit(data).Transform(data);
}

}  // namespace subselect
