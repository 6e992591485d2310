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

#ifndef SUBSELECT_FEATURE_BASED_H_
#define SUBSELECT_FEATURE_BASED_H_

#include <cstddef>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "subselect/matrix.h"
#include "subselect/objective.h"

namespace subselect {

// Concave, non-decreasing function with phi(0) = 0 applied per feature.
enum class Saturator {
  kSqrt,  // sqrt(t)
  kLog,   // ln(1 + t)
};

double Saturate(Saturator saturator, double t);

// "sqrt" or "log"; throws ValidationError otherwise.
Saturator ParseSaturator(std::string_view name);
std::string SaturatorName(Saturator saturator);

// f(X) = sum_d w_d * phi(sum over x in X of x_d).
//
// The state is feature_sum[d], the running per-feature total of the
// selection. Features where the candidate is zero contribute nothing and are
// skipped.
class FeatureBased : public SubmodularObjective {
 public:
  // Empty `weights` means all ones. Otherwise weights must have one
  // non-negative entry per feature.
  FeatureBased(FeatureMatrix features, Saturator saturator,
               std::vector<double> weights = {});

  const FeatureMatrix& features() const { return features_; }
  Saturator saturator() const { return saturator_; }
  const std::vector<double>& weights() const { return weights_; }
  const std::vector<double>& feature_sum() const { return feature_sum_; }

 protected:
  double ComputeGain(std::size_t v) const override;
  void ApplyUpdate(std::size_t v) override;
  void ResetState() override;

 private:
  FeatureMatrix features_;
  Saturator saturator_;
  std::vector<double> weights_;
  std::vector<double> feature_sum_;
};

// Validates and fills in default feature weights.
std::vector<double> ResolveFeatureWeights(std::vector<double> weights,
                                          std::size_t n_features);

// Direct evaluation of the feature-based value of `subset`.
double FeatureBasedValue(const FeatureMatrix& features,
                         std::span<const double> weights, Saturator saturator,
                         std::span<const std::size_t> subset);

}  // namespace subselect

#endif  // SUBSELECT_FEATURE_BASED_H_
