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

#include "subselect/feature_based.h"

#include <algorithm>
#include <cmath>
#include <sstream>
#include <utility>

#include "subselect/error.h"

namespace subselect {
namespace {

template <typename Phi>
double GainWith(Phi phi, std::span<const double> row,
                const std::vector<double>& sums,
                const std::vector<double>& weights) {
  double gain = 0.0;
  for (std::size_t d = 0; d < row.size(); ++d) {
    const double x = row[d];
    if (x == 0.0) continue;
    const double s = sums[d];
    gain += weights[d] * (phi(s + x) - phi(s));
  }
  return gain;
}

}  // namespace

double Saturate(Saturator saturator, double t) {
  switch (saturator) {
    case Saturator::kSqrt:
      return std::sqrt(t);
    case Saturator::kLog:
      return std::log1p(t);
  }
  return 0.0;
}

Saturator ParseSaturator(std::string_view name) {
  if (name == "sqrt") return Saturator::kSqrt;
  if (name == "log") return Saturator::kLog;
  throw ValidationError("unknown concave function '" + std::string(name) +
                        "'; expected sqrt or log");
}

std::string SaturatorName(Saturator saturator) {
  return saturator == Saturator::kSqrt ? "sqrt" : "log";
}

std::vector<double> ResolveFeatureWeights(std::vector<double> weights,
                                          std::size_t n_features) {
  if (weights.empty()) return std::vector<double>(n_features, 1.0);
  if (weights.size() != n_features) {
    std::ostringstream out;
    out << "got " << weights.size() << " feature weights for " << n_features
        << " features";
    throw ValidationError(out.str());
  }
  for (std::size_t d = 0; d < weights.size(); ++d) {
    if (!std::isfinite(weights[d]) || weights[d] < 0.0) {
      std::ostringstream out;
      out << "feature weight " << d << " = " << weights[d]
          << " is not a finite non-negative value";
      throw ConstraintViolationError(out.str());
    }
  }
  return weights;
}

FeatureBased::FeatureBased(FeatureMatrix features, Saturator saturator,
                           std::vector<double> weights)
    : SubmodularObjective(features.n_examples()),
      features_(std::move(features)),
      saturator_(saturator),
      weights_(ResolveFeatureWeights(std::move(weights),
                                     features_.n_features())),
      feature_sum_(features_.n_features(), 0.0) {}

double FeatureBased::ComputeGain(std::size_t v) const {
  const std::span<const double> row = features_.row(v);
  switch (saturator_) {
    case Saturator::kSqrt:
      return GainWith([](double t) { return std::sqrt(t); }, row,
                      feature_sum_, weights_);
    case Saturator::kLog:
      return GainWith([](double t) { return std::log1p(t); }, row,
                      feature_sum_, weights_);
  }
  return 0.0;
}

void FeatureBased::ApplyUpdate(std::size_t v) {
  const std::span<const double> row = features_.row(v);
  for (std::size_t d = 0; d < row.size(); ++d) feature_sum_[d] += row[d];
}

void FeatureBased::ResetState() {
  std::fill(feature_sum_.begin(), feature_sum_.end(), 0.0);
}

double FeatureBasedValue(const FeatureMatrix& features,
                         std::span<const double> weights, Saturator saturator,
                         std::span<const std::size_t> subset) {
  const std::size_t n = features.n_examples();
  const std::size_t dims = features.n_features();
  const std::vector<double> w =
      ResolveFeatureWeights({weights.begin(), weights.end()}, dims);
  std::vector<double> sums(dims, 0.0);
  for (const std::size_t x : subset) {
    if (x >= n) {
      throw IndexError("index " + std::to_string(x) +
                       " outside ground set of size " + std::to_string(n));
    }
    const auto row = features.row(x);
    for (std::size_t d = 0; d < dims; ++d) sums[d] += row[d];
  }
  double total = 0.0;
  for (std::size_t d = 0; d < dims; ++d) {
    total += w[d] * Saturate(saturator, sums[d]);
  }
  return total;
}

}  // namespace subselect
