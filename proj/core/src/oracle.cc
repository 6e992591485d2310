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

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>

#include "subselect/optimizer.h"

namespace subselect::oracle {
namespace {

std::string Join(const std::vector<std::size_t>& v) {
  std::ostringstream out;
  out << "{";
  for (std::size_t i = 0; i < v.size(); ++i) out << (i ? "," : "") << v[i];
  out << "}";
  return out.str();
}

void CheckSubset(std::span<const std::size_t> subset, std::size_t n) {
  for (const std::size_t x : subset) {
    if (x >= n) throw IndexError("oracle: index " + std::to_string(x) +
                                 " out of range");
  }
}

}  // namespace

double EvalFacilityLocation(const SimilarityMatrix& similarity,
                        std::span<const std::size_t> subset) {
  CheckSubset(subset, similarity.size());
  double total = 0.0;
  for (std::size_t y = 0; y < similarity.size(); ++y) {
    double best = 0.0;
    for (const std::size_t x : subset) {
      const double s = similarity.At(x, y);
      if (s > best) best = s;
    }
    total += best;
  }
  return total;
}

double EvalFeatureBased(const FeatureMatrix& features,
                        std::span<const double> weights, Saturator saturator,
                        std::span<const std::size_t> subset) {
  CheckSubset(subset, features.n_examples());
  if (!weights.empty() && weights.size() != features.n_features()) {
    throw ValidationError("oracle: weight count does not match features");
  }
  double total = 0.0;
  for (std::size_t d = 0; d < features.n_features(); ++d) {
    double mass = 0.0;
    for (const std::size_t x : subset) mass += features(x, d);
    const double phi =
        saturator == Saturator::kSqrt ? std::sqrt(mass) : std::log(1.0 + mass);
    total += (weights.empty() ? 1.0 : weights[d]) * phi;
  }
  return total;
}

SetFunction FacilityLocationFunction(SimilarityMatrix similarity) {
  return [s = std::move(similarity)](std::span<const std::size_t> subset) {
    return EvalFacilityLocation(s, subset);
  };
}

SetFunction FeatureBasedFunction(FeatureMatrix features, Saturator saturator,
                                 std::vector<double> weights) {
  return [f = std::move(features), saturator,
          w = std::move(weights)](std::span<const std::size_t> subset) {
    return EvalFeatureBased(f, w, saturator, subset);
  };
}

double Choose(std::size_t n, std::size_t k) {
  if (k > n) return 0.0;
  k = std::min(k, n - k);
  double c = 1.0;
  for (std::size_t i = 1; i <= k; ++i) {
    c = c * static_cast<double>(n - k + i) / static_cast<double>(i);
  }
  return std::round(c);
}

BruteForceResult BruteForceMax(const SetFunction& f, std::size_t n,
                               std::size_t k) {
  k = std::min(k, n);
  const double count = Choose(n, k);
  if (count > kMaxSubsets) {
    std::ostringstream out;
    out << "refusing to enumerate C(" << n << ", " << k << ") = " << count
        << " subsets (limit " << kMaxSubsets << ")";
    throw EnumerationLimitError(out.str());
  }

  std::vector<std::size_t> subset(k);
  std::iota(subset.begin(), subset.end(), std::size_t{0});
  BruteForceResult best{f(subset), subset};
  if (k == 0) return best;

  // Advance to the next combination in lexicographic order.
  while (true) {
    std::size_t i = k;
    while (i > 0 && subset[i - 1] == n - k + (i - 1)) --i;
    if (i == 0) break;
    ++subset[i - 1];
    for (std::size_t j = i; j < k; ++j) subset[j] = subset[j - 1] + 1;
    const double value = f(subset);
    if (value > best.value) best = {value, subset};
  }
  return best;
}

OracleReport CheckRatio(SubmodularObjective& objective, const SetFunction& f,
                        std::size_t k) {
  MaximizeOptions options;
  options.k = k;
  const SelectionResult greedy = Maximize(objective, options);
  const BruteForceResult opt = BruteForceMax(f, objective.size(), k);

  OracleReport report;
  report.opt_value = opt.value;
  report.opt_set = opt.subset;
  report.greedy_set = greedy.ranking;
  report.greedy_value = f(greedy.ranking);
  report.ratio =
      report.opt_value == 0.0 ? 1.0 : report.greedy_value / report.opt_value;

  if (report.ratio < kGreedyGuarantee - 1e-12 || report.ratio > 1.0 + 1e-12) {
    std::ostringstream out;
    out.precision(17);
    out << "greedy/optimum ratio " << report.ratio << " outside ["
        << kGreedyGuarantee << ", 1]: greedy " << Join(report.greedy_set)
        << " = " << report.greedy_value << ", optimum " << Join(report.opt_set)
        << " = " << report.opt_value;
    throw RatioViolationError(out.str(), std::move(report));
  }
  return report;
}

}  // namespace subselect::oracle
