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

#ifndef SUBSELECT_ORACLE_H_
#define SUBSELECT_ORACLE_H_

// Brute-force references for checking the incremental machinery. Nothing in
// here touches the sufficient statistics or gain code of the objectives: set
// values are recomputed from their definitions on every call.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "subselect/error.h"
#include "subselect/feature_based.h"
#include "subselect/matrix.h"
#include "subselect/objective.h"

namespace subselect::oracle {

// Enumerations larger than this many subsets are refused.
inline constexpr double kMaxSubsets = 1e7;

// 1 - 1/e.
inline constexpr double kGreedyGuarantee = 0.63212055882855767;

// Evaluates a set function from scratch.
using SetFunction = std::function<double(std::span<const std::size_t>)>;

// Sum over y of the largest S(x, y), x in subset; 0 for the empty subset.
double EvalFacilityLocation(const SimilarityMatrix& similarity,
                            std::span<const std::size_t> subset);

// Sum over d of w_d * phi(sum of x_d over the subset). Empty weights mean
// all ones.
double EvalFeatureBased(const FeatureMatrix& features,
                        std::span<const double> weights, Saturator saturator,
                        std::span<const std::size_t> subset);

SetFunction FacilityLocationFunction(SimilarityMatrix similarity);
SetFunction FeatureBasedFunction(FeatureMatrix features, Saturator saturator,
                                 std::vector<double> weights = {});

// Binomial coefficient as a double (exact up to 2^53).
double Choose(std::size_t n, std::size_t k);

class EnumerationLimitError : public Error {
 public:
  using Error::Error;
};

struct BruteForceResult {
  double value = 0.0;
  std::vector<std::size_t> subset;
};

// Maximizes `f` over all subsets of {0..n-1} of size min(k, n). Ties go to
// the lexicographically smallest subset. Throws EnumerationLimitError when
// C(n, k) exceeds kMaxSubsets.
BruteForceResult BruteForceMax(const SetFunction& f, std::size_t n,
                               std::size_t k);

struct OracleReport {
  double opt_value = 0.0;
  std::vector<std::size_t> opt_set;
  double greedy_value = 0.0;
  std::vector<std::size_t> greedy_set;
  // greedy_value / opt_value, or 1 when opt_value is 0.
  double ratio = 1.0;
};

// Raised by CheckRatio when greedy falls below the guarantee.
class RatioViolationError : public Error {
 public:
  RatioViolationError(const std::string& what, OracleReport report)
      : Error(what), report_(std::move(report)) {}
  const OracleReport& report() const { return report_; }

 private:
  OracleReport report_;
};

// Runs greedy on `objective` (lazy) and brute force on `f`, which must be
// the same set function. The greedy value is recomputed through `f`.
OracleReport CheckRatio(SubmodularObjective& objective, const SetFunction& f,
                        std::size_t k);

}  // namespace subselect::oracle

#endif  // SUBSELECT_ORACLE_H_
