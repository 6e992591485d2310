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

#ifndef SUBSELECT_FACILITY_LOCATION_H_
#define SUBSELECT_FACILITY_LOCATION_H_

#include <cstddef>
#include <span>
#include <vector>

#include "subselect/matrix.h"
#include "subselect/objective.h"

namespace subselect {

// f(X) = sum over y of max over x in X of S(x, y), with the empty max equal
// to 0.
//
// The state is best_sim[y], the largest similarity any selected element
// credits to y. A gain costs O(n) on a dense matrix and O(nnz(row v)) on a
// sparse one; both forms add the same nonzero terms in the same column order,
// so they produce bit-identical gains.
class FacilityLocation : public SubmodularObjective {
 public:
  explicit FacilityLocation(SimilarityMatrix similarity);

  const SimilarityMatrix& similarity() const { return similarity_; }
  const std::vector<double>& best_sim() const { return best_sim_; }

 protected:
  double ComputeGain(std::size_t v) const override;
  void ApplyUpdate(std::size_t v) override;
  void ResetState() override;

 private:
  SimilarityMatrix similarity_;
  std::vector<double> best_sim_;
};

// Direct evaluation of the facility location value of `subset`.
double FacilityLocationValue(const SimilarityMatrix& similarity,
                             std::span<const std::size_t> subset);

}  // namespace subselect

#endif  // SUBSELECT_FACILITY_LOCATION_H_
