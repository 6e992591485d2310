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

#include "subselect/facility_location.h"

#include <algorithm>
#include <string>
#include <utility>

#include "subselect/error.h"

namespace subselect {

FacilityLocation::FacilityLocation(SimilarityMatrix similarity)
    : SubmodularObjective(similarity.size()),
      similarity_(std::move(similarity)),
      best_sim_(similarity_.size(), 0.0) {}

double FacilityLocation::ComputeGain(std::size_t v) const {
  double gain = 0.0;
  if (similarity_.is_sparse()) {
    const SimilarityMatrix::SparseRow row = similarity_.sparse_row(v);
    for (std::size_t k = 0; k < row.cols.size(); ++k) {
      const double delta = row.values[k] - best_sim_[row.cols[k]];
      if (delta > 0.0) gain += delta;
    }
    return gain;
  }
  const std::span<const double> row = similarity_.dense_row(v);
  for (std::size_t y = 0; y < row.size(); ++y) {
    const double delta = row[y] - best_sim_[y];
    if (delta > 0.0) gain += delta;
  }
  return gain;
}

void FacilityLocation::ApplyUpdate(std::size_t v) {
  if (similarity_.is_sparse()) {
    const SimilarityMatrix::SparseRow row = similarity_.sparse_row(v);
    for (std::size_t k = 0; k < row.cols.size(); ++k) {
      double& best = best_sim_[row.cols[k]];
      best = std::max(best, row.values[k]);
    }
    return;
  }
  const std::span<const double> row = similarity_.dense_row(v);
  for (std::size_t y = 0; y < row.size(); ++y) {
    best_sim_[y] = std::max(best_sim_[y], row[y]);
  }
}

void FacilityLocation::ResetState() {
  std::fill(best_sim_.begin(), best_sim_.end(), 0.0);
}

double FacilityLocationValue(const SimilarityMatrix& similarity,
                             std::span<const std::size_t> subset) {
  const std::size_t n = similarity.size();
  for (const std::size_t x : subset) {
    if (x >= n) {
      throw IndexError("index " + std::to_string(x) +
                       " outside ground set of size " + std::to_string(n));
    }
  }
  if (subset.empty()) return 0.0;
  std::vector<double> best(n, 0.0);
  for (const std::size_t x : subset) {
    for (std::size_t y = 0; y < n; ++y) {
      best[y] = std::max(best[y], similarity.At(x, y));
    }
  }
  double total = 0.0;
  for (const double b : best) total += b;
  return total;
}

}  // namespace subselect
