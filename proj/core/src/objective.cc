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

#include "subselect/objective.h"

#include <string>

#include "subselect/error.h"

namespace subselect {

SubmodularObjective::SubmodularObjective(std::size_t ground_set_size)
    : ground_set_size_(ground_set_size), in_selection_(ground_set_size, false) {
  if (ground_set_size_ == 0) {
    throw ValidationError("ground set must contain at least one element");
  }
}

void SubmodularObjective::CheckCandidate(std::size_t v) const {
  if (v >= ground_set_size_) {
    throw IndexError("index " + std::to_string(v) +
                     " outside ground set of size " +
                     std::to_string(ground_set_size_));
  }
  if (in_selection_[v]) {
    throw PreconditionError("index " + std::to_string(v) +
                            " is already selected");
  }
}

double SubmodularObjective::Gain(std::size_t v) const {
  CheckCandidate(v);
  return ComputeGain(v);
}

void SubmodularObjective::Update(std::size_t v) {
  CheckCandidate(v);
  ApplyUpdate(v);
  selected_.push_back(v);
  in_selection_[v] = true;
}

void SubmodularObjective::Reset() {
  ResetState();
  selected_.clear();
  in_selection_.assign(ground_set_size_, false);
}

}  // namespace subselect
