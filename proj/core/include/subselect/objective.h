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

#ifndef SUBSELECT_OBJECTIVE_H_
#define SUBSELECT_OBJECTIVE_H_

#include <cstddef>
#include <vector>

namespace subselect {

// Base class for monotone submodular set functions maximized by the
// optimizer. An objective owns the sufficient statistics of the current
// selection and answers marginal-gain queries against them.
//
// To add a new function, derive from this class and implement ComputeGain,
// ApplyUpdate and ResetState. ComputeGain must be a pure read of the current
// state: the optimizer calls it concurrently for distinct candidates between
// updates. ApplyUpdate and ResetState are only called with exclusive access.
//
// The value of the empty selection is taken to be 0, so the gains recorded
// while building a selection telescope to the value of that selection.
class SubmodularObjective {
 public:
  explicit SubmodularObjective(std::size_t ground_set_size);
  virtual ~SubmodularObjective() = default;

  SubmodularObjective(const SubmodularObjective&) = default;
  SubmodularObjective& operator=(const SubmodularObjective&) = default;
  SubmodularObjective(SubmodularObjective&&) = default;
  SubmodularObjective& operator=(SubmodularObjective&&) = default;

  // Number of elements in the ground set.
  std::size_t size() const { return ground_set_size_; }

  // Elements applied so far, in the order they were applied.
  const std::vector<std::size_t>& selected() const { return selected_; }
  bool is_selected(std::size_t v) const { return in_selection_[v]; }

  // f(X + v) - f(X) for the current selection X. Throws IndexError when v is
  // out of range and PreconditionError when v is already selected.
  double Gain(std::size_t v) const;

  // Same as Gain without argument checks. The caller guarantees that v is in
  // range and not yet selected.
  double GainUnchecked(std::size_t v) const { return ComputeGain(v); }

  // Adds v to the selection. Same errors as Gain.
  void Update(std::size_t v);

  // Returns to the empty selection.
  void Reset();

 protected:
  virtual double ComputeGain(std::size_t v) const = 0;
  virtual void ApplyUpdate(std::size_t v) = 0;
  virtual void ResetState() = 0;

 private:
  void CheckCandidate(std::size_t v) const;

  std::size_t ground_set_size_;
  std::vector<std::size_t> selected_;
  std::vector<bool> in_selection_;
};

}  // namespace subselect

#endif  // SUBSELECT_OBJECTIVE_H_
