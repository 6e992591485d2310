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

#ifndef SUBSELECT_CANDIDATE_QUEUE_H_
#define SUBSELECT_CANDIDATE_QUEUE_H_

#include <cstddef>
#include <limits>
#include <vector>

namespace subselect {

// Stamp of an entry whose bound was never computed from a real state.
inline constexpr std::size_t kNeverEvaluated =
    std::numeric_limits<std::size_t>::max();

struct QueueEntry {
  // Upper bound on the candidate's current marginal gain.
  double bound = 0.0;
  std::size_t index = 0;
  // Selection size at the time `bound` was computed.
  std::size_t stamp = kNeverEvaluated;
};

// Binary max-heap of candidates ordered by bound descending, then index
// ascending.
class CandidateQueue {
 public:
  CandidateQueue() = default;
  // Heapifies `entries` in linear time.
  explicit CandidateQueue(std::vector<QueueEntry> entries);

  bool empty() const { return heap_.empty(); }
  std::size_t size() const { return heap_.size(); }

  // Highest-priority entry. The queue must be non-empty.
  const QueueEntry& Top() const { return heap_.front(); }
  QueueEntry Pop();
  void Push(const QueueEntry& entry);

  // True when `a` is served before `b`.
  static bool Precedes(const QueueEntry& a, const QueueEntry& b) {
    if (a.bound != b.bound) return a.bound > b.bound;
    return a.index < b.index;
  }

 private:
  std::vector<QueueEntry> heap_;
};

}  // namespace subselect

#endif  // SUBSELECT_CANDIDATE_QUEUE_H_
