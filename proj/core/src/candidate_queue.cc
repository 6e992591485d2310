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

#include "subselect/candidate_queue.h"

#include <algorithm>
#include <utility>

#include "subselect/error.h"

namespace subselect {
namespace {

// std heap algorithms keep the *largest* element under `less` at the front.
bool HeapLess(const QueueEntry& a, const QueueEntry& b) {
  return CandidateQueue::Precedes(b, a);
}

}  // namespace

CandidateQueue::CandidateQueue(std::vector<QueueEntry> entries)
    : heap_(std::move(entries)) {
  std::make_heap(heap_.begin(), heap_.end(), HeapLess);
}

QueueEntry CandidateQueue::Pop() {
  if (heap_.empty()) throw PreconditionError("pop from an empty queue");
  std::pop_heap(heap_.begin(), heap_.end(), HeapLess);
  QueueEntry top = heap_.back();
  heap_.pop_back();
  return top;
}

void CandidateQueue::Push(const QueueEntry& entry) {
  heap_.push_back(entry);
  std::push_heap(heap_.begin(), heap_.end(), HeapLess);
}

}  // namespace subselect
