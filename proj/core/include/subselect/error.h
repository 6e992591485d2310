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

#ifndef SUBSELECT_ERROR_H_
#define SUBSELECT_ERROR_H_

#include <stdexcept>
#include <string>

namespace subselect {

// Root of every exception thrown by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Malformed arguments: bad shapes, out-of-range indices, duplicates, k = 0.
class ValidationError : public Error {
 public:
  using Error::Error;
};

// Index outside the ground set.
class IndexError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// A value breaks a mathematical requirement (e.g. a negative similarity).
class ConstraintViolationError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Input for which a quantity is undefined (zero-variance or all-zero rows).
class DegenerateInputError : public ValidationError {
 public:
  using ValidationError::ValidationError;
};

// Operation called in a state that does not permit it.
class PreconditionError : public Error {
 public:
  using Error::Error;
};

}  // namespace subselect

#endif  // SUBSELECT_ERROR_H_
