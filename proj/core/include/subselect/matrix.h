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

#ifndef SUBSELECT_MATRIX_H_
#define SUBSELECT_MATRIX_H_

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

namespace subselect {

// Dense row-major grid of finite reals with no sign restriction. This is the
// raw input to similarity construction; correlation and cosine are
// meaningful on signed data.
class RealMatrix {
 public:
  RealMatrix() = default;
  // Throws ValidationError on a zero dimension, a size mismatch or a
  // non-finite entry.
  RealMatrix(std::size_t rows, std::size_t cols, std::vector<double> values);
  // Builds from a list of equal-length rows.
  static RealMatrix FromRows(const std::vector<std::vector<double>>& rows);

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  double operator()(std::size_t row, std::size_t col) const {
    return values_[row * cols_ + col];
  }
  std::span<const double> row(std::size_t r) const {
    return {values_.data() + r * cols_, cols_};
  }
  const std::vector<double>& values() const { return values_; }

  // Rows at `indices`, in that order.
  RealMatrix SelectRows(std::span<const std::size_t> indices) const;

  friend bool operator==(const RealMatrix&, const RealMatrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<double> values_;
};

// n x D matrix of non-negative feature values; the ground set for the
// feature-based objective. Every entry is >= 0.
class FeatureMatrix {
 public:
  // Throws ConstraintViolationError naming the first negative entry.
  explicit FeatureMatrix(RealMatrix values);
  FeatureMatrix(std::size_t n_examples, std::size_t n_features,
                std::vector<double> values);
  static FeatureMatrix FromRows(const std::vector<std::vector<double>>& rows);

  std::size_t n_examples() const { return values_.rows(); }
  std::size_t n_features() const { return values_.cols(); }
  double operator()(std::size_t example, std::size_t feature) const {
    return values_(example, feature);
  }
  std::span<const double> row(std::size_t example) const {
    return values_.row(example);
  }
  const RealMatrix& values() const { return values_; }

  FeatureMatrix SelectRows(std::span<const std::size_t> indices) const;

  friend bool operator==(const FeatureMatrix&, const FeatureMatrix&) = default;

 private:
  struct Unchecked {};
  FeatureMatrix(Unchecked, RealMatrix values) : values_(std::move(values)) {}

  RealMatrix values_;
};

// (row, col, value) entry of a sparse similarity matrix.
struct Triple {
  std::size_t row = 0;
  std::size_t col = 0;
  double value = 0.0;
};

// Square n x n table of non-negative similarities, dense or sparse.
//
// Orientation: entry (i, j) is the similarity credited to ground-set element
// j when candidate i is selected. Symmetry is not required.
//
// The sparse form is stored row-compressed with column indices ascending
// within each row; absent entries read as zero.
class SimilarityMatrix {
 public:
  // Stored entries of one sparse row.
  struct SparseRow {
    std::span<const std::size_t> cols;
    std::span<const double> values;
  };

  // Throws ValidationError on size mismatch, ConstraintViolationError on a
  // negative or non-finite entry.
  static SimilarityMatrix Dense(std::size_t n, std::vector<double> values);
  static SimilarityMatrix DenseFromRows(
      const std::vector<std::vector<double>>& rows);
  // Sparse construction. Out-of-range indices, negative values and duplicate
  // (row, col) pairs are rejected with an error naming the triple.
  static SimilarityMatrix FromTriples(std::size_t n,
                                      std::span<const Triple> triples);

  std::size_t size() const { return n_; }
  bool is_sparse() const { return sparse_; }

  // Entry lookup; absent sparse entries are 0. O(log nnz(row)) when sparse.
  double At(std::size_t row, std::size_t col) const;

  // Dense row; only valid when !is_sparse().
  std::span<const double> dense_row(std::size_t r) const {
    return {dense_.data() + r * n_, n_};
  }
  // Stored entries of a row; only valid when is_sparse().
  SparseRow sparse_row(std::size_t r) const {
    const std::size_t begin = row_offsets_[r];
    const std::size_t count = row_offsets_[r + 1] - begin;
    return {{cols_.data() + begin, count}, {sparse_values_.data() + begin, count}};
  }

  // Number of explicitly stored entries (n*n when dense).
  std::size_t stored_entries() const;

  SimilarityMatrix ToDense() const;
  // Stored entries in row-major order. For a dense matrix only nonzero
  // entries are emitted.
  std::vector<Triple> ToTriples() const;

 private:
  SimilarityMatrix() = default;

  std::size_t n_ = 0;
  bool sparse_ = false;
  std::vector<double> dense_;
  std::vector<std::size_t> row_offsets_;
  std::vector<std::size_t> cols_;
  std::vector<double> sparse_values_;
};

// Squared Pearson correlation between rows, computed across each row's
// features. Requires at least two features; a row with zero variance raises
// DegenerateInputError naming the row. The result is exactly symmetric with
// entries in [0, 1] and a unit diagonal.
SimilarityMatrix SquaredCorrelationSimilarity(const RealMatrix& data);

// Cosine similarity between rows. An all-zero row raises
// DegenerateInputError. Negative cosines are replaced by 0 when
// `clamp_negative` is set and raise ConstraintViolationError otherwise.
SimilarityMatrix CosineSimilarity(const RealMatrix& data, bool clamp_negative);

}  // namespace subselect

#endif  // SUBSELECT_MATRIX_H_
