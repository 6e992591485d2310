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

#include "subselect/matrix.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <sstream>
#include <string>
#include <utility>

#include "subselect/error.h"

namespace subselect {
namespace {

std::string Describe(const Triple& t) {
  std::ostringstream out;
  out << "(" << t.row << ", " << t.col << ", " << t.value << ")";
  return out.str();
}

void CheckEntry(double value, std::size_t row, std::size_t col,
                const char* what) {
  if (!std::isfinite(value) || value < 0.0) {
    std::ostringstream out;
    out << what << " entry (" << row << ", " << col << ") = " << value
        << " is not a finite non-negative value";
    throw ConstraintViolationError(out.str());
  }
}

// Rows rescaled to unit Euclidean norm, optionally after subtracting each
// row's mean. Returns the row index of the first degenerate row through
// `degenerate` (or data.rows() if none).
std::vector<double> NormalizedRows(const RealMatrix& data, bool center,
                                   std::size_t* degenerate) {
  const std::size_t n = data.rows();
  const std::size_t d = data.cols();
  std::vector<double> out(n * d);
  *degenerate = n;
  for (std::size_t i = 0; i < n; ++i) {
    const auto row = data.row(i);
    double mean = 0.0;
    if (center) {
      mean = std::accumulate(row.begin(), row.end(), 0.0) /
             static_cast<double>(d);
    }
    double raw_sq = 0.0;
    double sq = 0.0;
    for (std::size_t f = 0; f < d; ++f) {
      const double v = row[f] - mean;
      out[i * d + f] = v;
      sq += v * v;
      raw_sq += row[f] * row[f];
    }
    const double norm = std::sqrt(sq);
    // A constant row centers to rounding noise rather than exact zeros.
    if (norm == 0.0 || norm <= 1e-12 * std::sqrt(raw_sq)) {
      *degenerate = i;
      return out;
    }
    for (std::size_t f = 0; f < d; ++f) out[i * d + f] /= norm;
  }
  return out;
}

double Dot(const double* a, const double* b, std::size_t d) {
  double sum = 0.0;
  for (std::size_t f = 0; f < d; ++f) sum += a[f] * b[f];
  return sum;
}

}  // namespace

RealMatrix::RealMatrix(std::size_t rows, std::size_t cols,
                       std::vector<double> values)
    : rows_(rows), cols_(cols), values_(std::move(values)) {
  if (rows_ == 0 || cols_ == 0) {
    throw ValidationError("matrix must have at least one row and one column");
  }
  if (values_.size() != rows_ * cols_) {
    std::ostringstream out;
    out << "matrix of shape " << rows_ << "x" << cols_ << " given "
        << values_.size() << " values";
    throw ValidationError(out.str());
  }
  for (std::size_t i = 0; i < values_.size(); ++i) {
    if (!std::isfinite(values_[i])) {
      std::ostringstream out;
      out << "non-finite value at (" << i / cols_ << ", " << i % cols_ << ")";
      throw ValidationError(out.str());
    }
  }
}

RealMatrix RealMatrix::FromRows(const std::vector<std::vector<double>>& rows) {
  if (rows.empty()) throw ValidationError("empty dataset");
  const std::size_t cols = rows.front().size();
  std::vector<double> values;
  values.reserve(rows.size() * cols);
  for (std::size_t r = 0; r < rows.size(); ++r) {
    if (rows[r].size() != cols) {
      std::ostringstream out;
      out << "row " << r << " has " << rows[r].size() << " values, expected "
          << cols;
      throw ValidationError(out.str());
    }
    values.insert(values.end(), rows[r].begin(), rows[r].end());
  }
  return RealMatrix(rows.size(), cols, std::move(values));
}

RealMatrix RealMatrix::SelectRows(std::span<const std::size_t> indices) const {
  std::vector<double> values;
  values.reserve(indices.size() * cols_);
  for (const std::size_t r : indices) {
    if (r >= rows_) {
      throw IndexError("row index " + std::to_string(r) + " out of range");
    }
    const auto src = row(r);
    values.insert(values.end(), src.begin(), src.end());
  }
  RealMatrix out;
  out.rows_ = indices.size();
  out.cols_ = cols_;
  out.values_ = std::move(values);
  return out;
}

FeatureMatrix::FeatureMatrix(RealMatrix values) : values_(std::move(values)) {
  const auto& v = values_.values();
  const std::size_t cols = values_.cols();
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] < 0.0) {
      std::ostringstream out;
      out << "negative feature value " << v[i] << " at (" << i / cols << ", "
          << i % cols << ")";
      throw ConstraintViolationError(out.str());
    }
  }
}

FeatureMatrix::FeatureMatrix(std::size_t n_examples, std::size_t n_features,
                             std::vector<double> values)
    : FeatureMatrix(RealMatrix(n_examples, n_features, std::move(values))) {}

FeatureMatrix FeatureMatrix::FromRows(
    const std::vector<std::vector<double>>& rows) {
  return FeatureMatrix(RealMatrix::FromRows(rows));
}

FeatureMatrix FeatureMatrix::SelectRows(
    std::span<const std::size_t> indices) const {
  return FeatureMatrix(Unchecked{}, values_.SelectRows(indices));
}

SimilarityMatrix SimilarityMatrix::Dense(std::size_t n,
                                         std::vector<double> values) {
  if (n == 0) throw ValidationError("similarity matrix must be non-empty");
  if (values.size() != n * n) {
    std::ostringstream out;
    out << "similarity matrix of size " << n << " given " << values.size()
        << " values, expected " << n * n;
    throw ValidationError(out.str());
  }
  for (std::size_t i = 0; i < values.size(); ++i) {
    CheckEntry(values[i], i / n, i % n, "similarity");
  }
  SimilarityMatrix m;
  m.n_ = n;
  m.sparse_ = false;
  m.dense_ = std::move(values);
  return m;
}

SimilarityMatrix SimilarityMatrix::DenseFromRows(
    const std::vector<std::vector<double>>& rows) {
  const std::size_t n = rows.size();
  std::vector<double> values;
  values.reserve(n * n);
  for (std::size_t r = 0; r < n; ++r) {
    if (rows[r].size() != n) {
      std::ostringstream out;
      out << "similarity row " << r << " has " << rows[r].size()
          << " values, expected " << n;
      throw ValidationError(out.str());
    }
    values.insert(values.end(), rows[r].begin(), rows[r].end());
  }
  return Dense(n, std::move(values));
}

SimilarityMatrix SimilarityMatrix::FromTriples(std::size_t n,
                                               std::span<const Triple> triples) {
  if (n == 0) throw ValidationError("similarity matrix must be non-empty");
  for (const Triple& t : triples) {
    if (t.row >= n || t.col >= n) {
      throw IndexError("triple " + Describe(t) + " has an index outside [0, " +
                       std::to_string(n) + ")");
    }
    if (!std::isfinite(t.value) || t.value < 0.0) {
      throw ConstraintViolationError("triple " + Describe(t) +
                                     " has a negative or non-finite value");
    }
  }

  std::vector<std::size_t> order(triples.size());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) {
                     if (triples[a].row != triples[b].row) {
                       return triples[a].row < triples[b].row;
                     }
                     return triples[a].col < triples[b].col;
                   });

  SimilarityMatrix m;
  m.n_ = n;
  m.sparse_ = true;
  m.row_offsets_.assign(n + 1, 0);
  m.cols_.reserve(triples.size());
  m.sparse_values_.reserve(triples.size());
  for (std::size_t k = 0; k < order.size(); ++k) {
    const Triple& t = triples[order[k]];
    if (k > 0) {
      const Triple& prev = triples[order[k - 1]];
      if (prev.row == t.row && prev.col == t.col) {
        throw ValidationError("duplicate triple " + Describe(t) +
                              " for an entry already given as " +
                              Describe(prev));
      }
    }
    ++m.row_offsets_[t.row + 1];
    m.cols_.push_back(t.col);
    m.sparse_values_.push_back(t.value);
  }
  std::partial_sum(m.row_offsets_.begin(), m.row_offsets_.end(),
                   m.row_offsets_.begin());
  return m;
}

double SimilarityMatrix::At(std::size_t row, std::size_t col) const {
  if (row >= n_ || col >= n_) {
    throw IndexError("similarity lookup (" + std::to_string(row) + ", " +
                     std::to_string(col) + ") out of range");
  }
  if (!sparse_) return dense_[row * n_ + col];
  const SparseRow r = sparse_row(row);
  const auto it = std::lower_bound(r.cols.begin(), r.cols.end(), col);
  if (it == r.cols.end() || *it != col) return 0.0;
  return r.values[static_cast<std::size_t>(it - r.cols.begin())];
}

std::size_t SimilarityMatrix::stored_entries() const {
  return sparse_ ? sparse_values_.size() : dense_.size();
}

SimilarityMatrix SimilarityMatrix::ToDense() const {
  if (!sparse_) return *this;
  std::vector<double> values(n_ * n_, 0.0);
  for (std::size_t r = 0; r < n_; ++r) {
    const SparseRow row = sparse_row(r);
    for (std::size_t k = 0; k < row.cols.size(); ++k) {
      values[r * n_ + row.cols[k]] = row.values[k];
    }
  }
  return Dense(n_, std::move(values));
}

std::vector<Triple> SimilarityMatrix::ToTriples() const {
  std::vector<Triple> out;
  if (sparse_) {
    out.reserve(sparse_values_.size());
    for (std::size_t r = 0; r < n_; ++r) {
      const SparseRow row = sparse_row(r);
      for (std::size_t k = 0; k < row.cols.size(); ++k) {
        out.push_back({r, row.cols[k], row.values[k]});
      }
    }
    return out;
  }
  for (std::size_t r = 0; r < n_; ++r) {
    for (std::size_t c = 0; c < n_; ++c) {
      const double v = dense_[r * n_ + c];
      if (v != 0.0) out.push_back({r, c, v});
    }
  }
  return out;
}

SimilarityMatrix SquaredCorrelationSimilarity(const RealMatrix& data) {
  if (data.cols() < 2) {
    throw DegenerateInputError(
        "correlation requires at least two features per example");
  }
  std::size_t degenerate = 0;
  const std::vector<double> z = NormalizedRows(data, /*center=*/true,
                                               &degenerate);
  if (degenerate != data.rows()) {
    throw DegenerateInputError("row " + std::to_string(degenerate) +
                               " has zero variance; correlation undefined");
  }
  const std::size_t n = data.rows();
  const std::size_t d = data.cols();
  std::vector<double> values(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    values[i * n + i] = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      const double r = Dot(&z[i * d], &z[j * d], d);
      const double r2 = std::min(1.0, r * r);
      values[i * n + j] = r2;
      values[j * n + i] = r2;
    }
  }
  return SimilarityMatrix::Dense(n, std::move(values));
}

SimilarityMatrix CosineSimilarity(const RealMatrix& data, bool clamp_negative) {
  std::size_t degenerate = 0;
  const std::vector<double> u = NormalizedRows(data, /*center=*/false,
                                               &degenerate);
  if (degenerate != data.rows()) {
    throw DegenerateInputError("row " + std::to_string(degenerate) +
                               " is all zeros; cosine similarity undefined");
  }
  const std::size_t n = data.rows();
  const std::size_t d = data.cols();
  std::vector<double> values(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    values[i * n + i] = 1.0;
    for (std::size_t j = i + 1; j < n; ++j) {
      double c = std::min(1.0, Dot(&u[i * d], &u[j * d], d));
      if (c < 0.0) {
        if (!clamp_negative) {
          std::ostringstream out;
          out << "cosine similarity between rows " << i << " and " << j
              << " is negative (" << c << "); enable clamping to map it to 0";
          throw ConstraintViolationError(out.str());
        }
        c = 0.0;
      }
      values[i * n + j] = c;
      values[j * n + i] = c;
    }
  }
  return SimilarityMatrix::Dense(n, std::move(values));
}

}  // namespace subselect
