// Copyright 2026 The hhcalc Authors
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

#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <vector>

#include "hh/field.hpp"

namespace hh {

/// One nonzero coordinate of a sparse vector.
struct Entry {
  std::uint32_t index = 0;
  Scalar value;

  friend bool operator==(const Entry&, const Entry&) = default;
};

/// Sparse vector: entries sorted by index, no duplicates, no stored zeros.
using SparseVector = std::vector<Entry>;

/// Sorts by index, merges duplicates and drops zeros.
void canonicalize(SparseVector& v);
SparseVector canonicalized(SparseVector v);

/// v += c * w for canonical v, w.
void axpy(SparseVector& v, const Scalar& c, const SparseVector& w);

/// Dense <-> sparse conversions.
SparseVector to_sparse(std::span<const Scalar> dense);
std::vector<Scalar> to_dense(const SparseVector& v, std::size_t size, const FieldContext& field);

/// Column-major sparse matrix over a field.
///
/// Boundary matrices are assembled one column (the image of one basis word)
/// at a time, then treated as immutable.
class SparseMatrix {
 public:
  SparseMatrix() = default;
  SparseMatrix(FieldContext field, std::size_t rows, std::size_t cols);

  /// Columns need not be canonical; entries must be in range.
  static SparseMatrix from_columns(FieldContext field, std::size_t rows,
                                   std::vector<SparseVector> columns);
  static SparseMatrix identity(FieldContext field, std::size_t n);

  const FieldContext& field() const { return field_; }
  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return columns_.size(); }
  std::size_t nonzeros() const;
  bool is_zero() const { return nonzeros() == 0; }

  const SparseVector& column(std::size_t j) const { return columns_.at(j); }
  void set_column(std::size_t j, SparseVector v);
  Scalar at(std::size_t row, std::size_t col) const;

  SparseMatrix transpose() const;
  SparseVector apply(const SparseVector& v) const;

  friend SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b);
  friend bool operator==(const SparseMatrix& a, const SparseMatrix& b);

 private:
  FieldContext field_;
  std::size_t rows_ = 0;
  std::vector<SparseVector> columns_;
};

std::size_t rank(const SparseMatrix& m);

/// cols(m) - rank(m).
std::size_t kernel_dim(const SparseMatrix& m);

/// True iff v lies in the column span of m. Throws ValidationError when the
/// length of v differs from rows(m).
bool in_image(const SparseMatrix& m, std::span<const Scalar> v);
bool in_image(const SparseMatrix& m, const SparseVector& v);

/// Basis of the null space, one dense vector per free column. Intended for
/// small matrices: elimination runs on a dense copy.
std::vector<SparseVector> kernel_basis(const SparseMatrix& m);

/// Number of columns of `extra` independent modulo the column span of `base`.
/// Both matrices must have the same row count.
std::size_t rank_modulo(const SparseMatrix& base, const SparseMatrix& extra);

/// dim ker(d_n) - rank(d_{n+1}) from the slice size and the two ranks.
/// Throws Error when the ranks exceed the size, which means d_n d_{n+1} != 0.
std::size_t homology_dim(std::size_t size, std::size_t rank_out, std::size_t rank_in);

/// Rank of a set of vectors living in a space of dimension `rows`.
std::size_t rank_of(const FieldContext& field, std::size_t rows,
                    std::span<const SparseVector> vectors);

}  // namespace hh
