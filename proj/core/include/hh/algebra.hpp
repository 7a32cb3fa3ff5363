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
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hh/field.hpp"
#include "hh/sparse_matrix.hpp"

namespace hh {

/// A violated algebra law together with the basis indices that witness it.
struct Diagnostic {
  std::string law;
  std::vector<std::size_t> indices;
  std::string message;
};

/// Finite-dimensional unital associative algebra given by structure constants
/// a_j a_k = sum_i alpha^i_{jk} a_i in an adapted basis (the unit is a basis
/// element), with an optional N-grading.
///
/// The constructor only checks shape (index ranges, field consistency,
/// duplicate entries); the algebra laws are checked by validate().
class GradedAlgebra {
 public:
  struct Product {
    std::size_t left = 0;
    std::size_t right = 0;
    SparseVector value;
  };

  GradedAlgebra() = default;
  /// Pairs involving the unit that are not listed get the unit law.
  GradedAlgebra(FieldContext field, std::vector<std::string> labels, std::size_t unit,
                std::optional<std::vector<int>> degrees, std::vector<Product> products);

  const FieldContext& field() const { return field_; }
  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }
  std::optional<std::size_t> index_of(std::string_view label) const;
  std::size_t unit() const { return unit_; }

  bool is_graded() const { return degrees_.has_value(); }
  /// Throws ValidationError for ungraded algebras.
  int degree(std::size_t i) const;
  const std::optional<std::vector<int>>& degrees() const { return degrees_; }
  /// Graded with degree(unit) = 0 and no other basis element in degree 0.
  bool is_connected() const;
  /// Graded with every degree even.
  bool is_even() const;
  /// N = sup{n | A^n != 0}; 0 for A = k.
  int top_degree() const;

  /// Coordinates of a_j a_k.
  const SparseVector& product(std::size_t j, std::size_t k) const {
    return table_[j * dim() + k];
  }
  /// All nonzero products, ordered by (left, right).
  std::vector<Product> products() const;

  /// Non-unit basis indices, in order; they span A / k.
  std::vector<std::size_t> reduced_basis() const;

  /// The unit coordinate, when it is an algebra map A -> k (equivalently,
  /// products of non-unit basis elements have no unit component).
  std::optional<std::vector<Scalar>> augmentation() const;
  bool is_augmented() const { return augmentation().has_value(); }

  const std::string& name() const { return name_; }
  void set_name(std::string name) { name_ = std::move(name); }

  SparseVector basis_vector(std::size_t i) const;

 private:
  FieldContext field_;
  std::vector<std::string> labels_;
  std::size_t unit_ = 0;
  std::optional<std::vector<int>> degrees_;
  std::vector<SparseVector> table_;
  std::string name_;
};

/// Empty iff associativity, unit law, homogeneity and connectedness (when
/// graded) all hold.
std::vector<Diagnostic> validate(const GradedAlgebra& a);

/// Bilinear product of coefficient vectors over the basis.
std::vector<Scalar> multiply(const GradedAlgebra& a, std::span<const Scalar> u,
                             std::span<const Scalar> v);
SparseVector multiply(const GradedAlgebra& a, const SparseVector& u, const SparseVector& v);

/// Doubles every degree. Throws ValidationError for ungraded input.
GradedAlgebra regrade_even(const GradedAlgebra& a);

/// Basis indices of A-bar whose span is a complement of A-bar^2, chosen greedily
/// in basis order.
std::vector<std::size_t> indecomposables(const GradedAlgebra& a);

/// Graded dual of a finite-dimensional algebra with the transposed product.
struct DualCoalgebra {
  struct Coproduct {
    std::size_t left = 0;
    std::size_t right = 0;
    Scalar coeff;
  };

  FieldContext field;
  std::vector<std::string> labels;
  std::vector<int> degrees;
  std::size_t counit_index = 0;
  /// comult[i] lists the terms of Delta b_i.
  std::vector<std::vector<Coproduct>> comult;

  /// Delta b_i without the terms involving the dual of the unit.
  std::vector<Coproduct> reduced(std::size_t i) const;
};

/// beta^{jk}_i = (-1)^{|a_j||a_k|} alpha^i_{jk}. Requires a graded connected,
/// even-graded algebra.
DualCoalgebra dual_coalgebra(const GradedAlgebra& a);

bool is_coassociative(const DualCoalgebra& c);

/// Structure constants recovered by transposing the comultiplication back.
std::vector<GradedAlgebra::Product> transpose_back(const DualCoalgebra& c);

}  // namespace hh
