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
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hh/algebra.hpp"
#include "hh/presentations.hpp"
#include "hh/sparse_matrix.hpp"

namespace hh {

struct CobarGenerator {
  std::string label;     // "v_<basis label>"
  int degree = 0;        // deg(a_i) - 1
  std::size_t source = 0;  // basis index of a_i
};

/// lambda * v_left v_right.
struct QuadraticTerm {
  std::uint32_t left = 0;
  std::uint32_t right = 0;
  Scalar coeff;
};

/// Linear combination of words; may hold repeated words until assembled.
using WordCombination = std::vector<std::pair<Word, Scalar>>;

/// T(V) on one generator v_i per non-unit basis element a_i, with the
/// quadratic differential dv_i = sum lambda^i_{jk} v_j v_k. Letters in words
/// are generator indices.
class CobarAlgebra {
 public:
  CobarAlgebra() = default;
  CobarAlgebra(FieldContext field, std::vector<CobarGenerator> generators,
               std::vector<std::vector<QuadraticTerm>> differential);

  const FieldContext& field() const { return field_; }
  std::size_t size() const { return generators_.size(); }
  const std::vector<CobarGenerator>& generators() const { return generators_; }
  const CobarGenerator& generator(std::size_t i) const { return generators_.at(i); }
  const std::vector<QuadraticTerm>& dv(std::size_t i) const { return differential_.at(i); }
  /// Generator built from basis element `basis_index`, if any.
  std::optional<std::size_t> generator_of(std::size_t basis_index) const;

 private:
  FieldContext field_;
  std::vector<CobarGenerator> generators_;
  std::vector<std::vector<QuadraticTerm>> differential_;
};

/// Requires a connected, even-graded algebra. lambda^i_{jk} =
/// (-1)^{|a_j| + |a_j||a_k|} alpha^i_{jk}. Verifies d(dv_i) = 0 and throws
/// Error otherwise (the algebra is not associative on A-bar). Pass
/// check_square_zero = false only for deliberately broken input.
CobarAlgebra build_cobar(const GradedAlgebra& a, bool check_square_zero = true);

int word_degree(const CobarAlgebra& c, const Word& w);

/// Words of total degree n, lexicographic.
std::vector<Word> word_basis(const CobarAlgebra& c, int n);

/// d extended as a derivation: d(w1 v w2) = (-1)^{|w1|} w1 dv w2.
WordCombination differentiate(const CobarAlgebra& c, const Word& w);

/// d: T(V)_n -> T(V)_{n-1} on word_basis.
SparseMatrix cobar_differential_matrix(const CobarAlgebra& c, int n);

}  // namespace hh
