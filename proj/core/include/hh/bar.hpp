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
#include <utility>
#include <vector>

#include "hh/algebra.hpp"
#include "hh/homology_table.hpp"
#include "hh/presentations.hpp"
#include "hh/sparse_matrix.hpp"

namespace hh {

// Hochschild chain complex C_p(A) = A (x) (s A-bar)^{(x)p}. A word
// (i_0, i_1, ..., i_p) stands for a_{i_0} (x) s a_{i_1} (x) ... (x) s a_{i_p}.
// The normalized complex takes i_1..i_p among the non-unit basis elements
// (A-bar = A/k); the unnormalized one allows every basis element.

enum class Normalization { kNormalized, kUnnormalized };

using ChainWord = std::vector<std::uint32_t>;

struct ComplexSlice {
  int p = 0;
  std::optional<int> q;
  std::vector<ChainWord> words;
  SparseMatrix boundary;  // into the (p-1, q) slice
};

/// Words of homological degree p, and of internal degree q when q is given,
/// sorted lexicographically. Throws ValidationError for p < 0 or for q on an
/// ungraded algebra.
std::vector<ChainWord> chain_basis(const GradedAlgebra& a, int p, std::optional<int> q,
                                   Normalization norm = Normalization::kNormalized);

/// Matrix of b: C_p -> C_{p-1} with the classical alternating signs
///   b(a_0 (x) ... (x) a_p) = a_0a_1 (x) ...  + sum_i (-1)^i ... (x) a_ia_{i+1} (x) ...
///                           + (-1)^p a_pa_0 (x) a_1 (x) ... (x) a_{p-1}.
SparseMatrix boundary_matrix(const GradedAlgebra& a, int p, std::optional<int> q,
                             Normalization norm = Normalization::kNormalized);

ComplexSlice complex_slice(const GradedAlgebra& a, int p, std::optional<int> q,
                           Normalization norm = Normalization::kNormalized);

/// Internal degrees carried by at least one word of C_p (graded algebras).
std::vector<int> internal_degrees(const GradedAlgebra& a, int p,
                                  Normalization norm = Normalization::kNormalized);

/// dim HH_p(A) (restricted to internal degree q when given).
std::size_t hh_dim(const GradedAlgebra& a, int p, std::optional<int> q = std::nullopt,
                   Normalization norm = Normalization::kNormalized);

/// Every HH_p(A)^q with p <= p_max; one cell per (p, q) slice that has words
/// (a single ungraded cell per p when A is ungraded). Slices run on `jobs`
/// threads.
HomologyTable hh_table(const GradedAlgebra& a, int p_max, unsigned jobs = 1,
                       Normalization norm = Normalization::kNormalized);

/// Homological degrees p that can contribute HH_p(A)^{p+n} != 0 for an
/// even-graded connected algebra of top degree N: max(0, ceil((n-N)/(N-1))) <= p <= n.
std::pair<int, int> negative_degree_p_range(int n, int top_degree);

/// dim HH_{-n}(A) = sum_p dim HH_p(A)^{p+n}. Requires a graded connected,
/// even-graded algebra.
std::size_t negative_degree_dim(const GradedAlgebra& a, int n);
std::vector<DegreeDim> negative_degree_dims(const GradedAlgebra& a, int n_max,
                                            unsigned jobs = 1);

/// Chain map C_p(source) -> C_p(target) induced by a unital morphism on the
/// normalized complexes.
SparseMatrix induced_map(const AlgebraMorphism& f, int p, std::optional<int> q = std::nullopt);

/// M_{p-1} b_p^source == b_p^target M_p.
bool commutes_with_boundary(const AlgebraMorphism& f, int p,
                            std::optional<int> q = std::nullopt);

}  // namespace hh
