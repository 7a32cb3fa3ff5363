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

// Test-only reference implementations. They share no linear algebra or
// enumeration code with hhcore: plain dense Gaussian elimination, the
// unnormalized Hochschild complex indexed by base-dim digits, and ideal
// spans built from every u f v.

#include <gmpxx.h>

#include <cstddef>
#include <cstdint>
#include <vector>

#include "hh/algebra.hpp"

namespace oracle {

using DenseQ = std::vector<std::vector<mpq_class>>;

std::size_t dense_rank(DenseQ rows);
std::size_t dense_rank_mod(std::vector<std::vector<std::int64_t>> rows, std::int64_t p);

/// Converts a library scalar to a rational (fails for residues) or residue.
mpq_class as_rational(const hh::Scalar& s);
std::int64_t as_residue(const hh::Scalar& s, std::int64_t p);

/// dim HH_p(A) from the unnormalized complex A^{(x)(p+1)} with the classical
/// alternating differential. Exponential in p; keep dim^(p+2) small.
std::size_t hochschild_dim(const hh::GradedAlgebra& a, int p);

/// Same, restricted to total internal degree q (graded A).
std::size_t hochschild_dim(const hh::GradedAlgebra& a, int p, int q);

struct Monomial {
  std::vector<int> word;  // generator indices
  mpq_class coeff;
};
using Relation = std::vector<Monomial>;

/// dim of (k<x_1..x_g>/I)_d for d = 0..max_degree with all weights 1, where
/// I_d is spanned by every u f v of degree d. Over Q, or over F_p if p > 0.
std::vector<std::size_t> quotient_dims(int generators, const std::vector<Relation>& relations,
                                       int max_degree, std::int64_t p = 0);

/// Coefficients of 1 / (1 - sum_i t^{d_i}) up to t^n_max.
std::vector<std::size_t> word_count_series(const std::vector<int>& degrees, int n_max);

}  // namespace oracle
