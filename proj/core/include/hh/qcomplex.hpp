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
#include "hh/cobar.hpp"
#include "hh/sparse_matrix.hpp"

namespace hh {

/// Basis element of Q_* = T(V) (+) T(V) (x) sV: a word, optionally followed by
/// a barred generator.
struct QElement {
  Word word;
  std::optional<std::uint32_t> bar;

  /// Sector one first; sector two by the sequence (word..., bar).
  friend bool operator<(const QElement& a, const QElement& b);
  friend bool operator==(const QElement&, const QElement&) = default;
};

struct QTerm {
  QElement element;
  Scalar coeff;
};

/// Homogeneous chain of Q_*.
struct QChain {
  int degree = 0;
  std::vector<QTerm> terms;
};

class QBasis {
 public:
  QBasis(int degree, std::vector<Word> sector_one, std::vector<Word> sector_two_keys);

  int degree() const { return degree_; }
  std::size_t size() const { return one_.size() + two_.size(); }
  std::size_t sector_one_size() const { return one_.size(); }
  std::size_t sector_two_size() const { return two_.size(); }
  QElement element(std::size_t i) const;
  std::optional<std::size_t> index_of(const QElement& e) const;

 private:
  int degree_ = 0;
  std::vector<Word> one_;
  std::vector<Word> two_;  // word followed by the barred letter
};

/// Throws ValidationError unless every generator has odd degree.
void require_odd_generators(const CobarAlgebra& c);

int q_degree(const CobarAlgebra& c, const QElement& e);
QBasis q_basis(const CobarAlgebra& c, int n);

/// delta on one basis element. Sector one: the cobar d. Sector two:
///   delta(a (x) vbar) = da (x) vbar + (-1)^{|a|} av - va
///                       + (-1)^{|a|} sum lambda_{jk} a v_j (x) vbar_k
///                       - sum lambda_{jk} v_k a (x) vbar_j
/// where dv = sum lambda_{jk} v_j v_k. Terms may repeat.
std::vector<QTerm> apply_delta(const CobarAlgebra& c, const QElement& e);

/// delta: Q_n -> Q_{n-1} in the q_basis orders.
SparseMatrix q_differential(const CobarAlgebra& c, int n);

inline constexpr int kDefaultWordCap = 12;

/// dim H_n(Q_*). Throws CapExceeded when n + 1 > cap.
std::size_t q_homology_dim(const CobarAlgebra& c, int n, int cap = kDefaultWordCap);
std::vector<std::size_t> q_homology_dims(const CobarAlgebra& c, int n_max,
                                         int cap = kDefaultWordCap, unsigned jobs = 1);

struct DualityRow {
  int n = 0;
  std::size_t dim_q = 0;
  std::size_t dim_bar = 0;
  bool match() const { return dim_q == dim_bar; }
};

struct DualityReport {
  std::string algebra;
  std::string field;
  int n_max = 0;
  std::vector<DualityRow> rows;

  bool all_match() const;
  std::optional<int> first_mismatch() const;
};

/// Compares dim H_n(Q_*) of the cobar algebra with dim HH_{-n}, both for the
/// even regrading of A, for n <= n_max. The two sides run concurrently when
/// jobs > 1. check_square_zero is forwarded to build_cobar.
DualityReport duality_check(const GradedAlgebra& a, int n_max, int cap = kDefaultWordCap,
                            unsigned jobs = 1, bool check_square_zero = true);

std::string to_json(const DualityReport& r);
std::string to_text(const DualityReport& r);

/// X_n = (v1 v2)^{n-1} v1 (x) vbar2 - (v2 v1)^{n-1} v2 (x) vbar1 for generator
/// indices i1 != i2; degree n(|v1| + |v2|) + 1.
QChain x_cycle(const CobarAlgebra& c, int n, std::size_t i1, std::size_t i2);

bool is_cycle(const CobarAlgebra& c, const QChain& x);
/// Membership in the image of the full delta_{m+1}. Throws CapExceeded when
/// m + 1 > cap.
bool is_boundary(const CobarAlgebra& c, const QChain& x, int cap = kDefaultWordCap);

/// Basis indices (i1, i2) of two indecomposable basis elements with
/// a_{i1} a_{i2} = a_{i2} a_{i1} = 0 that occur in no product of basis
/// elements (so dv = 0 for both). First such pair in index order.
std::optional<std::pair<std::size_t, std::size_t>> xy_zero_generators(const GradedAlgebra& a);

}  // namespace hh
