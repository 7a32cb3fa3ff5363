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

#include "hh/bar.hpp"

#include <algorithm>
#include <limits>
#include <map>
#include <set>

#include "hh/error.hpp"
#include "hh/parallel.hpp"

namespace hh {
namespace {

std::vector<std::size_t> letters(const GradedAlgebra& a, Normalization norm) {
  if (norm == Normalization::kNormalized) return a.reduced_basis();
  std::vector<std::size_t> all(a.dim());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return all;
}

void check_slice_args(const GradedAlgebra& a, int p, std::optional<int> q) {
  if (p < 0) throw ValidationError("homological degree must be non-negative");
  if (q && !a.is_graded()) throw ValidationError("internal degree given for an ungraded algebra");
}

std::size_t find_word(const std::vector<ChainWord>& basis, const ChainWord& w) {
  const auto it = std::lower_bound(basis.begin(), basis.end(), w);
  if (it == basis.end() || *it != w) {
    throw ValidationError("chain word leaves its slice; the algebra is not homogeneous");
  }
  return static_cast<std::size_t>(it - basis.begin());
}

}  // namespace

std::vector<ChainWord> chain_basis(const GradedAlgebra& a, int p, std::optional<int> q,
                                   Normalization norm) {
  check_slice_args(a, p, q);
  const auto tail = letters(a, norm);
  std::vector<ChainWord> out;
  ChainWord w(p + 1);
  int min_tail = 0;
  if (q) {
    min_tail = std::numeric_limits<int>::max();
    for (auto i : tail) min_tail = std::min(min_tail, a.degree(i));
    if (tail.empty()) min_tail = 0;
  }
  // Depth-first in index order, which yields lexicographic order.
  auto fill = [&](auto& self, int pos, int remaining) -> void {
    if (pos == p + 1) {
      if (!q || remaining == 0) out.push_back(w);
      return;
    }
    const int slots_left = p - pos;  // letters still to place after this one
    auto try_letter = [&](std::size_t i) {
      const int rest = q ? remaining - a.degree(i) : 0;
      if (q && (rest < 0 || rest < slots_left * min_tail)) return;
      w[pos] = static_cast<std::uint32_t>(i);
      self(self, pos + 1, rest);
    };
    if (pos == 0) {
      for (std::size_t i = 0; i < a.dim(); ++i) try_letter(i);
    } else {
      for (auto i : tail) try_letter(i);
    }
  };
  if (p > 0 && tail.empty()) return out;
  fill(fill, 0, q.value_or(0));
  return out;
}

SparseMatrix boundary_matrix(const GradedAlgebra& a, int p, std::optional<int> q,
                             Normalization norm) {
  const auto source = chain_basis(a, p, q, norm);
  if (p == 0) return SparseMatrix(a.field(), 0, source.size());
  const auto target = chain_basis(a, p - 1, q, norm);
  const bool normalized = norm == Normalization::kNormalized;
  const std::uint32_t unit = static_cast<std::uint32_t>(a.unit());
  const Scalar minus_one = a.field().from_int(-1);

  std::vector<SparseVector> columns(source.size());
  ChainWord t(p);
  for (std::size_t col = 0; col < source.size(); ++col) {
    const ChainWord& w = source[col];
    SparseVector& out = columns[col];
    // a_0 a_1 (x) a_2 ... a_p
    for (const auto& e : a.product(w[0], w[1])) {
      t[0] = e.index;
      std::copy(w.begin() + 2, w.end(), t.begin() + 1);
      out.push_back({static_cast<std::uint32_t>(find_word(target, t)), e.value});
    }
    // (-1)^i a_0 (x) ... (x) a_i a_{i+1} (x) ...
    for (int i = 1; i < p; ++i) {
      const Scalar sign = i % 2 == 0 ? a.field().one() : minus_one;
      for (const auto& e : a.product(w[i], w[i + 1])) {
        if (normalized && e.index == unit) continue;
        std::copy(w.begin(), w.begin() + i, t.begin());
        t[i] = e.index;
        std::copy(w.begin() + i + 2, w.end(), t.begin() + i + 1);
        out.push_back({static_cast<std::uint32_t>(find_word(target, t)), sign * e.value});
      }
    }
    // (-1)^p a_p a_0 (x) a_1 ... a_{p-1}
    const Scalar sign = p % 2 == 0 ? a.field().one() : minus_one;
    for (const auto& e : a.product(w[p], w[0])) {
      t[0] = e.index;
      std::copy(w.begin() + 1, w.begin() + p, t.begin() + 1);
      out.push_back({static_cast<std::uint32_t>(find_word(target, t)), sign * e.value});
    }
  }
  return SparseMatrix::from_columns(a.field(), target.size(), std::move(columns));
}

ComplexSlice complex_slice(const GradedAlgebra& a, int p, std::optional<int> q,
                           Normalization norm) {
  return {p, q, chain_basis(a, p, q, norm), boundary_matrix(a, p, q, norm)};
}

std::vector<int> internal_degrees(const GradedAlgebra& a, int p, Normalization norm) {
  if (!a.is_graded()) throw ValidationError("internal_degrees requires a graded algebra");
  std::set<int> current;
  for (std::size_t i = 0; i < a.dim(); ++i) current.insert(a.degree(i));
  std::set<int> tail;
  for (auto i : letters(a, norm)) tail.insert(a.degree(i));
  for (int step = 0; step < p; ++step) {
    std::set<int> next;
    for (int c : current) {
      for (int d : tail) next.insert(c + d);
    }
    current = std::move(next);
  }
  return {current.begin(), current.end()};
}

std::size_t hh_dim(const GradedAlgebra& a, int p, std::optional<int> q, Normalization norm) {
  const SparseMatrix bp = boundary_matrix(a, p, q, norm);
  const SparseMatrix bp1 = boundary_matrix(a, p + 1, q, norm);
  return homology_dim(bp.cols(), rank(bp), rank(bp1));
}

namespace {

struct SliceRank {
  std::size_t size = 0;
  std::size_t rank = 0;  // rank of the boundary leaving the slice
};

// Ranks of b on each requested (p, q) slice, computed in parallel.
std::map<std::pair<int, std::optional<int>>, SliceRank> slice_ranks(
    const GradedAlgebra& a, const std::vector<std::pair<int, std::optional<int>>>& slices,
    unsigned jobs, Normalization norm) {
  const auto results = parallel_map(jobs, slices.size(), [&](std::size_t i) {
    const auto [p, q] = slices[i];
    const SparseMatrix b = boundary_matrix(a, p, q, norm);
    return SliceRank{b.cols(), rank(b)};
  });
  std::map<std::pair<int, std::optional<int>>, SliceRank> out;
  for (std::size_t i = 0; i < slices.size(); ++i) out[slices[i]] = results[i];
  return out;
}

}  // namespace

HomologyTable hh_table(const GradedAlgebra& a, int p_max, unsigned jobs, Normalization norm) {
  if (p_max < 0) throw ValidationError("p_max must be non-negative");
  HomologyTable t;
  t.algebra = a.name();
  t.field = a.field().name();
  t.p_max = p_max;
  std::vector<std::pair<int, std::optional<int>>> slices;
  for (int p = 0; p <= p_max + 1; ++p) {
    if (a.is_graded()) {
      for (int q : internal_degrees(a, p, norm)) slices.emplace_back(p, q);
    } else {
      slices.emplace_back(p, std::nullopt);
    }
  }
  const auto ranks = slice_ranks(a, slices, jobs, norm);
  for (const auto& [key, info] : ranks) {
    const auto [p, q] = key;
    if (p > p_max) continue;
    const auto up = ranks.find({p + 1, q});
    const std::size_t incoming = up == ranks.end() ? 0 : up->second.rank;
    const std::size_t dim = homology_dim(info.size, info.rank, incoming);
    t.cells.push_back({p, q, dim});
  }
  return t;
}

std::pair<int, int> negative_degree_p_range(int n, int top_degree) {
  if (top_degree <= 1) return {0, n};
  const int num = n - top_degree;
  const int den = top_degree - 1;
  int lo = num <= 0 ? 0 : (num + den - 1) / den;
  return {std::max(0, lo), n};
}

namespace {

void check_negative_degree_input(const GradedAlgebra& a) {
  if (!a.is_graded()) throw ValidationError("negative_degree_dim requires a graded algebra");
  if (!a.is_connected()) throw ValidationError("negative_degree_dim requires a connected algebra");
  if (!a.is_even()) {
    throw ValidationError("negative_degree_dim requires an even-graded algebra; regrade first");
  }
}

}  // namespace

std::vector<DegreeDim> negative_degree_dims(const GradedAlgebra& a, int n_max, unsigned jobs) {
  check_negative_degree_input(a);
  const int top = a.top_degree();
  std::vector<std::pair<int, std::optional<int>>> slices;
  for (int n = 0; n <= n_max; ++n) {
    const auto [lo, hi] = negative_degree_p_range(n, top);
    for (int p = lo; p <= hi; ++p) {
      slices.emplace_back(p, p + n);
      slices.emplace_back(p + 1, p + n);
    }
  }
  std::sort(slices.begin(), slices.end());
  slices.erase(std::unique(slices.begin(), slices.end()), slices.end());
  const auto ranks = slice_ranks(a, slices, jobs, Normalization::kNormalized);
  std::vector<DegreeDim> out;
  for (int n = 0; n <= n_max; ++n) {
    const auto [lo, hi] = negative_degree_p_range(n, top);
    std::size_t total = 0;
    for (int p = lo; p <= hi; ++p) {
      const auto& here = ranks.at({p, p + n});
      total += homology_dim(here.size, here.rank, ranks.at({p + 1, p + n}).rank);
    }
    out.push_back({n, total});
  }
  return out;
}

std::size_t negative_degree_dim(const GradedAlgebra& a, int n) {
  if (n < 0) throw ValidationError("n must be non-negative");
  return negative_degree_dims(a, n).back().dim;
}

SparseMatrix induced_map(const AlgebraMorphism& f, int p, std::optional<int> q) {
  const auto& src = *f.source;
  const auto& tgt = *f.target;
  if (f.images.at(src.unit()) != tgt.basis_vector(tgt.unit())) {
    throw ValidationError("induced_map requires a unital morphism");
  }
  if (q && !(src.is_graded() && tgt.is_graded())) {
    throw ValidationError("internal degree given but the morphism is not between graded algebras");
  }
  const auto source = chain_basis(src, p, q);
  const auto target = chain_basis(tgt, p, q);
  // Images of letters, projected to A-bar = A/k for positions >= 1.
  std::vector<SparseVector> letter_image(src.dim());
  for (std::size_t i = 0; i < src.dim(); ++i) {
    for (const auto& e : f.images[i]) {
      if (e.index != tgt.unit()) letter_image[i].push_back(e);
    }
  }
  std::vector<SparseVector> columns(source.size());
  ChainWord t(p + 1);
  for (std::size_t col = 0; col < source.size(); ++col) {
    const ChainWord& w = source[col];
    auto expand = [&](auto& self, int pos, const Scalar& coeff) -> void {
      if (pos == p + 1) {
        columns[col].push_back({static_cast<std::uint32_t>(find_word(target, t)), coeff});
        return;
      }
      const auto& img = pos == 0 ? f.images[w[0]] : letter_image[w[pos]];
      for (const auto& e : img) {
        t[pos] = e.index;
        self(self, pos + 1, coeff * e.value);
      }
    };
    expand(expand, 0, tgt.field().one());
  }
  return SparseMatrix::from_columns(tgt.field(), target.size(), std::move(columns));
}

bool commutes_with_boundary(const AlgebraMorphism& f, int p, std::optional<int> q) {
  if (p == 0) return true;
  const SparseMatrix lhs = induced_map(f, p - 1, q) * boundary_matrix(*f.source, p, q);
  const SparseMatrix rhs = boundary_matrix(*f.target, p, q) * induced_map(f, p, q);
  return lhs == rhs;
}

}  // namespace hh
