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

#include "hh/cobar.hpp"

#include <algorithm>
#include <map>

#include "hh/error.hpp"

namespace hh {

CobarAlgebra::CobarAlgebra(FieldContext field, std::vector<CobarGenerator> generators,
                           std::vector<std::vector<QuadraticTerm>> differential)
    : field_(std::move(field)),
      generators_(std::move(generators)),
      differential_(std::move(differential)) {
  if (differential_.size() != generators_.size()) {
    throw ValidationError("cobar differential needs one entry per generator");
  }
  for (const auto& g : generators_) {
    if (g.degree < 1) throw ValidationError("cobar generators must have degree >= 1");
  }
}

std::optional<std::size_t> CobarAlgebra::generator_of(std::size_t basis_index) const {
  for (std::size_t i = 0; i < generators_.size(); ++i) {
    if (generators_[i].source == basis_index) return i;
  }
  return std::nullopt;
}

namespace {

using Combination = std::map<Word, Scalar>;

void add_to(Combination& out, Word w, const Scalar& c) {
  auto [it, inserted] = out.try_emplace(std::move(w), c);
  if (!inserted) {
    it->second += c;
    if (it->second.is_zero()) out.erase(it);
  }
}

}  // namespace

CobarAlgebra build_cobar(const GradedAlgebra& a, bool check_square_zero) {
  if (!a.is_graded() || !a.is_connected()) {
    throw ValidationError("the cobar construction needs a graded connected algebra");
  }
  if (!a.is_even()) {
    throw ValidationError("the cobar construction needs an even-graded algebra; regrade first");
  }
  const auto reduced = a.reduced_basis();
  std::vector<CobarGenerator> gens;
  std::vector<std::uint32_t> gen_of(a.dim(), 0);
  for (std::size_t g = 0; g < reduced.size(); ++g) {
    gens.push_back({"v_" + a.label(reduced[g]), a.degree(reduced[g]) - 1, reduced[g]});
    gen_of[reduced[g]] = static_cast<std::uint32_t>(g);
  }
  std::vector<std::vector<QuadraticTerm>> diff(reduced.size());
  for (std::size_t j = 0; j < reduced.size(); ++j) {
    for (std::size_t k = 0; k < reduced.size(); ++k) {
      const int dj = a.degree(reduced[j]);
      const int dk = a.degree(reduced[k]);
      const Scalar sign = sign_scalar(a.field(), dj + dj * dk);
      for (const auto& e : a.product(reduced[j], reduced[k])) {
        if (e.index == a.unit()) continue;  // validate() reports these
        diff[gen_of[e.index]].push_back(
            {static_cast<std::uint32_t>(j), static_cast<std::uint32_t>(k), sign * e.value});
      }
    }
  }
  CobarAlgebra c(a.field(), std::move(gens), std::move(diff));
  if (check_square_zero) {
    for (std::size_t i = 0; i < c.size(); ++i) {
      Combination dd;
      for (const auto& t : c.dv(i)) {
        for (auto& [w, s] : differentiate(c, Word{t.left, t.right})) add_to(dd, w, s * t.coeff);
      }
      if (!dd.empty()) {
        throw Error("d(d" + c.generator(i).label +
                    ") != 0: the product on the augmentation ideal is not associative");
      }
    }
  }
  return c;
}

int word_degree(const CobarAlgebra& c, const Word& w) {
  int d = 0;
  for (auto letter : w) d += c.generator(letter).degree;
  return d;
}

std::vector<Word> word_basis(const CobarAlgebra& c, int n) {
  std::vector<Word> out;
  if (n < 0) return out;
  Word w;
  auto fill = [&](auto& self, int remaining) -> void {
    if (remaining == 0) {
      out.push_back(w);
      return;
    }
    for (std::size_t i = 0; i < c.size(); ++i) {
      const int d = c.generator(i).degree;
      if (d > remaining) continue;
      w.push_back(static_cast<std::uint32_t>(i));
      self(self, remaining - d);
      w.pop_back();
    }
  };
  fill(fill, n);
  return out;
}

WordCombination differentiate(const CobarAlgebra& c, const Word& w) {
  WordCombination out;
  int prefix_degree = 0;
  for (std::size_t pos = 0; pos < w.size(); ++pos) {
    const Scalar sign = sign_scalar(c.field(), prefix_degree);
    for (const auto& t : c.dv(w[pos])) {
      Word image;
      image.reserve(w.size() + 1);
      image.insert(image.end(), w.begin(), w.begin() + pos);
      image.push_back(t.left);
      image.push_back(t.right);
      image.insert(image.end(), w.begin() + pos + 1, w.end());
      out.emplace_back(std::move(image), sign * t.coeff);
    }
    prefix_degree += c.generator(w[pos]).degree;
  }
  return out;
}

SparseMatrix cobar_differential_matrix(const CobarAlgebra& c, int n) {
  const auto source = word_basis(c, n);
  const auto target = word_basis(c, n - 1);
  std::vector<SparseVector> columns(source.size());
  for (std::size_t col = 0; col < source.size(); ++col) {
    for (const auto& [w, s] : differentiate(c, source[col])) {
      const auto it = std::lower_bound(target.begin(), target.end(), w);
      columns[col].push_back({static_cast<std::uint32_t>(it - target.begin()), s});
    }
  }
  return SparseMatrix::from_columns(c.field(), target.size(), std::move(columns));
}

}  // namespace hh
