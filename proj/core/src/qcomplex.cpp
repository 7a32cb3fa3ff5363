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

#include "hh/qcomplex.hpp"

#include <algorithm>
#include <future>
#include <map>
#include <nlohmann/json.hpp>
#include <sstream>

#include "hh/bar.hpp"
#include "hh/error.hpp"
#include "hh/parallel.hpp"

namespace hh {
namespace {

Word key_of(const QElement& e) {
  Word k = e.word;
  k.push_back(*e.bar);
  return k;
}

}  // namespace

bool operator<(const QElement& a, const QElement& b) {
  if (a.bar.has_value() != b.bar.has_value()) return !a.bar.has_value();
  if (!a.bar) return a.word < b.word;
  return key_of(a) < key_of(b);
}

QBasis::QBasis(int degree, std::vector<Word> sector_one, std::vector<Word> sector_two_keys)
    : degree_(degree), one_(std::move(sector_one)), two_(std::move(sector_two_keys)) {
  std::sort(one_.begin(), one_.end());
  std::sort(two_.begin(), two_.end());
}

QElement QBasis::element(std::size_t i) const {
  if (i < one_.size()) return {one_[i], std::nullopt};
  const Word& k = two_.at(i - one_.size());
  return {Word(k.begin(), k.end() - 1), k.back()};
}

std::optional<std::size_t> QBasis::index_of(const QElement& e) const {
  const auto find = [](const std::vector<Word>& v, const Word& w) -> std::optional<std::size_t> {
    const auto it = std::lower_bound(v.begin(), v.end(), w);
    if (it == v.end() || *it != w) return std::nullopt;
    return static_cast<std::size_t>(it - v.begin());
  };
  if (!e.bar) return find(one_, e.word);
  const auto i = find(two_, key_of(e));
  if (!i) return std::nullopt;
  return one_.size() + *i;
}

void require_odd_generators(const CobarAlgebra& c) {
  for (const auto& g : c.generators()) {
    if (g.degree % 2 == 0) {
      throw ValidationError("Q_* needs every generator in odd degree (even-graded algebra)");
    }
  }
}

int q_degree(const CobarAlgebra& c, const QElement& e) {
  int d = word_degree(c, e.word);
  if (e.bar) d += c.generator(*e.bar).degree + 1;
  return d;
}

QBasis q_basis(const CobarAlgebra& c, int n) {
  std::vector<Word> two;
  for (std::size_t j = 0; j < c.size(); ++j) {
    for (Word w : word_basis(c, n - 1 - c.generator(j).degree)) {
      w.push_back(static_cast<std::uint32_t>(j));
      two.push_back(std::move(w));
    }
  }
  return QBasis(n, word_basis(c, n), std::move(two));
}

std::vector<QTerm> apply_delta(const CobarAlgebra& c, const QElement& e) {
  std::vector<QTerm> out;
  for (auto& [w, s] : differentiate(c, e.word)) out.push_back({{std::move(w), e.bar}, s});
  if (!e.bar) return out;

  const FieldContext& f = c.field();
  const std::uint32_t v = *e.bar;
  const Word& a = e.word;
  const Scalar a_sign = sign_scalar(f, word_degree(c, a));
  const Scalar minus_one = f.from_int(-1);
  auto concat = [](std::initializer_list<const Word*> parts) {
    Word w;
    for (const Word* p : parts) w.insert(w.end(), p->begin(), p->end());
    return w;
  };
  const Word letter{v};
  out.push_back({{concat({&a, &letter}), std::nullopt}, a_sign});
  out.push_back({{concat({&letter, &a}), std::nullopt}, minus_one});
  for (const auto& t : c.dv(v)) {
    const Word left{t.left};
    const Word right{t.right};
    out.push_back({{concat({&a, &left}), t.right}, a_sign * t.coeff});
    out.push_back({{concat({&right, &a}), t.left}, -t.coeff});
  }
  return out;
}

SparseMatrix q_differential(const CobarAlgebra& c, int n) {
  require_odd_generators(c);
  const QBasis source = q_basis(c, n);
  const QBasis target = q_basis(c, n - 1);
  std::vector<SparseVector> columns(source.size());
  for (std::size_t col = 0; col < source.size(); ++col) {
    for (const auto& t : apply_delta(c, source.element(col))) {
      const auto row = target.index_of(t.element);
      if (!row) throw Error("delta left its degree; inconsistent cobar data");
      columns[col].push_back({static_cast<std::uint32_t>(*row), t.coeff});
    }
  }
  return SparseMatrix::from_columns(c.field(), target.size(), std::move(columns));
}

std::size_t q_homology_dim(const CobarAlgebra& c, int n, int cap) {
  return q_homology_dims(c, n, cap).at(n);
}

std::vector<std::size_t> q_homology_dims(const CobarAlgebra& c, int n_max, int cap,
                                         unsigned jobs) {
  if (n_max < 0) throw ValidationError("n must be non-negative");
  if (n_max + 1 > cap) {
    throw CapExceeded("H_" + std::to_string(n_max) + "(Q) needs degree " +
                      std::to_string(n_max + 1) + " above the word cap " + std::to_string(cap));
  }
  require_odd_generators(c);
  struct SliceRank {
    std::size_t size = 0;
    std::size_t rank = 0;
  };
  // Largest degree first: it dominates the run time.
  const auto ranks = parallel_map(jobs, static_cast<std::size_t>(n_max) + 2, [&](std::size_t i) {
    const SparseMatrix d = q_differential(c, n_max + 1 - static_cast<int>(i));
    return SliceRank{d.cols(), rank(d)};
  });
  auto at = [&](int n) { return ranks[static_cast<std::size_t>(n_max + 1 - n)]; };
  std::vector<std::size_t> out;
  for (int n = 0; n <= n_max; ++n) out.push_back(homology_dim(at(n).size, at(n).rank, at(n + 1).rank));
  return out;
}

bool DualityReport::all_match() const { return !first_mismatch().has_value(); }

std::optional<int> DualityReport::first_mismatch() const {
  for (const auto& r : rows) {
    if (!r.match()) return r.n;
  }
  return std::nullopt;
}

DualityReport duality_check(const GradedAlgebra& a, int n_max, int cap, unsigned jobs,
                            bool check_square_zero) {
  const GradedAlgebra even = regrade_even(a);
  const CobarAlgebra omega = build_cobar(even, check_square_zero);
  std::vector<std::size_t> q_side;
  std::vector<DegreeDim> bar_side;
  if (jobs > 1) {
    auto q_future = std::async(std::launch::async, [&] {
      return q_homology_dims(omega, n_max, cap, std::max(1u, jobs / 2));
    });
    bar_side = negative_degree_dims(even, n_max, std::max(1u, jobs - jobs / 2));
    q_side = q_future.get();
  } else {
    q_side = q_homology_dims(omega, n_max, cap, 1);
    bar_side = negative_degree_dims(even, n_max, 1);
  }
  DualityReport r;
  r.algebra = a.name();
  r.field = a.field().name();
  r.n_max = n_max;
  for (int n = 0; n <= n_max; ++n) r.rows.push_back({n, q_side[n], bar_side[n].dim});
  return r;
}

std::string to_json(const DualityReport& r) {
  nlohmann::json j;
  j["algebra"] = r.algebra;
  j["field"] = r.field;
  j["n_max"] = r.n_max;
  nlohmann::json rows = nlohmann::json::array();
  for (const auto& row : r.rows) {
    rows.push_back({{"n", row.n}, {"dim_Q", row.dim_q}, {"dim_bar", row.dim_bar},
                    {"match", row.match()}});
  }
  j["rows"] = rows;
  j["all_match"] = r.all_match();
  return j.dump(2) + "\n";
}

std::string to_text(const DualityReport& r) {
  std::ostringstream out;
  out << "duality for " << (r.algebra.empty() ? "A" : r.algebra) << " over " << r.field
      << ", n <= " << r.n_max << '\n';
  out << "  n  dim H_n(Q)  dim HH_{-n}\n";
  for (const auto& row : r.rows) {
    out << "  " << row.n << "  " << row.dim_q << "  " << row.dim_bar
        << (row.match() ? "" : "  MISMATCH") << '\n';
  }
  if (const auto bad = r.first_mismatch()) {
    out << "first mismatch at n = " << *bad << '\n';
  } else {
    out << "all rows match\n";
  }
  return out.str();
}

QChain x_cycle(const CobarAlgebra& c, int n, std::size_t i1, std::size_t i2) {
  if (n < 1) throw ValidationError("X_n needs n >= 1");
  if (i1 == i2 || i1 >= c.size() || i2 >= c.size()) {
    throw ValidationError("X_n needs two distinct generator indices");
  }
  auto alternating = [n](std::uint32_t first, std::uint32_t second) {
    Word w;
    for (int i = 0; i < 2 * n - 1; ++i) w.push_back(i % 2 == 0 ? first : second);
    return w;
  };
  const auto a = static_cast<std::uint32_t>(i1);
  const auto b = static_cast<std::uint32_t>(i2);
  QChain x;
  x.degree = n * (c.generator(i1).degree + c.generator(i2).degree) + 1;
  x.terms.push_back({{alternating(a, b), b}, c.field().one()});
  x.terms.push_back({{alternating(b, a), a}, c.field().from_int(-1)});
  return x;
}

bool is_cycle(const CobarAlgebra& c, const QChain& x) {
  require_odd_generators(c);
  std::map<QElement, Scalar> sum;
  for (const auto& term : x.terms) {
    for (const auto& t : apply_delta(c, term.element)) {
      auto [it, inserted] = sum.try_emplace(t.element, c.field().zero());
      it->second += term.coeff * t.coeff;
    }
  }
  return std::all_of(sum.begin(), sum.end(), [](const auto& kv) { return kv.second.is_zero(); });
}

bool is_boundary(const CobarAlgebra& c, const QChain& x, int cap) {
  if (x.degree + 1 > cap) {
    throw CapExceeded("boundary test in degree " + std::to_string(x.degree) +
                      " needs the full degree-" + std::to_string(x.degree + 1) +
                      " slice, above the word cap " + std::to_string(cap));
  }
  const QBasis basis = q_basis(c, x.degree);
  SparseVector v;
  for (const auto& t : x.terms) {
    const auto i = basis.index_of(t.element);
    if (!i) throw ValidationError("chain term does not have the chain's degree");
    v.push_back({static_cast<std::uint32_t>(*i), t.coeff});
  }
  canonicalize(v);
  return in_image(q_differential(c, x.degree + 1), v);
}

std::optional<std::pair<std::size_t, std::size_t>> xy_zero_generators(const GradedAlgebra& a) {
  if (!a.is_graded() || !a.is_connected()) {
    throw ValidationError("xy_zero_generators needs a graded connected algebra");
  }
  const auto reduced = a.reduced_basis();
  std::vector<bool> in_product(a.dim(), false);
  for (auto j : reduced) {
    for (auto k : reduced) {
      for (const auto& e : a.product(j, k)) in_product[e.index] = true;
    }
  }
  const auto gens = indecomposables(a);
  for (std::size_t s = 0; s < gens.size(); ++s) {
    for (std::size_t t = s + 1; t < gens.size(); ++t) {
      const auto i1 = gens[s];
      const auto i2 = gens[t];
      if (in_product[i1] || in_product[i2]) continue;
      if (a.product(i1, i2).empty() && a.product(i2, i1).empty()) return std::pair{i1, i2};
    }
  }
  return std::nullopt;
}

}  // namespace hh
