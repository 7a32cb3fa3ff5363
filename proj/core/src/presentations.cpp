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

#include "hh/presentations.hpp"

#include <algorithm>
#include <map>
#include <sstream>

#include "hh/error.hpp"

namespace hh {
namespace {

// Word order used for basis selection: length, then lexicographic on
// generator indices. Callers compare words of equal weight only.
bool word_less(const Word& a, const Word& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

std::string word_label(const std::vector<std::string>& names, const Word& w) {
  if (w.empty()) return "1";
  const bool single_chars =
      std::all_of(names.begin(), names.end(), [](const std::string& s) { return s.size() == 1; });
  std::string out;
  for (std::size_t t = 0; t < w.size(); ++t) {
    if (!single_chars && t > 0) out += "*";
    out += names.at(w[t]);
  }
  return out;
}

struct Rref {
  std::vector<std::vector<Scalar>> rows;  // one per pivot, in pivot order
  std::vector<std::size_t> pivots;
};

// Reduced row echelon form with pivots taken leftmost first.
Rref row_reduce(const FieldContext& field, std::vector<std::vector<Scalar>> m, std::size_t cols) {
  Rref out;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < m.size(); ++c) {
    std::size_t pr = r;
    while (pr < m.size() && m[pr][c].is_zero()) ++pr;
    if (pr == m.size()) continue;
    std::swap(m[r], m[pr]);
    const Scalar inv = m[r][c].inverse();
    for (std::size_t k = c; k < cols; ++k) m[r][k] *= inv;
    for (std::size_t i = 0; i < m.size(); ++i) {
      if (i == r || m[i][c].is_zero()) continue;
      const Scalar f = m[i][c];
      for (std::size_t k = c; k < cols; ++k) m[i][k] -= f * m[r][k];
    }
    out.pivots.push_back(c);
    ++r;
  }
  m.resize(r);
  out.rows = std::move(m);
  (void)field;
  return out;
}

// Per-degree quotient data built by realize.
struct Level {
  std::vector<Word> words;
  // right[g][b]: class of words[b] * g, over the basis of level d + weight(g).
  std::vector<std::vector<SparseVector>> right;
};

}  // namespace

int FreePresentation::weight(const Word& w) const {
  int total = 0;
  for (auto g : w) total += generators.at(g).weight;
  return total;
}

SparseVector Realization::normal_form(const Word& w) const {
  SparseVector x = algebra.basis_vector(algebra.unit());
  for (auto g : w) x = multiply(algebra, x, generator_images.at(g));
  return x;
}

Realization realize_with_words(const FreePresentation& pres) {
  const FieldContext& field = pres.field;
  const std::size_t ngen = pres.generators.size();
  if (ngen == 0) throw ValidationError("presentation has no generators");
  int max_weight = 1;
  for (const auto& g : pres.generators) {
    if (g.weight < 1) throw ValidationError("generator " + g.name + " must have positive weight");
    max_weight = std::max(max_weight, g.weight);
  }
  if (pres.degree_cap < 1) throw ValidationError("degree cap must be positive");

  struct Relation {
    int weight;
    NcPolynomial terms;
  };
  std::vector<Relation> relations;
  for (std::size_t r = 0; r < pres.relations.size(); ++r) {
    std::map<Word, Scalar> combined;
    for (const auto& t : pres.relations[r]) {
      for (auto g : t.word) {
        if (g >= ngen) throw ValidationError("relation uses an unknown generator");
      }
      combined[t.word] += field.coerce(t.coeff);
    }
    NcPolynomial terms;
    int weight = -1;
    for (auto& [w, c] : combined) {
      if (c.is_zero()) continue;
      if (w.empty()) {
        throw ValidationError("relation " + std::to_string(r + 1) + " has a constant term");
      }
      const int wt = pres.weight(w);
      if (weight >= 0 && wt != weight) {
        throw ValidationError("relation " + std::to_string(r + 1) +
                              " is not weighted-homogeneous");
      }
      weight = wt;
      terms.push_back({w, c});
    }
    if (!terms.empty()) relations.push_back({weight, std::move(terms)});
  }

  std::vector<Level> levels(1);
  levels[0].words = {Word{}};

  // Class of (element of level e) * g, over level e + weight(g).
  auto right_multiply = [&](const SparseVector& x, int e, std::uint32_t g) {
    SparseVector out;
    const auto& table = levels[e].right[g];
    for (const auto& t : x) axpy(out, t.value, table[t.index]);
    return out;
  };

  int zero_run = 0;
  int d = 1;
  bool finite = false;
  for (; d <= pres.degree_cap; ++d) {
    // Spanning set of degree d: (basis word of degree d - w_g) * g.
    struct Coord {
      Word word;
      int level;
      std::size_t basis;
      std::uint32_t gen;
    };
    std::vector<Coord> coords;
    for (std::uint32_t g = 0; g < ngen; ++g) {
      const int e = d - pres.generators[g].weight;
      if (e < 0) continue;
      for (std::size_t b = 0; b < levels[e].words.size(); ++b) {
        Word w = levels[e].words[b];
        w.push_back(g);
        coords.push_back({std::move(w), e, b, g});
      }
    }
    std::sort(coords.begin(), coords.end(),
              [](const Coord& a, const Coord& b) { return word_less(a.word, b.word); });
    std::map<std::tuple<int, std::size_t, std::uint32_t>, std::size_t> column_of;
    for (std::size_t c = 0; c < coords.size(); ++c) {
      column_of[{coords[c].level, coords[c].basis, coords[c].gen}] = c;
    }

    // Relations u * f for u running over the basis of degree d - w_f.
    std::vector<std::vector<Scalar>> rows;
    for (const auto& rel : relations) {
      const int e = d - rel.weight;
      if (e < 0) continue;
      for (std::size_t u = 0; u < levels[e].words.size(); ++u) {
        std::vector<Scalar> row(coords.size(), field.zero());
        bool nonzero = false;
        for (const auto& term : rel.terms) {
          SparseVector x{{static_cast<std::uint32_t>(u), field.one()}};
          int level = e;
          for (std::size_t t = 0; t + 1 < term.word.size() && !x.empty(); ++t) {
            x = right_multiply(x, level, term.word[t]);
            level += pres.generators[term.word[t]].weight;
          }
          const std::uint32_t last = term.word.back();
          for (const auto& entry : x) {
            row[column_of.at({level, entry.index, last})] += term.coeff * entry.value;
            nonzero = true;
          }
        }
        if (nonzero) rows.push_back(std::move(row));
      }
    }

    const Rref rref = row_reduce(field, std::move(rows), coords.size());
    std::vector<long> pivot_row(coords.size(), -1);
    for (std::size_t r = 0; r < rref.pivots.size(); ++r) pivot_row[rref.pivots[r]] = static_cast<long>(r);
    std::vector<long> basis_pos(coords.size(), -1);
    Level level;
    for (std::size_t c = 0; c < coords.size(); ++c) {
      if (pivot_row[c] >= 0) continue;
      basis_pos[c] = static_cast<long>(level.words.size());
      level.words.push_back(coords[c].word);
    }
    // Fill the right-multiplication tables that land in this degree.
    for (std::size_t c = 0; c < coords.size(); ++c) {
      SparseVector nf;
      if (basis_pos[c] >= 0) {
        nf.push_back({static_cast<std::uint32_t>(basis_pos[c]), field.one()});
      } else {
        const auto& row = rref.rows[pivot_row[c]];
        for (std::size_t k = 0; k < coords.size(); ++k) {
          if (basis_pos[k] >= 0 && !row[k].is_zero()) {
            nf.push_back({static_cast<std::uint32_t>(basis_pos[k]), -row[k]});
          }
        }
      }
      auto& src = levels[coords[c].level];
      if (src.right.empty()) src.right.assign(ngen, {});
      auto& table = src.right[coords[c].gen];
      if (table.empty()) table.assign(src.words.size(), {});
      table[coords[c].basis] = std::move(nf);
    }
    const bool empty = level.words.empty();
    levels.push_back(std::move(level));
    zero_run = empty ? zero_run + 1 : 0;
    if (zero_run >= max_weight) {
      finite = true;
      break;
    }
  }
  if (!finite) {
    int top = static_cast<int>(levels.size()) - 1;
    while (top > 0 && levels[top].words.empty()) --top;
    std::vector<std::string> names;
    for (const auto& g : pres.generators) names.push_back(g.name);
    std::ostringstream os;
    os << "algebra is not finite-dimensional within degree cap " << pres.degree_cap
       << "; surviving words in degree " << top << ":";
    std::size_t shown = 0;
    for (const auto& w : levels[top].words) {
      if (shown++ == 8) {
        os << " ...";
        break;
      }
      os << " " << word_label(names, w);
    }
    throw CapExceeded(os.str());
  }
  // Degrees past the computed range are zero; give every level full tables.
  const int last_level = static_cast<int>(levels.size()) - 1;
  for (auto& lv : levels) {
    if (lv.right.empty()) lv.right.assign(ngen, {});
    for (auto& t : lv.right) {
      if (t.empty()) t.assign(lv.words.size(), {});
    }
  }

  // Global indexing: unit first, then by degree.
  std::vector<std::size_t> offset(levels.size() + 1, 0);
  for (std::size_t e = 0; e < levels.size(); ++e) offset[e + 1] = offset[e] + levels[e].words.size();
  const std::size_t dim = offset.back();
  std::vector<std::string> names;
  for (const auto& g : pres.generators) names.push_back(g.name);

  Realization out;
  std::vector<std::string> labels;
  std::vector<int> degrees;
  for (std::size_t e = 0; e < levels.size(); ++e) {
    for (const auto& w : levels[e].words) {
      out.basis_words.push_back(w);
      labels.push_back(word_label(names, w));
      degrees.push_back(static_cast<int>(e));
    }
  }
  auto globalize = [&](const SparseVector& x, int e) {
    SparseVector g;
    for (const auto& t : x) g.push_back({static_cast<std::uint32_t>(offset[e] + t.index), t.value});
    return g;
  };

  std::vector<GradedAlgebra::Product> products;
  for (std::size_t j = 0; j < dim; ++j) {
    for (std::size_t k = 0; k < dim; ++k) {
      SparseVector x{{static_cast<std::uint32_t>(j - offset[degrees[j]]), field.one()}};
      int level = degrees[j];
      for (auto g : out.basis_words[k]) {
        const int next = level + pres.generators[g].weight;
        if (next > last_level) {
          x.clear();
          break;
        }
        x = right_multiply(x, level, g);
        level = next;
        if (x.empty()) break;
      }
      if (!x.empty()) products.push_back({j, k, globalize(x, level)});
    }
  }
  out.algebra = GradedAlgebra(field, std::move(labels), 0, degrees, std::move(products));
  out.algebra.set_name(pres.name);
  for (std::uint32_t g = 0; g < ngen; ++g) {
    const int w = pres.generators[g].weight;
    out.generator_images.push_back(w > last_level ? SparseVector{}
                                                  : globalize(levels[0].right[g][0], w));
  }
  return out;
}

GradedAlgebra realize(const FreePresentation& pres) { return realize_with_words(pres).algebra; }

GradedAlgebra quantum_ci(const FieldContext& field, const Scalar& q_in, int a, int b) {
  const Scalar q = field.coerce(q_in);
  if (q.is_zero()) throw ValidationError("quantum_ci requires q != 0");
  if (a < 2 || b < 2) throw ValidationError("quantum_ci requires a, b >= 2");
  // Basis y^j x^i ordered by degree, then by ascending j (the word order).
  struct Mono {
    int j, i;
  };
  std::vector<Mono> monos;
  for (int d = 0; d <= a + b - 2; ++d) {
    for (int j = 0; j < b; ++j) {
      const int i = d - j;
      if (i >= 0 && i < a) monos.push_back({j, i});
    }
  }
  std::map<std::pair<int, int>, std::size_t> index;
  std::vector<std::string> labels;
  std::vector<int> degrees;
  for (std::size_t n = 0; n < monos.size(); ++n) {
    index[{monos[n].j, monos[n].i}] = n;
    std::string s = std::string(monos[n].j, 'y') + std::string(monos[n].i, 'x');
    labels.push_back(s.empty() ? "1" : s);
    degrees.push_back(monos[n].i + monos[n].j);
  }
  std::vector<GradedAlgebra::Product> products;
  for (std::size_t s = 0; s < monos.size(); ++s) {
    for (std::size_t t = 0; t < monos.size(); ++t) {
      // (y^j x^i)(y^l x^m) = q^{il} y^{j+l} x^{i+m}
      const auto [j, i] = monos[s];
      const auto [l, m] = monos[t];
      if (j + l >= b || i + m >= a) continue;
      Scalar c = field.one();
      for (int e = 0; e < i * l; ++e) c *= q;
      products.push_back({s, t, {{static_cast<std::uint32_t>(index.at({j + l, i + m})), c}}});
    }
  }
  GradedAlgebra out(field, std::move(labels), 0, degrees, std::move(products));
  out.set_name("A_q(q=" + q.to_string() + ",a=" + std::to_string(a) + ",b=" + std::to_string(b) +
               ")");
  return out;
}

FreePresentation quantum_ci_presentation(const FieldContext& field, const Scalar& q, int a,
                                         int b) {
  FreePresentation p;
  p.field = field;
  p.generators = {{"x", 1}, {"y", 1}};
  p.relations = {
      {{Word(a, 0), field.one()}},
      {{Word(b, 1), field.one()}},
      {{Word{0, 1}, field.one()}, {Word{1, 0}, -field.coerce(q)}},
  };
  p.degree_cap = std::max(FreePresentation::kDefaultDegreeCap, a + b);
  p.name = "A_q(q=" + field.coerce(q).to_string() + ",a=" + std::to_string(a) +
           ",b=" + std::to_string(b) + ")";
  return p;
}

FreePresentation xy_zero_example_presentation(const FieldContext& field, const Scalar& q_in) {
  const Scalar one = field.one();
  const Scalar q = field.coerce(q_in);
  FreePresentation p;
  p.field = field;
  p.generators = {{"x", 1}, {"y", 1}, {"z", 1}};
  p.relations = {
      {{Word{0, 1}, one}},
      {{Word{1, 0}, one}},
      {{Word{0, 0}, one}, {Word{1, 1}, -one}},
      {{Word{0, 0}, one}, {Word{2, 2}, -one}},
      {{Word{0, 2}, one}, {Word{2, 0}, -q}},
      {{Word{1, 2}, one}, {Word{2, 1}, -q}},
  };
  p.name = "k<x,y,z>/(xy,yx,x2-y2,x2-z2,xz-qzx,yz-qzy), q=" + q.to_string();
  return p;
}

UnivariatePolynomial trimmed(UnivariatePolynomial f) {
  while (!f.empty() && f.back().is_zero()) f.pop_back();
  return f;
}

UnivariatePolynomial derivative(const UnivariatePolynomial& f) {
  UnivariatePolynomial out;
  for (std::size_t i = 1; i < f.size(); ++i) {
    Scalar c = f[i];
    c *= Scalar(mpq_class(static_cast<long>(i)));
    out.push_back(c);
  }
  return trimmed(std::move(out));
}

UnivariatePolynomial polynomial_gcd(const FieldContext& field, UnivariatePolynomial f,
                                    UnivariatePolynomial g) {
  for (auto& c : f) c = field.coerce(c);
  for (auto& c : g) c = field.coerce(c);
  f = trimmed(std::move(f));
  g = trimmed(std::move(g));
  while (!g.empty()) {
    // f <- f mod g
    const Scalar lead_inv = g.back().inverse();
    while (f.size() >= g.size() && !f.empty()) {
      const Scalar c = f.back() * lead_inv;
      const std::size_t shift = f.size() - g.size();
      for (std::size_t i = 0; i < g.size(); ++i) f[shift + i] -= c * g[i];
      f = trimmed(std::move(f));
    }
    std::swap(f, g);
  }
  if (!f.empty()) {
    const Scalar inv = f.back().inverse();
    for (auto& c : f) c *= inv;
  }
  return f;
}

bool is_smooth_univariate(const FieldContext& field, const UnivariatePolynomial& f) {
  const auto g = polynomial_gcd(field, f, derivative(f));
  return g.size() == 1;
}

GradedAlgebra truncated_univariate(const FieldContext& field, UnivariatePolynomial f) {
  for (auto& c : f) c = field.coerce(c);
  f = trimmed(std::move(f));
  if (f.size() < 3) throw ValidationError("truncated_univariate requires deg f >= 2");
  if (!f[0].is_zero()) {
    throw ValidationError("truncated_univariate requires f(0) = 0 (nonzero constant term)");
  }
  const Scalar inv = f.back().inverse();
  for (auto& c : f) c *= inv;
  const std::size_t m = f.size() - 1;
  bool monomial = true;
  for (std::size_t i = 0; i < m; ++i) monomial = monomial && f[i].is_zero();

  // powers[k] = x^k reduced, as dense coefficients over 1..x^{m-1}.
  std::vector<std::vector<Scalar>> powers;
  std::vector<Scalar> cur(m, field.zero());
  cur[0] = field.one();
  for (std::size_t k = 0; k <= 2 * m - 2; ++k) {
    powers.push_back(cur);
    std::vector<Scalar> next(m, field.zero());
    for (std::size_t i = 0; i + 1 < m; ++i) next[i + 1] = cur[i];
    const Scalar top = cur[m - 1];
    for (std::size_t i = 0; i < m; ++i) next[i] -= top * f[i];
    cur = std::move(next);
  }
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < m; ++i) {
    labels.push_back(i == 0 ? "1" : i == 1 ? "x" : "x^" + std::to_string(i));
  }
  std::vector<GradedAlgebra::Product> products;
  for (std::size_t i = 0; i < m; ++i) {
    for (std::size_t j = 0; j < m; ++j) {
      auto v = to_sparse(powers[i + j]);
      if (!v.empty()) products.push_back({i, j, std::move(v)});
    }
  }
  std::optional<std::vector<int>> degrees;
  if (monomial) {
    degrees.emplace();
    for (std::size_t i = 0; i < m; ++i) degrees->push_back(static_cast<int>(i));
  }
  GradedAlgebra out(field, std::move(labels), 0, std::move(degrees), std::move(products));
  std::ostringstream name;
  name << "k[x]/(";
  bool first = true;
  for (std::size_t i = f.size(); i-- > 0;) {
    if (f[i].is_zero()) continue;
    if (!first) name << " + ";
    first = false;
    if (!f[i].is_one() || i == 0) name << f[i].to_string();
    if (i > 0) name << "x" << (i > 1 ? "^" + std::to_string(i) : "");
  }
  name << ")";
  out.set_name(name.str());
  return out;
}

namespace {

SparseVector apply_morphism(const AlgebraMorphism& f, const SparseVector& x) {
  SparseVector out;
  for (const auto& t : x) axpy(out, t.value, f.images.at(t.index));
  return out;
}

}  // namespace

std::vector<Diagnostic> validate_morphism(const AlgebraMorphism& f) {
  std::vector<Diagnostic> out;
  const auto& src = *f.source;
  const auto& tgt = *f.target;
  if (f.images.size() != src.dim()) {
    out.push_back({"shape", {}, "morphism needs one image per source basis element"});
    return out;
  }
  for (const auto& img : f.images) {
    if (!img.empty() && img.back().index >= tgt.dim()) {
      out.push_back({"shape", {}, "image coordinate out of range"});
      return out;
    }
  }
  if (f.images[src.unit()] != tgt.basis_vector(tgt.unit()) ) {
    out.push_back({"unit", {src.unit()}, "unit is not sent to the unit"});
  }
  for (std::size_t j = 0; j < src.dim(); ++j) {
    for (std::size_t k = 0; k < src.dim(); ++k) {
      SparseVector lhs = apply_morphism(f, src.product(j, k));
      const SparseVector rhs = multiply(tgt, f.images[j], f.images[k]);
      axpy(lhs, tgt.field().from_int(-1), rhs);
      if (!lhs.empty()) {
        out.push_back({"multiplicativity", {j, k},
                       "f(" + src.label(j) + "*" + src.label(k) + ") != f(" + src.label(j) +
                           ")f(" + src.label(k) + ")"});
      }
    }
  }
  if (src.is_graded() && tgt.is_graded()) {
    for (std::size_t i = 0; i < src.dim(); ++i) {
      for (const auto& t : f.images[i]) {
        if (tgt.degree(t.index) != src.degree(i)) {
          out.push_back({"degree", {i}, "image of " + src.label(i) + " is not homogeneous of the same degree"});
          break;
        }
      }
    }
  }
  return out;
}

AlgebraMorphism compose(const AlgebraMorphism& after, const AlgebraMorphism& before) {
  if (before.target->dim() != after.source->dim()) {
    throw ValidationError("compose: intermediate algebras differ");
  }
  AlgebraMorphism out{before.source, after.target, {}};
  for (const auto& img : before.images) out.images.push_back(apply_morphism(after, img));
  return out;
}

bool is_identity(const AlgebraMorphism& f) {
  if (f.source->dim() != f.target->dim()) return false;
  for (std::size_t i = 0; i < f.images.size(); ++i) {
    if (f.images[i] != f.source->basis_vector(i)) return false;
  }
  return true;
}

std::size_t split_relation(const FreePresentation& pres) {
  if (pres.generators.empty()) throw HypothesisError("presentation has no generators");
  std::optional<std::size_t> f1;
  for (std::size_t r = 0; r < pres.relations.size(); ++r) {
    const auto& rel = pres.relations[r];
    bool pure = !rel.empty();
    for (const auto& t : rel) {
      pure = pure && std::all_of(t.word.begin(), t.word.end(), [](auto g) { return g == 0; });
    }
    if (!pure) continue;
    if (f1) {
      throw HypothesisError("more than one relation lies in k[" + pres.generators[0].name + "]");
    }
    f1 = r;
  }
  if (!f1) {
    throw HypothesisError("no relation lies in k[" + pres.generators[0].name + "]");
  }
  for (std::size_t r = 0; r < pres.relations.size(); ++r) {
    if (r == *f1) continue;
    for (const auto& t : pres.relations[r]) {
      const bool has_other = std::any_of(t.word.begin(), t.word.end(), [](auto g) { return g != 0; });
      if (!has_other && !t.coeff.is_zero()) {
        throw HypothesisError("relation " + std::to_string(r + 1) + " has a monomial purely in " +
                              pres.generators[0].name +
                              ", so it is not in the ideal of the other generators");
      }
    }
  }
  return *f1;
}

UnivariatePolynomial as_univariate(const FieldContext& field, const NcPolynomial& f) {
  UnivariatePolynomial out;
  for (const auto& t : f) {
    if (out.size() <= t.word.size()) out.resize(t.word.size() + 1, field.zero());
    out[t.word.size()] += field.coerce(t.coeff);
  }
  return trimmed(std::move(out));
}

Splitting splitting_morphisms(const FreePresentation& pres) {
  const std::size_t r = split_relation(pres);
  Splitting s;
  s.f1 = as_univariate(pres.field, pres.relations[r]);
  GradedAlgebra b = truncated_univariate(pres.field, s.f1);
  const int w0 = pres.generators[0].weight;
  if (b.is_graded() && w0 != 1) {
    std::vector<int> deg = *b.degrees();
    for (int& d : deg) d *= w0;
    auto named = b.name();
    b = GradedAlgebra(b.field(), b.labels(), b.unit(), deg, b.products());
    b.set_name(named);
  }
  const Realization real = realize_with_words(pres);
  s.a = std::make_shared<const GradedAlgebra>(real.algebra);
  s.b = std::make_shared<const GradedAlgebra>(std::move(b));

  s.iota = {s.b, s.a, {}};
  for (std::size_t i = 0; i < s.b->dim(); ++i) s.iota.images.push_back(real.normal_form(Word(i, 0)));

  s.pi = {s.a, s.b, {}};
  const SparseVector x = s.b->basis_vector(1);
  for (const auto& w : real.basis_words) {
    const bool pure = std::all_of(w.begin(), w.end(), [](auto g) { return g == 0; });
    SparseVector img;
    if (pure) {
      img = s.b->basis_vector(s.b->unit());
      for (std::size_t t = 0; t < w.size(); ++t) img = multiply(*s.b, img, x);
    }
    s.pi.images.push_back(std::move(img));
  }
  for (const auto* f : {&s.iota, &s.pi}) {
    const auto diags = validate_morphism(*f);
    if (!diags.empty()) throw ValidationError("splitting morphism invalid: " + diags.front().message);
  }
  if (!is_identity(compose(s.pi, s.iota))) throw ValidationError("pi o iota is not the identity of B");
  return s;
}

}  // namespace hh
