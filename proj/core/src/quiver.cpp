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

#include <algorithm>
#include <map>

#include "hh/error.hpp"
#include "hh/presentations.hpp"

namespace hh {
namespace {

using Path = std::vector<std::size_t>;

bool ends_with(const Path& p, const Path& rel) {
  return p.size() >= rel.size() && std::equal(rel.rbegin(), rel.rend(), p.rbegin());
}

void check_shape(const QuiverPresentation& qp) {
  if (qp.vertices.empty()) throw ValidationError("quiver has no vertices");
  for (const auto& a : qp.arrows) {
    if (a.source >= qp.vertices.size() || a.target >= qp.vertices.size()) {
      throw ValidationError("arrow " + a.name + " has an endpoint out of range");
    }
  }
  if (qp.loop >= qp.arrows.size()) throw ValidationError("loop arrow index out of range");
  if (qp.vertex >= qp.vertices.size()) throw ValidationError("distinguished vertex out of range");
  const auto& x = qp.arrows[qp.loop];
  if (x.source != qp.vertex || x.target != qp.vertex) {
    throw ValidationError("arrow " + x.name + " is not a loop at " + qp.vertices[qp.vertex]);
  }
  if (qp.power < 2) throw ValidationError("loop power must be at least 2");
  for (const auto& rel : qp.relations) {
    if (rel.size() < 2) throw ValidationError("monomial relations must have length >= 2");
    for (auto a : rel) {
      if (a >= qp.arrows.size()) throw ValidationError("relation uses an unknown arrow");
    }
    for (std::size_t t = 0; t + 1 < rel.size(); ++t) {
      if (qp.arrows[rel[t]].target != qp.arrows[rel[t + 1]].source) {
        throw ValidationError("relation is not a path in the quiver");
      }
    }
  }
  if (qp.path_cap < 2) throw ValidationError("path cap must be at least 2");
}

struct PathBasis {
  std::vector<Path> paths;  // nonzero paths of length >= 1, by length then lex
  std::map<Path, std::size_t> index;
};

PathBasis enumerate_paths(const QuiverPresentation& qp) {
  PathBasis out;
  std::vector<Path> frontier;
  for (std::size_t a = 0; a < qp.arrows.size(); ++a) frontier.push_back({a});
  for (int len = 1; !frontier.empty(); ++len) {
    if (len >= qp.path_cap) {
      throw CapExceeded("quiver ideal is not admissible within path cap " +
                        std::to_string(qp.path_cap) + ": a path of that length survives");
    }
    std::sort(frontier.begin(), frontier.end());
    std::vector<Path> next;
    for (auto& p : frontier) {
      for (std::size_t a = 0; a < qp.arrows.size(); ++a) {
        if (qp.arrows[p.back()].target != qp.arrows[a].source) continue;
        Path q = p;
        q.push_back(a);
        const bool killed = std::any_of(qp.relations.begin(), qp.relations.end(),
                                        [&](const Path& rel) { return ends_with(q, rel); });
        if (!killed) next.push_back(std::move(q));
      }
      out.paths.push_back(std::move(p));
    }
    frontier = std::move(next);
  }
  // Paths of length 1 were pushed first, then 2, ...; each batch was sorted.
  for (std::size_t i = 0; i < out.paths.size(); ++i) out.index[out.paths[i]] = i;
  return out;
}

std::string path_label(const QuiverPresentation& qp, const Path& p) {
  const bool single = std::all_of(qp.arrows.begin(), qp.arrows.end(),
                                  [](const Arrow& a) { return a.name.size() == 1; });
  std::string s;
  for (std::size_t t = 0; t < p.size(); ++t) {
    if (!single && t > 0) s += "*";
    s += qp.arrows[p[t]].name;
  }
  return s;
}

// Basis layout shared by path_algebra and quiver_splitting.
struct Layout {
  PathBasis paths;
  std::vector<std::size_t> vertex_index;  // basis index of e_j, j != vertex
  std::size_t path_offset = 0;
};

Layout layout(const QuiverPresentation& qp) {
  Layout l;
  l.paths = enumerate_paths(qp);
  l.vertex_index.assign(qp.vertices.size(), 0);
  std::size_t next = 1;
  for (std::size_t v = 0; v < qp.vertices.size(); ++v) {
    if (v != qp.vertex) l.vertex_index[v] = next++;
  }
  l.path_offset = next;
  return l;
}

}  // namespace

GradedAlgebra path_algebra(const QuiverPresentation& qp) {
  check_shape(qp);
  const Layout l = layout(qp);
  const FieldContext& field = qp.field;
  std::vector<std::string> labels{"1"};
  for (std::size_t v = 0; v < qp.vertices.size(); ++v) {
    if (v != qp.vertex) labels.push_back(qp.vertices[v]);
  }
  for (const auto& p : l.paths.paths) labels.push_back(path_label(qp, p));

  // Non-unit basis elements: e_j (j != vertex) and nonzero paths.
  struct Element {
    bool is_vertex;
    std::size_t vertex;
    Path path;
  };
  std::vector<std::pair<std::size_t, Element>> elements;
  for (std::size_t v = 0; v < qp.vertices.size(); ++v) {
    if (v != qp.vertex) elements.push_back({l.vertex_index[v], {true, v, {}}});
  }
  for (std::size_t i = 0; i < l.paths.paths.size(); ++i) {
    elements.push_back({l.path_offset + i, {false, 0, l.paths.paths[i]}});
  }
  auto one = [&](std::size_t idx) {
    return SparseVector{{static_cast<std::uint32_t>(idx), field.one()}};
  };
  std::vector<GradedAlgebra::Product> products;
  for (const auto& [ju, u] : elements) {
    for (const auto& [kv, v] : elements) {
      SparseVector value;
      if (u.is_vertex && v.is_vertex) {
        if (u.vertex == v.vertex) value = one(ju);
      } else if (u.is_vertex) {
        if (qp.arrows[v.path.front()].source == u.vertex) value = one(kv);
      } else if (v.is_vertex) {
        if (qp.arrows[u.path.back()].target == v.vertex) value = one(ju);
      } else if (qp.arrows[u.path.back()].target == qp.arrows[v.path.front()].source) {
        Path cat = u.path;
        cat.insert(cat.end(), v.path.begin(), v.path.end());
        const auto it = l.paths.index.find(cat);
        if (it != l.paths.index.end()) value = one(l.path_offset + it->second);
      }
      if (!value.empty()) products.push_back({ju, kv, std::move(value)});
    }
  }
  GradedAlgebra a(field, std::move(labels), 0, std::nullopt, std::move(products));
  a.set_name(qp.name.empty() ? "kQ/I" : qp.name);
  return a;
}

QuiverSplitting quiver_splitting(const QuiverPresentation& qp) {
  check_shape(qp);
  const Path xn(qp.power, qp.loop);
  if (std::find(qp.relations.begin(), qp.relations.end(), xn) == qp.relations.end()) {
    throw HypothesisError("x^" + std::to_string(qp.power) + " is not among the relations");
  }
  for (const auto& rel : qp.relations) {
    if (rel == xn) continue;
    if (std::all_of(rel.begin(), rel.end(), [&](auto a) { return a == qp.loop; })) {
      throw HypothesisError("relation " + path_label(qp, rel) +
                            " is not in the ideal generated by the arrows other than the loop");
    }
  }
  const Layout l = layout(qp);
  const FieldContext& field = qp.field;

  QuiverSplitting s;
  s.a = std::make_shared<const GradedAlgebra>(path_algebra(qp));
  UnivariatePolynomial f(qp.power + 1, field.zero());
  f.back() = field.one();
  s.b = std::make_shared<const GradedAlgebra>(truncated_univariate(field, f));

  s.iota = {s.b, s.a, {}};
  s.iota.images.push_back(s.a->basis_vector(s.a->unit()));
  for (int m = 1; m < qp.power; ++m) {
    const auto it = l.paths.index.find(Path(m, qp.loop));
    if (it == l.paths.index.end()) {
      throw HypothesisError("x^" + std::to_string(m) + " vanishes, so x^n is not the first zero power");
    }
    s.iota.images.push_back(s.a->basis_vector(l.path_offset + it->second));
  }

  s.pi = {s.a, s.b, std::vector<SparseVector>(s.a->dim())};
  s.pi.images[s.a->unit()] = s.b->basis_vector(s.b->unit());
  for (std::size_t i = 0; i < l.paths.paths.size(); ++i) {
    const auto& p = l.paths.paths[i];
    if (std::all_of(p.begin(), p.end(), [&](auto a) { return a == qp.loop; }) &&
        static_cast<int>(p.size()) < qp.power) {
      s.pi.images[l.path_offset + i] = s.b->basis_vector(p.size());
    }
  }
  for (const auto* f : {&s.iota, &s.pi}) {
    const auto diags = validate_morphism(*f);
    if (!diags.empty()) throw ValidationError("quiver splitting morphism invalid: " + diags.front().message);
  }
  if (!is_identity(compose(s.pi, s.iota))) throw ValidationError("pi o iota is not the identity of B");
  return s;
}

}  // namespace hh
