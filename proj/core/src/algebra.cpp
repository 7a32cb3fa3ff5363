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

#include "hh/algebra.hpp"

#include <algorithm>
#include <map>
#include <sstream>
#include <tuple>

#include "hh/error.hpp"

namespace hh {
namespace {

constexpr std::size_t kMaxDiagnosticsPerLaw = 16;

std::string join_labels(const GradedAlgebra& a, std::initializer_list<std::size_t> idx) {
  std::ostringstream os;
  bool first = true;
  for (auto i : idx) {
    os << (first ? "" : ",") << a.label(i);
    first = false;
  }
  return os.str();
}

}  // namespace

GradedAlgebra::GradedAlgebra(FieldContext field, std::vector<std::string> labels,
                             std::size_t unit, std::optional<std::vector<int>> degrees,
                             std::vector<Product> products)
    : field_(field), labels_(std::move(labels)), unit_(unit), degrees_(std::move(degrees)) {
  const std::size_t n = labels_.size();
  if (n == 0) throw ValidationError("algebra basis is empty");
  if (unit_ >= n) throw ValidationError("unit index out of range");
  if (degrees_) {
    if (degrees_->size() != n) throw ValidationError("degree list length differs from basis size");
    for (int d : *degrees_) {
      if (d < 0) throw ValidationError("negative internal degree");
    }
  }
  table_.assign(n * n, {});
  std::vector<char> listed(n * n, 0);
  for (auto& p : products) {
    if (p.left >= n || p.right >= n) throw ValidationError("product index out of range");
    auto& slot = listed[p.left * n + p.right];
    if (slot) {
      throw ValidationError("product " + labels_[p.left] + "*" + labels_[p.right] +
                            " listed twice");
    }
    slot = 1;
    for (auto& e : p.value) {
      if (e.index >= n) throw ValidationError("product coefficient index out of range");
      e.value = field_.coerce(e.value);
    }
    table_[p.left * n + p.right] = canonicalized(std::move(p.value));
  }
  for (std::size_t k = 0; k < n; ++k) {
    if (!listed[unit_ * n + k]) table_[unit_ * n + k] = {{static_cast<std::uint32_t>(k), field_.one()}};
    if (!listed[k * n + unit_]) table_[k * n + unit_] = {{static_cast<std::uint32_t>(k), field_.one()}};
  }
}

std::optional<std::size_t> GradedAlgebra::index_of(std::string_view label) const {
  const auto it = std::find(labels_.begin(), labels_.end(), label);
  if (it == labels_.end()) return std::nullopt;
  return static_cast<std::size_t>(it - labels_.begin());
}

int GradedAlgebra::degree(std::size_t i) const {
  if (!degrees_) throw ValidationError("algebra is not graded");
  return degrees_->at(i);
}

bool GradedAlgebra::is_connected() const {
  if (!degrees_) return false;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (((*degrees_)[i] == 0) != (i == unit_)) return false;
  }
  return true;
}

bool GradedAlgebra::is_even() const {
  return degrees_ && std::all_of(degrees_->begin(), degrees_->end(),
                                 [](int d) { return d % 2 == 0; });
}

int GradedAlgebra::top_degree() const {
  if (!degrees_) throw ValidationError("algebra is not graded");
  return *std::max_element(degrees_->begin(), degrees_->end());
}

std::vector<GradedAlgebra::Product> GradedAlgebra::products() const {
  std::vector<Product> out;
  for (std::size_t j = 0; j < dim(); ++j) {
    for (std::size_t k = 0; k < dim(); ++k) {
      if (!product(j, k).empty()) out.push_back({j, k, product(j, k)});
    }
  }
  return out;
}

std::vector<std::size_t> GradedAlgebra::reduced_basis() const {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < dim(); ++i) {
    if (i != unit_) out.push_back(i);
  }
  return out;
}

std::optional<std::vector<Scalar>> GradedAlgebra::augmentation() const {
  for (auto j : reduced_basis()) {
    for (auto k : reduced_basis()) {
      for (const auto& e : product(j, k)) {
        if (e.index == unit_) return std::nullopt;
      }
    }
  }
  std::vector<Scalar> eps(dim(), field_.zero());
  eps[unit_] = field_.one();
  return eps;
}

SparseVector GradedAlgebra::basis_vector(std::size_t i) const {
  if (i >= dim()) throw ValidationError("basis index out of range");
  return {{static_cast<std::uint32_t>(i), field_.one()}};
}

SparseVector multiply(const GradedAlgebra& a, const SparseVector& u, const SparseVector& v) {
  SparseVector out;
  for (const auto& x : u) {
    for (const auto& y : v) {
      const Scalar c = x.value * y.value;
      for (const auto& z : a.product(x.index, y.index)) out.push_back({z.index, c * z.value});
    }
  }
  canonicalize(out);
  return out;
}

std::vector<Scalar> multiply(const GradedAlgebra& a, std::span<const Scalar> u,
                             std::span<const Scalar> v) {
  if (u.size() != a.dim() || v.size() != a.dim()) {
    throw ValidationError("multiply: vector length differs from algebra dimension");
  }
  return to_dense(multiply(a, to_sparse(u), to_sparse(v)), a.dim(), a.field());
}

std::vector<Diagnostic> validate(const GradedAlgebra& a) {
  std::vector<Diagnostic> out;
  const std::size_t n = a.dim();
  const std::size_t unit = a.unit();

  std::size_t count = 0;
  for (std::size_t j = 0; j < n && count < kMaxDiagnosticsPerLaw; ++j) {
    const bool left_ok = a.product(unit, j).size() == 1 && a.product(unit, j)[0].index == j &&
                         a.product(unit, j)[0].value.is_one();
    const bool right_ok = a.product(j, unit).size() == 1 && a.product(j, unit)[0].index == j &&
                          a.product(j, unit)[0].value.is_one();
    if (!left_ok || !right_ok) {
      out.push_back({"unit", {j}, "unit law fails for " + a.label(j)});
      ++count;
    }
  }

  count = 0;
  for (std::size_t j = 0; j < n && count < kMaxDiagnosticsPerLaw; ++j) {
    for (std::size_t k = 0; k < n && count < kMaxDiagnosticsPerLaw; ++k) {
      const auto& jk = a.product(j, k);
      for (std::size_t l = 0; l < n && count < kMaxDiagnosticsPerLaw; ++l) {
        const auto& kl = a.product(k, l);
        SparseVector lhs;
        for (const auto& e : jk) axpy(lhs, e.value, a.product(e.index, l));
        SparseVector rhs;
        for (const auto& e : kl) axpy(rhs, e.value, a.product(j, e.index));
        axpy(lhs, a.field().from_int(-1), rhs);
        if (!lhs.empty()) {
          out.push_back({"associativity", {j, k, l},
                         "(" + join_labels(a, {j, k}) + ")," + a.label(l) +
                             " differs from " + a.label(j) + ",(" + join_labels(a, {k, l}) +
                             ")"});
          ++count;
        }
      }
    }
  }

  if (a.is_graded()) {
    if (a.degree(unit) != 0) {
      out.push_back({"grading", {unit}, "unit must have degree 0"});
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (i != unit && a.degree(i) == 0) {
        out.push_back({"connectedness", {i},
                       "degree-0 component must be spanned by the unit, but " + a.label(i) +
                           " has degree 0"});
      }
    }
    count = 0;
    for (std::size_t j = 0; j < n; ++j) {
      for (std::size_t k = 0; k < n; ++k) {
        for (const auto& e : a.product(j, k)) {
          if (a.degree(e.index) == a.degree(j) + a.degree(k)) continue;
          if (count++ < kMaxDiagnosticsPerLaw) {
            out.push_back({"homogeneity", {j, k, e.index},
                           a.label(j) + "*" + a.label(k) + " has a component along " +
                               a.label(e.index) + " of the wrong degree"});
          }
          if (e.index == unit && j != unit && k != unit) {
            out.push_back({"connectedness", {j, k},
                           a.label(j) + "*" + a.label(k) +
                               " has a unit component, so A-bar is not closed under products"});
          }
        }
      }
    }
  }
  return out;
}

GradedAlgebra regrade_even(const GradedAlgebra& a) {
  if (!a.is_graded()) throw ValidationError("regrade_even requires a graded algebra");
  std::vector<int> doubled = *a.degrees();
  for (int& d : doubled) d *= 2;
  GradedAlgebra out(a.field(), a.labels(), a.unit(), doubled, a.products());
  out.set_name(a.name());
  return out;
}

std::vector<std::size_t> indecomposables(const GradedAlgebra& a) {
  std::vector<SparseVector> span;
  for (auto j : a.reduced_basis()) {
    for (auto k : a.reduced_basis()) {
      if (!a.product(j, k).empty()) span.push_back(a.product(j, k));
    }
  }
  std::size_t current = rank_of(a.field(), a.dim(), span);
  std::vector<std::size_t> chosen;
  for (auto i : a.reduced_basis()) {
    span.push_back(a.basis_vector(i));
    const std::size_t r = rank_of(a.field(), a.dim(), span);
    if (r > current) {
      chosen.push_back(i);
      current = r;
    } else {
      span.pop_back();
    }
  }
  return chosen;
}

std::vector<DualCoalgebra::Coproduct> DualCoalgebra::reduced(std::size_t i) const {
  std::vector<Coproduct> out;
  for (const auto& t : comult.at(i)) {
    if (t.left != counit_index && t.right != counit_index) out.push_back(t);
  }
  return out;
}

DualCoalgebra dual_coalgebra(const GradedAlgebra& a) {
  if (!a.is_connected()) {
    throw ValidationError("dual_coalgebra requires a graded connected algebra");
  }
  if (!a.is_even()) {
    throw ValidationError("dual_coalgebra requires an even-graded algebra; regrade first");
  }
  DualCoalgebra c;
  c.field = a.field();
  c.counit_index = a.unit();
  c.degrees = *a.degrees();
  for (const auto& l : a.labels()) c.labels.push_back("b_" + l);
  c.comult.resize(a.dim());
  for (std::size_t j = 0; j < a.dim(); ++j) {
    for (std::size_t k = 0; k < a.dim(); ++k) {
      const Scalar sign = sign_scalar(a.field(), static_cast<long long>(a.degree(j)) * a.degree(k));
      for (const auto& e : a.product(j, k)) c.comult[e.index].push_back({j, k, sign * e.value});
    }
  }
  return c;
}

bool is_coassociative(const DualCoalgebra& c) {
  for (std::size_t i = 0; i < c.comult.size(); ++i) {
    std::map<std::tuple<std::size_t, std::size_t, std::size_t>, Scalar> diff;
    for (const auto& t : c.comult[i]) {
      for (const auto& s : c.comult[t.left]) diff[{s.left, s.right, t.right}] += t.coeff * s.coeff;
      for (const auto& s : c.comult[t.right]) diff[{t.left, s.left, s.right}] -= t.coeff * s.coeff;
    }
    for (const auto& [key, value] : diff) {
      if (!value.is_zero()) return false;
    }
  }
  return true;
}

std::vector<GradedAlgebra::Product> transpose_back(const DualCoalgebra& c) {
  const std::size_t n = c.comult.size();
  std::vector<SparseVector> table(n * n);
  for (std::size_t i = 0; i < n; ++i) {
    for (const auto& t : c.comult[i]) {
      const Scalar sign =
          sign_scalar(c.field, static_cast<long long>(c.degrees[t.left]) * c.degrees[t.right]);
      table[t.left * n + t.right].push_back({static_cast<std::uint32_t>(i), sign * t.coeff});
    }
  }
  std::vector<GradedAlgebra::Product> out;
  for (std::size_t j = 0; j < n; ++j) {
    for (std::size_t k = 0; k < n; ++k) {
      auto v = canonicalized(std::move(table[j * n + k]));
      if (!v.empty()) out.push_back({j, k, std::move(v)});
    }
  }
  return out;
}

}  // namespace hh
