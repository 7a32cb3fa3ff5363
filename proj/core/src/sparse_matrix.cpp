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

#include "hh/sparse_matrix.hpp"

#include <algorithm>
#include <numeric>
#include <unordered_map>
#include <utility>

#include "hh/error.hpp"

namespace hh {

void canonicalize(SparseVector& v) {
  std::stable_sort(v.begin(), v.end(),
                   [](const Entry& a, const Entry& b) { return a.index < b.index; });
  std::size_t out = 0;
  for (std::size_t i = 0; i < v.size();) {
    Entry acc = std::move(v[i]);
    std::size_t j = i + 1;
    for (; j < v.size() && v[j].index == acc.index; ++j) acc.value += v[j].value;
    if (!acc.value.is_zero()) v[out++] = std::move(acc);
    i = j;
  }
  v.resize(out);
}

SparseVector canonicalized(SparseVector v) {
  canonicalize(v);
  return v;
}

void axpy(SparseVector& v, const Scalar& c, const SparseVector& w) {
  if (c.is_zero() || w.empty()) return;
  SparseVector out;
  out.reserve(v.size() + w.size());
  auto a = v.begin();
  auto b = w.begin();
  while (a != v.end() || b != w.end()) {
    if (b == w.end() || (a != v.end() && a->index < b->index)) {
      out.push_back(std::move(*a++));
    } else if (a == v.end() || b->index < a->index) {
      out.push_back({b->index, c * b->value});
      ++b;
    } else {
      Scalar s = a->value + c * b->value;
      if (!s.is_zero()) out.push_back({a->index, std::move(s)});
      ++a;
      ++b;
    }
  }
  v = std::move(out);
}

SparseVector to_sparse(std::span<const Scalar> dense) {
  SparseVector v;
  for (std::size_t i = 0; i < dense.size(); ++i) {
    if (!dense[i].is_zero()) v.push_back({static_cast<std::uint32_t>(i), dense[i]});
  }
  return v;
}

std::vector<Scalar> to_dense(const SparseVector& v, std::size_t size, const FieldContext& field) {
  std::vector<Scalar> dense(size, field.zero());
  for (const auto& e : v) dense.at(e.index) = e.value;
  return dense;
}

SparseMatrix::SparseMatrix(FieldContext field, std::size_t rows, std::size_t cols)
    : field_(field), rows_(rows), columns_(cols) {}

SparseMatrix SparseMatrix::from_columns(FieldContext field, std::size_t rows,
                                        std::vector<SparseVector> columns) {
  SparseMatrix m(field, rows, 0);
  m.columns_ = std::move(columns);
  for (auto& c : m.columns_) {
    canonicalize(c);
    if (!c.empty() && c.back().index >= rows) {
      throw ValidationError("sparse matrix entry out of range");
    }
  }
  return m;
}

SparseMatrix SparseMatrix::identity(FieldContext field, std::size_t n) {
  SparseMatrix m(field, n, n);
  for (std::size_t i = 0; i < n; ++i) {
    m.columns_[i].push_back({static_cast<std::uint32_t>(i), field.one()});
  }
  return m;
}

std::size_t SparseMatrix::nonzeros() const {
  std::size_t n = 0;
  for (const auto& c : columns_) n += c.size();
  return n;
}

void SparseMatrix::set_column(std::size_t j, SparseVector v) {
  canonicalize(v);
  if (!v.empty() && v.back().index >= rows_) {
    throw ValidationError("sparse matrix entry out of range");
  }
  columns_.at(j) = std::move(v);
}

Scalar SparseMatrix::at(std::size_t row, std::size_t col) const {
  const auto& c = columns_.at(col);
  const auto it = std::lower_bound(c.begin(), c.end(), row, [](const Entry& e, std::size_t r) {
    return e.index < r;
  });
  if (it != c.end() && it->index == row) return it->value;
  return field_.zero();
}

SparseMatrix SparseMatrix::transpose() const {
  SparseMatrix t(field_, cols(), rows_);
  for (std::size_t j = 0; j < cols(); ++j) {
    for (const auto& e : columns_[j]) {
      t.columns_[e.index].push_back({static_cast<std::uint32_t>(j), e.value});
    }
  }
  return t;
}

SparseVector SparseMatrix::apply(const SparseVector& v) const {
  SparseVector out;
  for (const auto& e : v) {
    for (const auto& f : columns_.at(e.index)) out.push_back({f.index, e.value * f.value});
  }
  canonicalize(out);
  return out;
}

SparseMatrix operator*(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.cols() != b.rows()) throw ValidationError("matrix product dimension mismatch");
  SparseMatrix c(a.field_, a.rows(), b.cols());
  for (std::size_t j = 0; j < b.cols(); ++j) c.columns_[j] = a.apply(b.columns_[j]);
  return c;
}

bool operator==(const SparseMatrix& a, const SparseMatrix& b) {
  if (a.rows() != b.rows() || a.cols() != b.cols()) return false;
  for (std::size_t j = 0; j < a.cols(); ++j) {
    const auto& x = a.columns_[j];
    const auto& y = b.columns_[j];
    if (x.size() != y.size()) return false;
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i].index != y[i].index || !(x[i].value == y[i].value)) return false;
    }
  }
  return true;
}

namespace {

// Elimination kernels. Each works on sparse vectors of its own element type
// sorted by row; a vector's pivot is its first (lowest-row) entry.

struct PrimeKernel {
  using Value = std::uint32_t;
  using Vec = std::vector<std::pair<std::uint32_t, Value>>;

  std::uint64_t p;

  Vec convert(const FieldContext& field, const SparseVector& v) const {
    Vec out;
    out.reserve(v.size());
    for (const auto& e : v) {
      const Scalar s = field.coerce(e.value);
      if (!s.is_zero()) out.emplace_back(e.index, s.residue_value());
    }
    return out;
  }

  std::uint64_t inverse(std::uint64_t a) const {
    std::uint64_t result = 1, base = a % p, e = p - 2;
    while (e) {
      if (e & 1) result = result * base % p;
      base = base * base % p;
      e >>= 1;
    }
    return result;
  }

  void normalize(Vec& v) const {
    const std::uint64_t inv = inverse(v.front().second);
    for (auto& [row, value] : v) value = static_cast<Value>(value * inv % p);
  }

  // v -= v.lead * pivot, where pivot has leading coefficient 1.
  void eliminate(Vec& v, const Vec& pivot, Vec& scratch) const {
    const std::uint64_t c = p - v.front().second;
    scratch.clear();
    auto a = v.begin();
    auto b = pivot.begin();
    while (a != v.end() || b != pivot.end()) {
      if (b == pivot.end() || (a != v.end() && a->first < b->first)) {
        scratch.push_back(*a++);
      } else if (a == v.end() || b->first < a->first) {
        scratch.emplace_back(b->first, static_cast<Value>(c * b->second % p));
        ++b;
      } else {
        const auto s = static_cast<Value>((a->second + c * b->second) % p);
        if (s != 0) scratch.emplace_back(a->first, s);
        ++a;
        ++b;
      }
    }
    v.swap(scratch);
  }
};

// Fraction-free elimination over Z: columns are scaled to integer vectors,
// and each update v <- lead(P) v - lead(v) P is followed by removal of the
// content of v, which keeps entries from growing.
struct IntegerKernel {
  using Value = mpz_class;
  using Vec = std::vector<std::pair<std::uint32_t, Value>>;

  Vec convert(const FieldContext&, const SparseVector& v) const {
    mpz_class denominator = 1;
    for (const auto& e : v) mpz_lcm(denominator.get_mpz_t(), denominator.get_mpz_t(),
                                    e.value.rational().get_den_mpz_t());
    Vec out;
    out.reserve(v.size());
    for (const auto& e : v) {
      if (e.value.is_zero()) continue;
      const mpq_class& q = e.value.rational();
      out.emplace_back(e.index, mpz_class(q.get_num() * (denominator / q.get_den())));
    }
    return out;
  }

  void normalize(Vec& v) const {
    mpz_class g = 0;
    for (const auto& [row, value] : v) {
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), value.get_mpz_t());
      if (g == 1) break;
    }
    if (sgn(v.front().second) < 0) g = -g;
    if (g != 1) {
      for (auto& [row, value] : v) mpz_divexact(value.get_mpz_t(), value.get_mpz_t(),
                                                g.get_mpz_t());
    }
  }

  void eliminate(Vec& v, const Vec& pivot, Vec& scratch) const {
    const mpz_class a_scale = pivot.front().second;
    const mpz_class b_scale = v.front().second;
    scratch.clear();
    auto a = v.begin();
    auto b = pivot.begin();
    while (a != v.end() || b != pivot.end()) {
      if (b == pivot.end() || (a != v.end() && a->first < b->first)) {
        scratch.emplace_back(a->first, a_scale * a->second);
        ++a;
      } else if (a == v.end() || b->first < a->first) {
        scratch.emplace_back(b->first, -b_scale * b->second);
        ++b;
      } else {
        mpz_class s = a_scale * a->second - b_scale * b->second;
        if (sgn(s) != 0) scratch.emplace_back(a->first, std::move(s));
        ++a;
        ++b;
      }
    }
    v.swap(scratch);
    if (!v.empty()) normalize(v);
  }
};

// Row-echelon form built one vector at a time.
template <class Kernel>
class Echelon {
 public:
  using Vec = typename Kernel::Vec;

  Echelon(Kernel kernel, FieldContext field) : kernel_(std::move(kernel)), field_(field) {}

  // Inserts v; returns true iff v was independent of the vectors so far.
  bool insert(const SparseVector& v) {
    Vec w = reduce(kernel_.convert(field_, v));
    if (w.empty()) return false;
    kernel_.normalize(w);
    const auto lead = w.front().first;
    pivots_.emplace(lead, std::move(w));
    return true;
  }

  bool contains(const SparseVector& v) { return reduce(kernel_.convert(field_, v)).empty(); }

 private:
  Vec reduce(Vec v) {
    while (!v.empty()) {
      const auto it = pivots_.find(v.front().first);
      if (it == pivots_.end()) break;
      kernel_.eliminate(v, it->second, scratch_);
    }
    return v;
  }

  Kernel kernel_;
  FieldContext field_;
  std::unordered_map<std::uint32_t, Vec> pivots_;
  Vec scratch_;
};

template <class Fn>
decltype(auto) with_echelon(const FieldContext& field, Fn&& fn) {
  if (field.is_rationals()) {
    Echelon<IntegerKernel> e(IntegerKernel{}, field);
    return fn(e);
  }
  Echelon<PrimeKernel> e(PrimeKernel{field.characteristic()}, field);
  return fn(e);
}

class DisjointSets {
 public:
  explicit DisjointSets(std::size_t n) : parent_(n) { std::iota(parent_.begin(), parent_.end(), 0); }
  std::size_t find(std::size_t x) {
    while (parent_[x] != x) {
      parent_[x] = parent_[parent_[x]];
      x = parent_[x];
    }
    return x;
  }
  void unite(std::size_t a, std::size_t b) {
    a = find(a);
    b = find(b);
    if (a != b) parent_[std::max(a, b)] = std::min(a, b);
  }

 private:
  std::vector<std::size_t> parent_;
};

}  // namespace

std::size_t rank_of(const FieldContext& field, std::size_t, std::span<const SparseVector> vectors) {
  return with_echelon(field, [&](auto& echelon) {
    std::size_t r = 0;
    for (const auto& v : vectors) r += echelon.insert(v) ? 1 : 0;
    return r;
  });
}

std::size_t rank(const SparseMatrix& m) {
  std::vector<SparseVector> cols;
  cols.reserve(m.cols());
  for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
  return rank_of(m.field(), m.rows(), cols);
}

std::size_t kernel_dim(const SparseMatrix& m) { return m.cols() - rank(m); }

bool in_image(const SparseMatrix& m, std::span<const Scalar> v) {
  if (v.size() != m.rows()) {
    throw ValidationError("in_image: vector has length " + std::to_string(v.size()) +
                          " but the matrix has " + std::to_string(m.rows()) + " rows");
  }
  return in_image(m, to_sparse(v));
}

bool in_image(const SparseMatrix& m, const SparseVector& v) {
  if (!v.empty() && v.back().index >= m.rows()) {
    throw ValidationError("in_image: vector index out of range");
  }
  if (v.empty()) return true;
  // The bipartite row/column graph splits into connected blocks; only the
  // blocks meeting the support of v can contribute to it.
  DisjointSets blocks(m.rows());
  for (std::size_t j = 0; j < m.cols(); ++j) {
    const auto& c = m.column(j);
    for (std::size_t i = 1; i < c.size(); ++i) blocks.unite(c[0].index, c[i].index);
  }
  std::vector<char> wanted(m.rows(), 0);
  for (const auto& e : v) wanted[blocks.find(e.index)] = 1;
  return with_echelon(m.field(), [&](auto& echelon) {
    for (std::size_t j = 0; j < m.cols(); ++j) {
      const auto& c = m.column(j);
      if (!c.empty() && wanted[blocks.find(c[0].index)]) echelon.insert(c);
    }
    return echelon.contains(v);
  });
}

std::size_t rank_modulo(const SparseMatrix& base, const SparseMatrix& extra) {
  if (base.rows() != extra.rows()) throw ValidationError("rank_modulo: row count mismatch");
  return with_echelon(base.field(), [&](auto& echelon) {
    for (std::size_t j = 0; j < base.cols(); ++j) echelon.insert(base.column(j));
    std::size_t r = 0;
    for (std::size_t j = 0; j < extra.cols(); ++j) r += echelon.insert(extra.column(j)) ? 1 : 0;
    return r;
  });
}

std::size_t homology_dim(std::size_t size, std::size_t rank_out, std::size_t rank_in) {
  if (rank_out + rank_in > size) {
    throw Error("differential does not square to zero: ranks " + std::to_string(rank_out) +
                " + " + std::to_string(rank_in) + " exceed the slice size " +
                std::to_string(size));
  }
  return size - rank_out - rank_in;
}

std::vector<SparseVector> kernel_basis(const SparseMatrix& m) {
  const auto& field = m.field();
  const std::size_t rows = m.rows();
  const std::size_t cols = m.cols();
  std::vector<std::vector<Scalar>> a(rows, std::vector<Scalar>(cols, field.zero()));
  for (std::size_t j = 0; j < cols; ++j) {
    for (const auto& e : m.column(j)) a[e.index][j] = e.value;
  }
  // Reduced row echelon form; pivots scanned in row-major order.
  std::vector<std::size_t> pivot_cols;
  std::size_t r = 0;
  for (std::size_t c = 0; c < cols && r < rows; ++c) {
    std::size_t pr = r;
    while (pr < rows && a[pr][c].is_zero()) ++pr;
    if (pr == rows) continue;
    std::swap(a[r], a[pr]);
    const Scalar inv = a[r][c].inverse();
    for (auto& x : a[r]) x *= inv;
    for (std::size_t i = 0; i < rows; ++i) {
      if (i == r || a[i][c].is_zero()) continue;
      const Scalar f = a[i][c];
      for (std::size_t k = c; k < cols; ++k) a[i][k] -= f * a[r][k];
    }
    pivot_cols.push_back(c);
    ++r;
  }
  std::vector<char> is_pivot(cols, 0);
  for (auto c : pivot_cols) is_pivot[c] = 1;
  std::vector<SparseVector> basis;
  for (std::size_t free = 0; free < cols; ++free) {
    if (is_pivot[free]) continue;
    SparseVector v;
    v.push_back({static_cast<std::uint32_t>(free), field.one()});
    for (std::size_t i = 0; i < pivot_cols.size(); ++i) {
      if (!a[i][free].is_zero()) v.push_back({static_cast<std::uint32_t>(pivot_cols[i]), -a[i][free]});
    }
    canonicalize(v);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace hh
