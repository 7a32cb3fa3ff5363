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

#include "oracles.hpp"

#include <functional>
#include <stdexcept>

namespace oracle {

std::size_t dense_rank(DenseQ rows) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const mpq_class f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < cols; ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return rank;
}

namespace {

std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  std::int64_t result = 1;
  std::int64_t e = p - 2;
  a %= p;
  while (e > 0) {
    if (e & 1) result = result * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return result;
}

}  // namespace

std::size_t dense_rank_mod(std::vector<std::vector<std::int64_t>> rows, std::int64_t p) {
  std::size_t rank = 0;
  if (rows.empty()) return 0;
  const std::size_t cols = rows[0].size();
  for (auto& row : rows) {
    for (auto& x : row) x = ((x % p) + p) % p;
  }
  for (std::size_t c = 0; c < cols && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    const std::int64_t inv = inv_mod(rows[rank][c], p);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      const std::int64_t f = rows[r][c] * inv % p;
      for (std::size_t k = c; k < cols; ++k) {
        rows[r][k] = ((rows[r][k] - f * rows[rank][k]) % p + p) % p;
      }
    }
    ++rank;
  }
  return rank;
}

mpq_class as_rational(const hh::Scalar& s) {
  if (!s.is_rational()) throw std::logic_error("oracle expected a rational scalar");
  return s.rational();
}

std::int64_t as_residue(const hh::Scalar& s, std::int64_t p) {
  if (!s.is_rational()) return s.residue_value();
  const mpq_class& r = s.rational();
  const mpz_class num = r.get_num() % p;
  const mpz_class den = r.get_den() % p;
  const std::int64_t n = (num.get_si() + p) % p;
  return n * inv_mod(den.get_si(), p) % p;
}

namespace {

// Matrix of b_p: A^{(x)(p+1)} -> A^{(x)p} as dense rows (row = target index),
// restricted to basis tuples of internal degree q when q >= 0.
template <typename T, typename Conv>
std::vector<std::vector<T>> hochschild_matrix(const hh::GradedAlgebra& a, int p, int q,
                                              Conv conv, std::size_t& cols_out,
                                              std::size_t& rows_out) {
  const std::size_t d = a.dim();
  auto tuples = [&](int len) {
    std::vector<std::vector<std::size_t>> out;
    std::vector<std::size_t> t(len, 0);
    std::function<void(int)> rec = [&](int pos) {
      if (pos == len) {
        if (q >= 0) {
          int deg = 0;
          for (auto i : t) deg += a.degree(i);
          if (deg != q) return;
        }
        out.push_back(t);
        return;
      }
      for (std::size_t i = 0; i < d; ++i) {
        t[pos] = i;
        rec(pos + 1);
      }
    };
    rec(0);
    return out;
  };
  const auto src = tuples(p + 1);
  const auto dst = p == 0 ? std::vector<std::vector<std::size_t>>{} : tuples(p);
  cols_out = src.size();
  rows_out = dst.size();
  std::vector<std::vector<T>> m(dst.size(), std::vector<T>(src.size(), T(0)));
  if (p == 0) return m;
  auto row_of = [&](const std::vector<std::size_t>& t) -> std::size_t {
    for (std::size_t r = 0; r < dst.size(); ++r) {
      if (dst[r] == t) return r;
    }
    throw std::logic_error("oracle: tuple outside its degree");
  };
  for (std::size_t c = 0; c < src.size(); ++c) {
    const auto& w = src[c];
    for (int i = 0; i <= p; ++i) {
      // i < p: merge positions i, i+1 with sign (-1)^i; i == p: a_p a_0 in front.
      const bool last = i == p;
      const std::size_t l = last ? w[p] : w[i];
      const std::size_t r = last ? w[0] : w[i + 1];
      const T sign = (i % 2 == 0) ? T(1) : T(-1);
      for (const auto& e : a.product(l, r)) {
        std::vector<std::size_t> t;
        if (last) {
          t.push_back(e.index);
          t.insert(t.end(), w.begin() + 1, w.begin() + p);
        } else {
          t.insert(t.end(), w.begin(), w.begin() + i);
          t.push_back(e.index);
          t.insert(t.end(), w.begin() + i + 2, w.end());
        }
        m[row_of(t)][c] += sign * conv(e.value);
      }
    }
  }
  return m;
}

std::size_t hh_generic(const hh::GradedAlgebra& a, int p, int q) {
  std::size_t cols = 0, rows = 0, cols1 = 0, rows1 = 0;
  if (a.field().is_rationals()) {
    auto conv = [](const hh::Scalar& s) { return as_rational(s); };
    const auto bp = hochschild_matrix<mpq_class>(a, p, q, conv, cols, rows);
    const auto bp1 = hochschild_matrix<mpq_class>(a, p + 1, q, conv, cols1, rows1);
    return cols - dense_rank(bp) - dense_rank(bp1);
  }
  const std::int64_t prime = a.field().characteristic();
  auto conv = [prime](const hh::Scalar& s) { return as_residue(s, prime); };
  const auto bp = hochschild_matrix<std::int64_t>(a, p, q, conv, cols, rows);
  const auto bp1 = hochschild_matrix<std::int64_t>(a, p + 1, q, conv, cols1, rows1);
  return cols - dense_rank_mod(bp, prime) - dense_rank_mod(bp1, prime);
}

}  // namespace

std::size_t hochschild_dim(const hh::GradedAlgebra& a, int p) { return hh_generic(a, p, -1); }

std::size_t hochschild_dim(const hh::GradedAlgebra& a, int p, int q) {
  return hh_generic(a, p, q);
}

std::vector<std::size_t> quotient_dims(int generators, const std::vector<Relation>& relations,
                                       int max_degree, std::int64_t p) {
  std::vector<std::size_t> dims;
  for (int d = 0; d <= max_degree; ++d) {
    // All words of length d, indexed in base `generators`.
    std::size_t count = 1;
    for (int i = 0; i < d; ++i) count *= static_cast<std::size_t>(generators);
    auto index = [&](const std::vector<int>& w) {
      std::size_t idx = 0;
      for (int letter : w) idx = idx * generators + letter;
      return idx;
    };
    auto word_at = [&](std::size_t idx, int len) {
      std::vector<int> w(len);
      for (int i = len - 1; i >= 0; --i) {
        w[i] = static_cast<int>(idx % generators);
        idx /= generators;
      }
      return w;
    };
    DenseQ rows;
    for (const auto& f : relations) {
      const int fd = static_cast<int>(f.front().word.size());
      if (fd > d) continue;
      for (int left = 0; left <= d - fd; ++left) {
        const int right = d - fd - left;
        std::size_t lcount = 1, rcount = 1;
        for (int i = 0; i < left; ++i) lcount *= generators;
        for (int i = 0; i < right; ++i) rcount *= generators;
        for (std::size_t u = 0; u < lcount; ++u) {
          for (std::size_t v = 0; v < rcount; ++v) {
            std::vector<mpq_class> row(count, 0);
            for (const auto& m : f) {
              std::vector<int> w = word_at(u, left);
              w.insert(w.end(), m.word.begin(), m.word.end());
              const auto tail = word_at(v, right);
              w.insert(w.end(), tail.begin(), tail.end());
              row[index(w)] += m.coeff;
            }
            rows.push_back(std::move(row));
          }
        }
      }
    }
    std::size_t r = 0;
    if (p > 0) {
      std::vector<std::vector<std::int64_t>> mod(rows.size(), std::vector<std::int64_t>(count));
      for (std::size_t i = 0; i < rows.size(); ++i) {
        for (std::size_t j = 0; j < count; ++j) {
          mod[i][j] = as_residue(hh::Scalar(rows[i][j]), p);
        }
      }
      r = dense_rank_mod(std::move(mod), p);
    } else {
      r = dense_rank(std::move(rows));
    }
    dims.push_back(count - r);
  }
  return dims;
}

std::vector<std::size_t> word_count_series(const std::vector<int>& degrees, int n_max) {
  // Coefficients of the inverse power series, computed by long division.
  std::vector<long long> denom(n_max + 1, 0);
  denom[0] = 1;
  for (int d : degrees) {
    if (d <= n_max) denom[d] -= 1;
  }
  std::vector<long long> inv(n_max + 1, 0);
  inv[0] = 1;
  for (int n = 1; n <= n_max; ++n) {
    long long s = 0;
    for (int k = 1; k <= n; ++k) s += denom[k] * inv[n - k];
    inv[n] = -s;
  }
  return {inv.begin(), inv.end()};
}

}  // namespace oracle
