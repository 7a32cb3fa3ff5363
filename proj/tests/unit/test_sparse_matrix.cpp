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

#include <gtest/gtest.h>

#include <random>

#include "hh/error.hpp"
#include "hh/sparse_matrix.hpp"
#include "oracles.hpp"

namespace {

using hh::FieldContext;
using hh::Scalar;
using hh::SparseMatrix;
using hh::SparseVector;

SparseMatrix random_matrix(const FieldContext& f, std::mt19937& rng, std::size_t rows,
                           std::size_t cols, double density) {
  std::uniform_real_distribution<double> coin(0.0, 1.0);
  std::uniform_int_distribution<int> value(-3, 3);
  std::vector<SparseVector> columns(cols);
  for (auto& c : columns) {
    for (std::size_t r = 0; r < rows; ++r) {
      if (coin(rng) < density) c.push_back({static_cast<std::uint32_t>(r), f.from_int(value(rng))});
    }
  }
  return SparseMatrix::from_columns(f, rows, std::move(columns));
}

oracle::DenseQ dense_rows(const SparseMatrix& m) {
  oracle::DenseQ rows(m.rows(), std::vector<mpq_class>(m.cols(), 0));
  for (std::size_t j = 0; j < m.cols(); ++j) {
    for (const auto& e : m.column(j)) rows[e.index][j] = oracle::as_rational(e.value);
  }
  return rows;
}

TEST(SparseMatrix, RankExamples) {
  const auto q = FieldContext::rationals();
  EXPECT_EQ(hh::rank(SparseMatrix(q, 0, 0)), 0u);
  EXPECT_EQ(hh::rank(SparseMatrix::identity(q, 3)), 3u);
  // b_2 of k[x]/(x^2): columns 1(x)x(x)x -> 2 x(x)x, x(x)x(x)x -> 0.
  const auto b2 = SparseMatrix::from_columns(q, 2, {{{1, q.from_int(2)}}, {}});
  EXPECT_EQ(hh::rank(b2), 1u);
}

TEST(SparseMatrix, KernelDimExamples) {
  const auto q = FieldContext::rationals();
  EXPECT_EQ(hh::kernel_dim(SparseMatrix(q, 2, 3)), 3u);
  EXPECT_EQ(hh::kernel_dim(SparseMatrix::identity(q, 3)), 0u);
  EXPECT_EQ(hh::kernel_dim(SparseMatrix(q, 2, 2)), 2u);
}

TEST(SparseMatrix, InImageExamples) {
  const auto q = FieldContext::rationals();
  const auto m = SparseMatrix::from_columns(q, 2, {{{0, q.from_int(2)}}});
  const std::vector<Scalar> zero{q.zero(), q.zero()};
  const std::vector<Scalar> e2{q.zero(), q.one()};
  const std::vector<Scalar> ones{q.one(), q.one()};
  EXPECT_TRUE(hh::in_image(m, zero));
  EXPECT_TRUE(hh::in_image(SparseMatrix::identity(q, 2), ones));
  EXPECT_FALSE(hh::in_image(m, e2));
  const std::vector<Scalar> short_v{q.one()};
  EXPECT_THROW(hh::in_image(m, short_v), hh::ValidationError);
}

TEST(SparseMatrix, CanonicalizeMergesAndDropsZeros) {
  const auto q = FieldContext::rationals();
  SparseVector v{{3, q.one()}, {1, q.from_int(2)}, {3, q.from_int(-1)}, {0, q.zero()}};
  hh::canonicalize(v);
  ASSERT_EQ(v.size(), 1u);
  EXPECT_EQ(v[0].index, 1u);
  EXPECT_EQ(v[0].value, q.from_int(2));
}

TEST(SparseMatrix, ProductAndTranspose) {
  const auto q = FieldContext::rationals();
  std::mt19937 rng(7);
  const auto a = random_matrix(q, rng, 4, 5, 0.5);
  const auto b = random_matrix(q, rng, 5, 3, 0.5);
  const auto ab = a * b;
  EXPECT_EQ((ab).transpose(), b.transpose() * a.transpose());
  EXPECT_EQ(a * SparseMatrix::identity(q, 5), a);
}

class RandomMatrices : public ::testing::TestWithParam<unsigned> {};

TEST_P(RandomMatrices, RankProperties) {
  std::mt19937 rng(GetParam());
  std::uniform_int_distribution<std::size_t> dim(0, 14);
  const auto q = FieldContext::rationals();
  const auto f = FieldContext::prime_field(32003);
  for (int trial = 0; trial < 20; ++trial) {
    const std::size_t rows = dim(rng);
    const std::size_t cols = dim(rng);
    const auto m = random_matrix(q, rng, rows, cols, 0.3);
    const std::size_t r = hh::rank(m);
    EXPECT_EQ(r, hh::rank(m.transpose()));
    EXPECT_EQ(hh::kernel_dim(m) + r, cols);
    EXPECT_EQ(r, oracle::dense_rank(dense_rows(m)));
    // Small integer entries: the rank mod 32003 agrees unless p divides a minor.
    std::vector<SparseVector> reduced;
    for (std::size_t j = 0; j < cols; ++j) {
      SparseVector c;
      for (const auto& e : m.column(j)) c.push_back({e.index, f.coerce(e.value)});
      reduced.push_back(std::move(c));
    }
    EXPECT_EQ(hh::rank(SparseMatrix::from_columns(f, rows, reduced)), r);
  }
}

TEST_P(RandomMatrices, KernelBasisSpansKernel) {
  std::mt19937 rng(GetParam() + 100);
  const auto q = FieldContext::rationals();
  for (int trial = 0; trial < 10; ++trial) {
    const auto m = random_matrix(q, rng, 6, 9, 0.35);
    const auto basis = hh::kernel_basis(m);
    EXPECT_EQ(basis.size(), hh::kernel_dim(m));
    for (const auto& v : basis) EXPECT_TRUE(m.apply(v).empty());
    EXPECT_EQ(hh::rank_of(q, m.cols(), basis), basis.size());
  }
}

TEST_P(RandomMatrices, InImageAgreesWithRankTest) {
  std::mt19937 rng(GetParam() + 200);
  std::uniform_int_distribution<int> value(-2, 2);
  const auto f = FieldContext::prime_field(32003);
  for (int trial = 0; trial < 20; ++trial) {
    const auto m = random_matrix(f, rng, 8, 5, 0.25);
    std::vector<Scalar> v(8, f.zero());
    for (auto& x : v) x = f.from_int(value(rng));
    auto cols = std::vector<SparseVector>();
    for (std::size_t j = 0; j < m.cols(); ++j) cols.push_back(m.column(j));
    cols.push_back(hh::to_sparse(v));
    const auto extended = SparseMatrix::from_columns(f, 8, cols);
    EXPECT_EQ(hh::in_image(m, v), hh::rank(extended) == hh::rank(m));
    // Anything built from the columns is in the image.
    SparseVector combo;
    for (std::size_t j = 0; j < m.cols(); ++j) hh::axpy(combo, f.from_int(value(rng)), m.column(j));
    EXPECT_TRUE(hh::in_image(m, combo));
  }
}

INSTANTIATE_TEST_SUITE_P(Seeds, RandomMatrices, ::testing::Values(1u, 2u, 3u, 4u));

TEST(SparseMatrix, RankModulo) {
  const auto q = FieldContext::rationals();
  const auto base = SparseMatrix::from_columns(q, 3, {{{0, q.one()}}});
  const auto extra = SparseMatrix::from_columns(
      q, 3, {{{0, q.from_int(5)}}, {{1, q.one()}}, {{0, q.one()}, {1, q.one()}}});
  EXPECT_EQ(hh::rank_modulo(base, extra), 1u);
}

TEST(SparseMatrix, HomologyDimGuardsAgainstNonComplexes) {
  EXPECT_EQ(hh::homology_dim(5, 2, 1), 2u);
  EXPECT_THROW(hh::homology_dim(3, 2, 2), hh::Error);
}

TEST(SparseMatrix, RationalEliminationKeepsExactness) {
  // Hilbert-type matrix: full rank over Q.
  const auto q = FieldContext::rationals();
  std::vector<SparseVector> cols(6);
  for (std::uint32_t j = 0; j < 6; ++j) {
    for (std::uint32_t i = 0; i < 6; ++i) {
      cols[j].push_back({i, Scalar(mpq_class(1, i + j + 1))});
    }
  }
  EXPECT_EQ(hh::rank(SparseMatrix::from_columns(q, 6, cols)), 6u);
}

}  // namespace
