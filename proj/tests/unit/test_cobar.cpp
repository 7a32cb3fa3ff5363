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

#include "hh/cobar.hpp"
#include "hh/error.hpp"
#include "hh/presentations.hpp"
#include "oracles.hpp"

namespace {

using hh::CobarAlgebra;
using hh::FieldContext;
using hh::GradedAlgebra;
using hh::Word;

const FieldContext kQ = FieldContext::rationals();
const FieldContext kF = FieldContext::prime_field(32003);

GradedAlgebra kx(int n) {
  hh::UnivariatePolynomial p(n + 1, kQ.zero());
  p[n] = kQ.one();
  return hh::truncated_univariate(kQ, p);
}

CobarAlgebra omega(const GradedAlgebra& a) { return hh::build_cobar(hh::regrade_even(a)); }

TEST(Cobar, TruncatedCubeDifferential) {
  const auto c = omega(kx(3));
  ASSERT_EQ(c.size(), 2u);
  EXPECT_EQ(c.generator(0).degree, 1);
  EXPECT_EQ(c.generator(1).degree, 3);
  EXPECT_EQ(c.generator(1).label, "v_x^2");
  EXPECT_TRUE(c.dv(0).empty());
  ASSERT_EQ(c.dv(1).size(), 1u);
  EXPECT_EQ(c.dv(1)[0].left, 0u);
  EXPECT_EQ(c.dv(1)[0].right, 0u);
  EXPECT_TRUE(c.dv(1)[0].coeff.is_one());
}

TEST(Cobar, DualNumbersHaveZeroDifferential) {
  const auto c = omega(kx(2));
  ASSERT_EQ(c.size(), 1u);
  EXPECT_TRUE(c.dv(0).empty());
  for (int n = 1; n <= 6; ++n) EXPECT_TRUE(hh::cobar_differential_matrix(c, n).is_zero());
}

TEST(Cobar, IndecomposablesAreCycles) {
  for (const auto& a : {hh::regrade_even(hh::quantum_ci(kQ, kQ.from_int(2), 2, 3)),
                        hh::regrade_even(hh::realize(
                            hh::xy_zero_example_presentation(kF, kF.from_int(2))))}) {
    const auto c = hh::build_cobar(a);
    for (auto i : hh::indecomposables(a)) EXPECT_TRUE(c.dv(*c.generator_of(i)).empty());
  }
}

TEST(Cobar, GeneratorsHaveOddDegree) {
  for (const auto& a : {kx(3), hh::quantum_ci(kQ, kQ.from_int(2), 2, 3)}) {
    for (const auto& g : omega(a).generators()) EXPECT_EQ(g.degree % 2, 1);
  }
}

TEST(Cobar, Preconditions) {
  EXPECT_THROW(hh::build_cobar(kx(2)), hh::ValidationError);  // odd degrees
  const GradedAlgebra ungraded(kQ, {"1", "x"}, 0, std::nullopt, {});
  EXPECT_THROW(hh::build_cobar(ungraded), hh::ValidationError);
}

TEST(Cobar, NonAssociativeProductFailsSquareCheck) {
  // x*x = y, x*y = z, y*x = 0 in degrees 2, 4, 6: (xx)x = 0 but x(xx) = z.
  const GradedAlgebra bad(kQ, {"1", "x", "y", "z"}, 0, std::vector<int>{0, 2, 4, 6},
                          {{1, 1, {{2, kQ.one()}}}, {1, 2, {{3, kQ.one()}}}});
  EXPECT_THROW(hh::build_cobar(bad), hh::Error);
  EXPECT_NO_THROW(hh::build_cobar(bad, false));
}

TEST(Cobar, WordBasisExamples) {
  const auto c2 = omega(kx(2));
  EXPECT_EQ(hh::word_basis(c2, 0), (std::vector<Word>{{}}));
  EXPECT_EQ(hh::word_basis(c2, 3), (std::vector<Word>{{0, 0, 0}}));
  const auto c3 = omega(kx(3));
  EXPECT_EQ(hh::word_basis(c3, 4), (std::vector<Word>{{0, 0, 0, 0}, {0, 1}, {1, 0}}));
}

TEST(Cobar, WordCountsMatchGeneratingFunction) {
  for (const auto& a : {kx(3), hh::quantum_ci(kQ, kQ.from_int(2), 2, 3),
                        hh::realize(hh::xy_zero_example_presentation(kF, kF.from_int(2)))}) {
    const auto c = omega(a);
    std::vector<int> degrees;
    for (const auto& g : c.generators()) degrees.push_back(g.degree);
    const auto series = oracle::word_count_series(degrees, 9);
    for (int n = 0; n <= 9; ++n) EXPECT_EQ(hh::word_basis(c, n).size(), series[n]) << n;
  }
}

TEST(Cobar, DifferentialExamplesOnTruncatedCube) {
  const auto c = omega(kx(3));
  const auto d3 = hh::cobar_differential_matrix(c, 3);  // basis {v1v1v1, v2} -> {v1v1}
  const auto words3 = hh::word_basis(c, 3);
  ASSERT_EQ(words3, (std::vector<Word>{{0, 0, 0}, {1}}));
  EXPECT_TRUE(d3.column(0).empty());
  EXPECT_EQ(d3.at(0, 1), kQ.one());
  const auto d4 = hh::cobar_differential_matrix(c, 4);  // {v1^4, v1v2, v2v1} -> {v1^3}
  EXPECT_EQ(d4.at(0, 1), kQ.from_int(-1));
  EXPECT_EQ(d4.at(0, 2), kQ.one());
  EXPECT_TRUE(d4.column(0).empty());
}

TEST(Cobar, DifferentialSquaresToZero) {
  for (const auto& a : {kx(3), hh::quantum_ci(kQ, kQ.from_int(2), 2, 2),
                        hh::quantum_ci(kF, kF.from_int(2), 2, 3),
                        hh::realize(hh::xy_zero_example_presentation(kF, kF.from_int(2)))}) {
    const auto c = omega(a);
    for (int n = 2; n <= 8; ++n) {
      EXPECT_TRUE((hh::cobar_differential_matrix(c, n - 1) * hh::cobar_differential_matrix(c, n))
                      .is_zero())
          << a.name() << " n=" << n;
    }
  }
}

}  // namespace
