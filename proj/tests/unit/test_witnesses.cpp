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

#include <nlohmann/json.hpp>

#include "hh/bar.hpp"
#include "hh/error.hpp"
#include "hh/presentations.hpp"
#include "hh/witnesses.hpp"
#include "oracles.hpp"

namespace {

using hh::FieldContext;
using hh::GradedAlgebra;
using hh::WitnessStatus;

const FieldContext kQ = FieldContext::rationals();
const FieldContext kF = FieldContext::prime_field(32003);

long long value(const hh::Verdict& v, const std::string& key) {
  for (const auto& [k, x] : v.values) {
    if (k == key) return x;
  }
  ADD_FAILURE() << "missing value " << key;
  return -1;
}

bool check(const hh::Verdict& v, const std::string& key) {
  for (const auto& [k, x] : v.checks) {
    if (k == key) return x;
  }
  ADD_FAILURE() << "missing check " << key;
  return false;
}

hh::QuiverPresentation two_vertex_quiver() {
  hh::QuiverPresentation qp;
  qp.field = kQ;
  qp.vertices = {"e1", "e2"};
  qp.arrows = {{"x", 0, 0}, {"a", 0, 1}, {"b", 1, 0}};
  qp.relations = {{0, 0}, {1, 2}, {2, 1}};
  qp.loop = 0;
  qp.vertex = 0;
  qp.power = 2;
  return qp;
}

TEST(Witnesses, StatusNames) {
  EXPECT_EQ(hh::to_string(WitnessStatus::kWitnessed), "non-vanishing witnessed");
  EXPECT_EQ(hh::to_string(WitnessStatus::kInapplicable), "inapplicable");
  EXPECT_EQ(hh::to_string(WitnessStatus::kHypothesisNotWitnessed), "hypothesis not witnessed");
  EXPECT_EQ(hh::to_string(WitnessStatus::kFailed), "failed");
}

TEST(Witnesses, RetractionOnQuantumComplete) {
  const auto pres = hh::quantum_ci_presentation(kQ, kQ.from_int(2), 2, 2);
  const auto r = hh::theorem1_report(pres, 4);
  EXPECT_EQ(r.theorem, "I");
  EXPECT_EQ(r.status, WitnessStatus::kWitnessed) << hh::to_text(r);
  ASSERT_EQ(r.verdicts.size(), 5u);
  const auto a = hh::realize(pres);
  for (const auto& v : r.verdicts) {
    EXPECT_TRUE(v.passed());
    EXPECT_EQ(value(v, "dim_HH_B"), v.n == 0 ? 2 : 1);
    EXPECT_EQ(value(v, "rank_pi_iota"), value(v, "dim_HH_B"));
    EXPECT_GE(value(v, "dim_HH_A"), value(v, "dim_HH_B"));
    if (v.n <= 2) {
      EXPECT_EQ(value(v, "dim_HH_A"), static_cast<long long>(oracle::hochschild_dim(a, v.n)));
    }
  }
}

TEST(Witnesses, SmoothFactorIsInapplicable) {
  hh::FreePresentation p;
  p.field = kQ;
  p.generators = {{"x", 1}, {"y", 1}};
  p.relations = {{{{0, 0}, kQ.one()}, {{0}, kQ.from_int(-1)}},
                 {{{1, 1}, kQ.one()}},
                 {{{0, 1}, kQ.one()}},
                 {{{1, 0}, kQ.one()}}};
  const auto r = hh::theorem1_report(p, 3);
  EXPECT_EQ(r.status, WitnessStatus::kInapplicable);
  EXPECT_EQ(r.conclusion, "inapplicable: B smooth");
  EXPECT_TRUE(r.verdicts.empty());
}

TEST(Witnesses, NonSplittingPresentationThrows) {
  hh::FreePresentation p;
  p.field = kQ;
  p.generators = {{"x", 1}, {"y", 1}};
  p.relations = {{{{0, 1}, kQ.one()}, {{1, 0}, kQ.one()}}, {{{0, 0}, kQ.one()}, {{1, 1}, kQ.one()}}};
  EXPECT_THROW(hh::theorem1_report(p, 2), hh::HypothesisError);
}

TEST(Witnesses, QuiverRetraction) {
  const auto r = hh::theorem1_quiver_report(two_vertex_quiver(), 2);
  EXPECT_EQ(r.status, WitnessStatus::kWitnessed) << hh::to_text(r);
  ASSERT_EQ(r.verdicts.size(), 3u);
  const long long hh_b[] = {2, 1, 1};
  const long long hh_a[] = {3, 2, 2};
  for (const auto& v : r.verdicts) {
    EXPECT_EQ(value(v, "dim_HH_B"), hh_b[v.n]);
    EXPECT_EQ(value(v, "dim_HH_A"), hh_a[v.n]);
    EXPECT_TRUE(check(v, "commutes_with_b"));
  }
  const auto a = hh::path_algebra(two_vertex_quiver());
  EXPECT_EQ(static_cast<long long>(oracle::hochschild_dim(a, 1)), hh_a[1]);
}

TEST(Witnesses, BrokenRetractionFails) {
  // pi = 0 on x breaks pi o iota = id.
  const auto s = hh::splitting_morphisms(hh::quantum_ci_presentation(kQ, kQ.from_int(2), 2, 2));
  auto pi = s.pi;
  for (auto& img : pi.images) {
    if (!img.empty() && img[0].index != s.b->unit()) img.clear();
  }
  const auto r = hh::retraction_report(s.iota, pi, 1);
  EXPECT_EQ(r.status, WitnessStatus::kFailed);
  EXPECT_FALSE(check(r.verdicts[0], "algebra_maps") && check(r.verdicts[0], "pi_iota_id_on_chains"));
}

TEST(Witnesses, CycleWitnessOnExample) {
  const auto a = hh::realize(hh::xy_zero_example_presentation(kF, kF.from_int(2)));
  const auto r = hh::theorem2_report(a, 3);
  EXPECT_EQ(r.theorem, "II");
  EXPECT_EQ(r.status, WitnessStatus::kWitnessed) << hh::to_text(r);
  ASSERT_EQ(r.verdicts.size(), 3u);
  for (const auto& v : r.verdicts) {
    EXPECT_EQ(value(v, "degree"), 2 * v.n + 1);
    EXPECT_TRUE(check(v, "cycle"));
    EXPECT_TRUE(check(v, "not_boundary"));
  }
}

TEST(Witnesses, CycleWitnessWithoutPair) {
  const auto a = hh::quantum_ci(kF, kF.from_int(2), 2, 2);
  const auto r = hh::theorem2_report(a, 2);
  EXPECT_EQ(r.status, WitnessStatus::kHypothesisNotWitnessed);
  EXPECT_TRUE(r.verdicts.empty());
}

TEST(Witnesses, CycleWitnessWithWrongPairFails) {
  const auto a = hh::quantum_ci(kF, kF.from_int(2), 2, 2);
  const auto r = hh::theorem2_report(a, 1, std::pair<std::size_t, std::size_t>{1, 2});
  EXPECT_EQ(r.status, WitnessStatus::kFailed);
  EXPECT_TRUE(check(r.verdicts[0], "cycle"));
  EXPECT_FALSE(check(r.verdicts[0], "not_boundary"));
  EXPECT_THROW(hh::theorem2_report(a, 1, std::pair<std::size_t, std::size_t>{0, 1}),
               hh::ValidationError);
  EXPECT_THROW(hh::theorem2_report(a, 0), hh::ValidationError);
}

TEST(Witnesses, ReportJson) {
  const auto r = hh::theorem1_report(hh::quantum_ci_presentation(kQ, kQ.from_int(3), 2, 2), 1);
  const auto j = nlohmann::json::parse(hh::to_json(r));
  EXPECT_EQ(j["theorem"], "I");
  EXPECT_EQ(j["status"], "non-vanishing witnessed");
  EXPECT_EQ(j["verdicts"].size(), 2u);
}

TEST(Witnesses, FamilyScan) {
  std::vector<hh::ScanEntry> family;
  for (int n : {2, 3}) {
    family.push_back({"kx" + std::to_string(n), [n] {
                        hh::UnivariatePolynomial p(n + 1, kQ.zero());
                        p[n] = kQ.one();
                        return hh::truncated_univariate(kQ, p);
                      }});
  }
  family.push_back({"aq", [] { return hh::quantum_ci(kQ, kQ.from_int(2), 2, 2); }});
  family.push_back({"broken", []() -> GradedAlgebra { throw hh::ValidationError("bad"); }});
  const auto rows = hh::han_family_scan(family, 4, 2);
  ASSERT_EQ(rows.size(), 4u);
  EXPECT_EQ(rows[0].dims, (std::vector<std::size_t>{2, 1, 1, 1, 1}));
  EXPECT_EQ(rows[1].dims, (std::vector<std::size_t>{3, 2, 2, 2, 2}));
  EXPECT_EQ(rows[2].dims, (std::vector<std::size_t>{3, 2, 2, 2, 2}));
  EXPECT_EQ(rows[2].nonzero, 5u);
  EXPECT_EQ(rows[3].error, "bad");
  EXPECT_TRUE(rows[3].dims.empty());
  EXPECT_EQ(hh::scan_to_json(rows, 4), hh::scan_to_json(hh::han_family_scan(family, 4, 1), 4));
  EXPECT_TRUE(hh::han_family_scan({}, 3).empty());
  EXPECT_NE(hh::scan_to_text(rows, 4).find("error: bad"), std::string::npos);
}

}  // namespace
