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

#include <fstream>
#include <sstream>

#include "hh/bar.hpp"
#include "hh/error.hpp"
#include "hh/io.hpp"

namespace {

using hh::FieldContext;
using hh::InputKind;

const FieldContext kQ = FieldContext::rationals();

std::string slurp(const std::string& name) {
  std::ifstream in(std::string(HH_DATA_DIR) + "/" + name);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

TEST(Io, DetectsKinds) {
  EXPECT_EQ(hh::detect_input_kind(slurp("kx2.json")), InputKind::kAlgebra);
  EXPECT_EQ(hh::detect_input_kind(slurp("aq222.json")), InputKind::kAlgebra);
  EXPECT_EQ(hh::detect_input_kind(slurp("example5.json")), InputKind::kPresentation);
  EXPECT_EQ(hh::detect_input_kind(slurp("quiver2.json")), InputKind::kQuiver);
  EXPECT_EQ(hh::detect_input_kind(slurp("family.json")), InputKind::kFamily);
  EXPECT_THROW(hh::detect_input_kind("{}"), hh::ValidationError);
  EXPECT_THROW(hh::detect_input_kind("[1, 2]"), hh::ValidationError);
  EXPECT_THROW(hh::detect_input_kind("{\"basis\": "), hh::ValidationError);
}

TEST(Io, ReadsStructureConstants) {
  const auto a = hh::algebra_from_json(slurp("kx3.json"));
  EXPECT_EQ(a.dim(), 3u);
  EXPECT_EQ(a.name(), "k[x]/(x^3)");
  EXPECT_TRUE(a.field().is_rationals());
  const auto x = *a.index_of("x");
  const auto x2 = *a.index_of("x^2");
  ASSERT_EQ(a.product(x, x).size(), 1u);
  EXPECT_EQ(a.product(x, x)[0].index, x2);
  EXPECT_TRUE(a.product(x, x2).empty());
  EXPECT_EQ(a.product(a.unit(), x2)[0].index, x2);
}

TEST(Io, ProductsAddUpAndAcceptFractions) {
  const std::string text = R"({"field": "Q", "basis": ["1", "x"], "unit": 0,
    "products": [[1, 1, 0, "1/2"], ["x", "x", "1", "1/3"]]})";
  const auto a = hh::algebra_from_json(text);
  EXPECT_FALSE(a.is_graded());
  ASSERT_EQ(a.product(1, 1).size(), 1u);
  EXPECT_EQ(a.product(1, 1)[0].value, kQ.parse_scalar("5/6"));
}

TEST(Io, FieldOverride) {
  const auto a = hh::algebra_from_json(slurp("kx2.json"), FieldContext::prime_field(7));
  EXPECT_EQ(a.field(), FieldContext::prime_field(7));
  const auto b = hh::algebra_from_json(slurp("aq222.json"));
  EXPECT_EQ(b.field(), FieldContext::prime_field(32003));
  EXPECT_EQ(b.dim(), 4u);
}

TEST(Io, RejectsMalformedAlgebras) {
  const char* bad[] = {
      R"({"field": "R", "basis": ["1"], "unit": 0, "products": []})",
      R"({"field": {"Fp": 6}, "basis": ["1"], "unit": 0, "products": []})",
      R"({"field": "Q", "basis": [], "unit": 0, "products": []})",
      R"({"field": "Q", "basis": ["1", "x"], "unit": 0, "products": [[1, 1, 5, 1]]})",
      R"({"field": "Q", "basis": ["1", "x"], "unit": 0, "products": [[1, 1, "y", 1]]})",
      R"({"field": "Q", "basis": ["1", "x"], "unit": 0, "products": [[1, 1, 1]]})",
      R"({"field": "Q", "basis": ["1", "x"], "unit": 0, "products": [[1, 1, 1, 1.5]]})",
      R"({"field": "Q", "basis": ["1", "x"], "unit": 0, "degrees": [0], "products": []})",
      R"({"field": "Q", "builtin": "weyl"})",
      R"({"field": "Q", "basis": ["1", "x"], "unit": "e", "products": []})",
  };
  for (const char* text : bad) {
    EXPECT_THROW(hh::algebra_from_json(text), hh::ValidationError) << text;
  }
}

TEST(Io, ReadsPresentations) {
  const auto p = hh::presentation_from_json(slurp("example5.json"));
  ASSERT_EQ(p.generators.size(), 3u);
  EXPECT_EQ(p.generators[2].name, "z");
  ASSERT_EQ(p.relations.size(), 6u);
  EXPECT_EQ(p.relations[4][1].word, (hh::Word{2, 0}));
  EXPECT_EQ(p.relations[4][1].coeff, p.field.from_int(-2));
  EXPECT_EQ(p.relations[0][0].coeff, p.field.one());

  const std::string weighted = R"({"field": "Q",
    "generators": [{"name": "u", "weight": 2}, {"name": "vv", "weight": 3}],
    "relations": [[{"word": ["u", "u"]}], [{"word": ["vv", "vv"]}],
                  [{"word": ["u", "vv"]}], [{"word": ["vv", "u"]}]], "cap": 9})";
  const auto w = hh::presentation_from_json(weighted);
  EXPECT_EQ(w.generators[1].weight, 3);
  EXPECT_EQ(w.degree_cap, 9);
  EXPECT_EQ(hh::load_algebra(weighted).dim(), 3u);

  EXPECT_THROW(hh::presentation_from_json(R"({"field": "Q", "generators": ["xy"],
    "relations": [[{"word": "xyxy"}]]})"), hh::ValidationError);
  EXPECT_THROW(hh::presentation_from_json(R"({"field": "Q", "generators": ["x"],
    "relations": [[{"word": "y"}]]})"), hh::ValidationError);
}

TEST(Io, ReadsQuivers) {
  const auto q = hh::quiver_from_json(slurp("quiver2.json"));
  ASSERT_EQ(q.arrows.size(), 3u);
  EXPECT_EQ(q.arrows[1].source, 0u);
  EXPECT_EQ(q.arrows[1].target, 1u);
  EXPECT_EQ(q.relations[1], (std::vector<std::size_t>{1, 2}));
  EXPECT_EQ(q.loop, 0u);
  EXPECT_EQ(q.power, 2);
  EXPECT_EQ(hh::path_algebra(q).dim(), 8u);
  EXPECT_THROW(hh::quiver_from_json(R"({"field": "Q", "vertices": ["e"],
    "arrows": [{"name": "x", "src": "e", "dst": "f"}], "relations": [], "loop": "x",
    "vertex": "e", "power": 2})"), hh::ValidationError);
}

TEST(Io, ReadsFamilies) {
  const auto f = hh::family_from_json(slurp("family.json"));
  ASSERT_EQ(f.size(), 5u);
  EXPECT_EQ(f[1].name, "k[x]/(x^3)");
  EXPECT_EQ(f[1].build().dim(), 3u);
  EXPECT_EQ(f[4].build().dim(), 4u);
  EXPECT_THROW(hh::load_algebra(slurp("family.json")), hh::ValidationError);
}

TEST(Io, LoadsPresentationsAsAlgebras) {
  const auto a = hh::load_algebra(slurp("example5.json"));
  EXPECT_EQ(a.dim(), 7u);
  EXPECT_EQ(a.field(), FieldContext::prime_field(32003));
}

TEST(Io, AlgebraRoundTrip) {
  for (const char* name : {"kx3.json", "aq222.json", "example5.json", "aq222_presentation.json"}) {
    const auto a = hh::load_algebra(slurp(name));
    const auto b = hh::algebra_from_json(hh::algebra_to_json(a));
    EXPECT_EQ(a.labels(), b.labels()) << name;
    EXPECT_EQ(a.degrees(), b.degrees()) << name;
    EXPECT_EQ(a.field(), b.field()) << name;
    for (std::size_t j = 0; j < a.dim(); ++j) {
      for (std::size_t k = 0; k < a.dim(); ++k) EXPECT_EQ(a.product(j, k), b.product(j, k));
    }
  }
}

TEST(Io, CorruptedFixtureFailsValidation) {
  const auto a = hh::algebra_from_json(slurp("kx2_corrupted.json"));
  EXPECT_FALSE(hh::validate(a).empty());
}

}  // namespace
