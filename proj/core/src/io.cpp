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

#include "hh/io.hpp"

#include <map>
#include <nlohmann/json.hpp>

#include "hh/error.hpp"

namespace hh {

using nlohmann::json;

namespace {

json parse_json(const std::string& text) {
  try {
    return json::parse(text);
  } catch (const json::parse_error& e) {
    throw ValidationError(std::string("JSON parse error: ") + e.what());
  }
}

FieldContext field_of(const json& j, const std::optional<FieldContext>& field_override) {
  if (field_override) return *field_override;
  if (!j.contains("field")) return FieldContext::rationals();
  const json& f = j["field"];
  if (f.is_string()) {
    const auto s = f.get<std::string>();
    if (s == "Q" || s == "q") return FieldContext::rationals();
    return FieldContext::parse(s);
  }
  if (f.is_object() && f.contains("Fp")) {
    return FieldContext::prime_field(f["Fp"].get<std::uint32_t>());
  }
  throw ValidationError("field must be \"Q\" or {\"Fp\": p}");
}

Scalar scalar_of(const FieldContext& field, const json& j) {
  if (j.is_number_integer()) return field.from_int(j.get<std::int64_t>());
  if (j.is_string()) return field.parse_scalar(j.get<std::string>());
  throw ValidationError("scalar must be an integer or a string \"a/b\"");
}

std::size_t index_of(const json& j, const std::vector<std::string>& labels, const char* what) {
  if (j.is_number_integer()) {
    const auto i = j.get<long long>();
    if (i < 0 || static_cast<std::size_t>(i) >= labels.size()) {
      throw ValidationError(std::string(what) + " index out of range: " + std::to_string(i));
    }
    return static_cast<std::size_t>(i);
  }
  if (j.is_string()) {
    const auto s = j.get<std::string>();
    for (std::size_t i = 0; i < labels.size(); ++i) {
      if (labels[i] == s) return i;
    }
    throw ValidationError(std::string("unknown ") + what + " \"" + s + "\"");
  }
  throw ValidationError(std::string(what) + " must be an index or a name");
}

GradedAlgebra builtin_algebra(const json& j, const FieldContext& field) {
  const auto kind = j.at("builtin").get<std::string>();
  GradedAlgebra a;
  if (kind == "quantum_ci") {
    a = quantum_ci(field, scalar_of(field, j.at("q")), j.at("a").get<int>(), j.at("b").get<int>());
  } else if (kind == "truncated") {
    UnivariatePolynomial f;
    for (const auto& c : j.at("coefficients")) f.push_back(scalar_of(field, c));
    a = truncated_univariate(field, f);
  } else {
    throw ValidationError("unknown builtin \"" + kind + "\"");
  }
  if (j.contains("name")) a.set_name(j["name"].get<std::string>());
  return a;
}

GradedAlgebra algebra_from(const json& j, const FieldContext& field) {
  if (j.contains("builtin")) return builtin_algebra(j, field);
  const auto labels = j.at("basis").get<std::vector<std::string>>();
  if (labels.empty()) throw ValidationError("basis must not be empty");
  const std::size_t unit = j.contains("unit") ? index_of(j["unit"], labels, "basis element") : 0;
  std::optional<std::vector<int>> degrees;
  if (j.contains("degrees") && !j["degrees"].is_null()) {
    degrees = j["degrees"].get<std::vector<int>>();
  }
  std::map<std::pair<std::size_t, std::size_t>, SparseVector> table;
  for (const auto& p : j.value("products", json::array())) {
    if (!p.is_array() || p.size() != 4) {
      throw ValidationError("each product must be [j, k, i, scalar]");
    }
    const auto left = index_of(p[0], labels, "basis element");
    const auto right = index_of(p[1], labels, "basis element");
    const auto target = index_of(p[2], labels, "basis element");
    table[{left, right}].push_back({static_cast<std::uint32_t>(target), scalar_of(field, p[3])});
  }
  std::vector<GradedAlgebra::Product> products;
  for (auto& [key, value] : table) {
    products.push_back({key.first, key.second, canonicalized(std::move(value))});
  }
  GradedAlgebra a(field, labels, unit, degrees, std::move(products));
  if (j.contains("name")) a.set_name(j["name"].get<std::string>());
  return a;
}

FreePresentation presentation_from(const json& j, const FieldContext& field) {
  FreePresentation p;
  p.field = field;
  std::vector<std::string> names;
  for (const auto& g : j.at("generators")) {
    PresentationGenerator gen;
    if (g.is_string()) {
      gen.name = g.get<std::string>();
    } else {
      gen.name = g.at("name").get<std::string>();
      gen.weight = g.value("weight", 1);
    }
    names.push_back(gen.name);
    p.generators.push_back(gen);
  }
  const bool single_letters =
      std::all_of(names.begin(), names.end(), [](const auto& n) { return n.size() == 1; });
  auto word_of = [&](const json& w) {
    Word out;
    if (w.is_string()) {
      if (!single_letters) {
        throw ValidationError("string words need one-letter generator names; use a list");
      }
      for (char ch : w.get<std::string>()) {
        out.push_back(static_cast<std::uint32_t>(index_of(json(std::string(1, ch)), names,
                                                          "generator")));
      }
    } else {
      for (const auto& letter : w) {
        out.push_back(static_cast<std::uint32_t>(index_of(letter, names, "generator")));
      }
    }
    return out;
  };
  for (const auto& rel : j.at("relations")) {
    NcPolynomial f;
    for (const auto& term : rel) {
      f.push_back({word_of(term.at("word")), scalar_of(field, term.value("coeff", json(1)))});
    }
    p.relations.push_back(std::move(f));
  }
  p.degree_cap = j.value("cap", FreePresentation::kDefaultDegreeCap);
  p.name = j.value("name", "");
  return p;
}

QuiverPresentation quiver_from(const json& j, const FieldContext& field) {
  QuiverPresentation q;
  q.field = field;
  q.vertices = j.at("vertices").get<std::vector<std::string>>();
  std::vector<std::string> arrow_names;
  for (const auto& a : j.at("arrows")) {
    Arrow arrow{a.at("name").get<std::string>(), index_of(a.at("src"), q.vertices, "vertex"),
                index_of(a.at("dst"), q.vertices, "vertex")};
    arrow_names.push_back(arrow.name);
    q.arrows.push_back(arrow);
  }
  for (const auto& rel : j.value("relations", json::array())) {
    std::vector<std::size_t> path;
    for (const auto& a : rel) path.push_back(index_of(a, arrow_names, "arrow"));
    q.relations.push_back(std::move(path));
  }
  q.loop = index_of(j.at("loop"), arrow_names, "arrow");
  q.vertex = index_of(j.at("vertex"), q.vertices, "vertex");
  q.power = j.value("power", 2);
  q.path_cap = j.value("cap", QuiverPresentation::kDefaultPathCap);
  q.name = j.value("name", "");
  return q;
}

InputKind kind_of(const json& j) {
  if (!j.is_object()) throw ValidationError("input must be a JSON object");
  if (j.contains("family")) return InputKind::kFamily;
  if (j.contains("arrows")) return InputKind::kQuiver;
  if (j.contains("generators")) return InputKind::kPresentation;
  if (j.contains("basis") || j.contains("builtin")) return InputKind::kAlgebra;
  throw ValidationError("cannot tell what the input describes (no basis, generators, arrows "
                        "or family)");
}

// nlohmann reports type and key errors as json::exception; surface them as
// validation failures.
template <typename Fn>
auto guarded(Fn&& fn) {
  try {
    return fn();
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed input: ") + e.what());
  }
}

}  // namespace

InputKind detect_input_kind(const std::string& text) { return kind_of(parse_json(text)); }

GradedAlgebra algebra_from_json(const std::string& text,
                                const std::optional<FieldContext>& field_override) {
  const json j = parse_json(text);
  return guarded([&] { return algebra_from(j, field_of(j, field_override)); });
}

FreePresentation presentation_from_json(const std::string& text,
                                        const std::optional<FieldContext>& field_override) {
  const json j = parse_json(text);
  return guarded([&] { return presentation_from(j, field_of(j, field_override)); });
}

QuiverPresentation quiver_from_json(const std::string& text,
                                    const std::optional<FieldContext>& field_override) {
  const json j = parse_json(text);
  return guarded([&] { return quiver_from(j, field_of(j, field_override)); });
}

std::vector<ScanEntry> family_from_json(const std::string& text,
                                        const std::optional<FieldContext>& field_override) {
  const json j = parse_json(text);
  return guarded([&] {
    const FieldContext field = field_of(j, field_override);
    std::vector<ScanEntry> out;
    std::size_t count = 0;
    for (const auto& entry : j.at("family")) {
      ++count;
      const std::string name = entry.value("name", "entry " + std::to_string(count));
      const FieldContext f = entry.contains("field") ? field_of(entry, field_override) : field;
      // Entries are built lazily so one bad entry does not stop the scan.
      switch (kind_of(entry)) {
        case InputKind::kAlgebra:
          out.push_back({name, [entry, f] { return guarded([&] { return algebra_from(entry, f); }); }});
          break;
        case InputKind::kPresentation:
          out.push_back({name, [entry, f] {
                           return realize(guarded([&] { return presentation_from(entry, f); }));
                         }});
          break;
        case InputKind::kQuiver:
          out.push_back({name, [entry, f] {
                           return path_algebra(guarded([&] { return quiver_from(entry, f); }));
                         }});
          break;
        case InputKind::kFamily:
          throw ValidationError("families do not nest");
      }
    }
    return out;
  });
}

GradedAlgebra load_algebra(const std::string& text,
                           const std::optional<FieldContext>& field_override) {
  const json j = parse_json(text);
  return guarded([&]() -> GradedAlgebra {
    const FieldContext field = field_of(j, field_override);
    switch (kind_of(j)) {
      case InputKind::kAlgebra: return algebra_from(j, field);
      case InputKind::kPresentation: {
        GradedAlgebra a = realize(presentation_from(j, field));
        if (j.contains("name")) a.set_name(j["name"].get<std::string>());
        return a;
      }
      case InputKind::kQuiver: {
        GradedAlgebra a = path_algebra(quiver_from(j, field));
        if (j.contains("name")) a.set_name(j["name"].get<std::string>());
        return a;
      }
      case InputKind::kFamily: break;
    }
    throw ValidationError("expected a single algebra, got a family");
  });
}

std::string algebra_to_json(const GradedAlgebra& a) {
  json j;
  if (!a.name().empty()) j["name"] = a.name();
  if (a.field().is_rationals()) {
    j["field"] = "Q";
  } else {
    j["field"] = {{"Fp", a.field().characteristic()}};
  }
  j["basis"] = a.labels();
  j["unit"] = a.unit();
  if (a.is_graded()) j["degrees"] = *a.degrees();
  json products = json::array();
  for (const auto& p : a.products()) {
    // Unit-law products are implied on input.
    if (p.left == a.unit() && p.value == a.basis_vector(p.right)) continue;
    if (p.right == a.unit() && p.value == a.basis_vector(p.left)) continue;
    for (const auto& e : p.value) {
      products.push_back({p.left, p.right, e.index, e.value.to_string()});
    }
  }
  j["products"] = products;
  return j.dump(2) + "\n";
}

}  // namespace hh
