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

#include "hh/homology_table.hpp"

#include <nlohmann/json.hpp>
#include <sstream>

#include "hh/error.hpp"

namespace hh {

using nlohmann::json;

std::size_t HomologyTable::total(int p) const {
  std::size_t sum = 0;
  for (const auto& c : cells) {
    if (c.p == p) sum += c.dim;
  }
  return sum;
}

std::vector<HomologyCell> HomologyTable::nonzero_cells() const {
  std::vector<HomologyCell> out;
  for (const auto& c : cells) {
    if (c.dim != 0) out.push_back(c);
  }
  return out;
}

namespace {

json degree_dims_json(const std::vector<DegreeDim>& dims) {
  json arr = json::array();
  for (const auto& d : dims) arr.push_back({{"n", d.n}, {"dim", d.dim}});
  return arr;
}

std::vector<DegreeDim> degree_dims_from(const json& arr) {
  std::vector<DegreeDim> out;
  for (const auto& d : arr) out.push_back({d.at("n").get<int>(), d.at("dim").get<std::size_t>()});
  return out;
}

}  // namespace

std::string to_json(const HomologyTable& t) {
  json j;
  j["algebra"] = t.algebra;
  j["field"] = t.field;
  j["p_max"] = t.p_max;
  json cells = json::array();
  for (const auto& c : t.cells) {
    json cell = {{"p", c.p}, {"dim", c.dim}};
    cell["q"] = c.q ? json(*c.q) : json(nullptr);
    cells.push_back(cell);
  }
  j["cells"] = cells;
  json totals = json::array();
  for (int p = 0; p <= t.p_max; ++p) totals.push_back({{"p", p}, {"dim", t.total(p)}});
  j["totals"] = totals;
  if (!t.negative.empty()) j["negative"] = degree_dims_json(t.negative);
  if (!t.q_side.empty()) j["q_homology"] = degree_dims_json(t.q_side);
  return j.dump(2) + "\n";
}

std::string to_csv(const HomologyTable& t) {
  std::ostringstream out;
  out << "section,p,q,n,dim\n";
  for (const auto& c : t.cells) {
    out << "cell," << c.p << ',' << (c.q ? std::to_string(*c.q) : "") << ",," << c.dim << '\n';
  }
  for (int p = 0; p <= t.p_max; ++p) out << "total," << p << ",,," << t.total(p) << '\n';
  for (const auto& d : t.negative) out << "negative,,," << d.n << ',' << d.dim << '\n';
  for (const auto& d : t.q_side) out << "q_homology,,," << d.n << ',' << d.dim << '\n';
  return out.str();
}

std::string to_text(const HomologyTable& t) {
  std::ostringstream out;
  out << "HH_*(" << (t.algebra.empty() ? "A" : t.algebra) << ") over " << t.field
      << ", p <= " << t.p_max << '\n';
  for (int p = 0; p <= t.p_max; ++p) {
    out << "  p=" << p << "  total " << t.total(p);
    bool first = true;
    for (const auto& c : t.cells) {
      if (c.p != p || c.dim == 0 || !c.q) continue;
      out << (first ? "  [" : ", ") << "q=" << *c.q << ": " << c.dim;
      first = false;
    }
    if (!first) out << ']';
    out << '\n';
  }
  if (!t.negative.empty()) {
    out << "dim HH_{-n}:";
    for (const auto& d : t.negative) out << ' ' << d.n << ':' << d.dim;
    out << '\n';
  }
  if (!t.q_side.empty()) {
    out << "dim H_n(Q):";
    for (const auto& d : t.q_side) out << ' ' << d.n << ':' << d.dim;
    out << '\n';
  }
  return out.str();
}

HomologyTable table_from_json(const std::string& text) {
  try {
    const json j = json::parse(text);
    HomologyTable t;
    t.algebra = j.value("algebra", "");
    t.field = j.at("field").get<std::string>();
    t.p_max = j.at("p_max").get<int>();
    for (const auto& c : j.at("cells")) {
      HomologyCell cell;
      cell.p = c.at("p").get<int>();
      if (c.contains("q") && !c["q"].is_null()) cell.q = c["q"].get<int>();
      cell.dim = c.at("dim").get<std::size_t>();
      t.cells.push_back(cell);
    }
    if (j.contains("negative")) t.negative = degree_dims_from(j["negative"]);
    if (j.contains("q_homology")) t.q_side = degree_dims_from(j["q_homology"]);
    return t;
  } catch (const json::exception& e) {
    throw ValidationError(std::string("malformed homology table: ") + e.what());
  }
}

}  // namespace hh
