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

#include "hh/witnesses.hpp"

#include <algorithm>
#include <memory>
#include <nlohmann/json.hpp>
#include <sstream>

#include "hh/bar.hpp"
#include "hh/cobar.hpp"
#include "hh/error.hpp"
#include "hh/parallel.hpp"

namespace hh {

using nlohmann::json;

std::string to_string(WitnessStatus s) {
  switch (s) {
    case WitnessStatus::kWitnessed: return "non-vanishing witnessed";
    case WitnessStatus::kInapplicable: return "inapplicable";
    case WitnessStatus::kHypothesisNotWitnessed: return "hypothesis not witnessed";
    case WitnessStatus::kFailed: return "failed";
  }
  return "unknown";
}

bool Verdict::passed() const {
  return std::all_of(checks.begin(), checks.end(), [](const auto& c) { return c.second; });
}

std::string to_json(const WitnessReport& r) {
  json j;
  j["theorem"] = r.theorem;
  j["algebra"] = r.algebra;
  j["field"] = r.field;
  j["n_max"] = r.n_max;
  if (r.cap > 0) j["cap"] = r.cap;
  j["status"] = to_string(r.status);
  j["notes"] = r.notes;
  json verdicts = json::array();
  for (const auto& v : r.verdicts) {
    json row;
    row["n"] = v.n;
    for (const auto& [name, value] : v.values) row[name] = value;
    json checks = json::object();
    for (const auto& [name, ok] : v.checks) checks[name] = ok;
    row["checks"] = checks;
    row["passed"] = v.passed();
    verdicts.push_back(row);
  }
  j["verdicts"] = verdicts;
  j["conclusion"] = r.conclusion;
  return j.dump(2) + "\n";
}

std::string to_text(const WitnessReport& r) {
  std::ostringstream out;
  out << "theorem " << r.theorem << " on " << (r.algebra.empty() ? "A" : r.algebra) << " over "
      << r.field << ", n <= " << r.n_max;
  if (r.cap > 0) out << ", cap " << r.cap;
  out << '\n';
  for (const auto& note : r.notes) out << "  note: " << note << '\n';
  for (const auto& v : r.verdicts) {
    out << "  n=" << v.n;
    for (const auto& [name, value] : v.values) out << ' ' << name << '=' << value;
    for (const auto& [name, ok] : v.checks) out << ' ' << name << ':' << (ok ? "ok" : "FAIL");
    out << '\n';
  }
  out << "status: " << to_string(r.status) << '\n';
  out << r.conclusion << '\n';
  return out.str();
}

namespace {

SparseMatrix columns_matrix(const FieldContext& field, std::size_t rows,
                            std::vector<SparseVector> cols) {
  return SparseMatrix::from_columns(field, rows, std::move(cols));
}

}  // namespace

WitnessReport retraction_report(const AlgebraMorphism& iota, const AlgebraMorphism& pi,
                                int n_max) {
  const GradedAlgebra& a = *iota.target;
  const GradedAlgebra& b = *iota.source;
  WitnessReport r;
  r.theorem = "I";
  r.algebra = a.name();
  r.field = a.field().name();
  r.n_max = n_max;
  r.notes.push_back("B = " + (b.name().empty() ? std::string("k[x]/(f)") : b.name()) +
                    ", dim A = " + std::to_string(a.dim()) + ", dim B = " +
                    std::to_string(b.dim()));
  r.notes.push_back("homology classes of B: kernel basis of b, ranked modulo the image of b");
  for (const auto& d : validate_morphism(iota)) r.notes.push_back("iota: " + d.message);
  for (const auto& d : validate_morphism(pi)) r.notes.push_back("pi: " + d.message);
  const bool morphisms_ok = validate_morphism(iota).empty() && validate_morphism(pi).empty();

  for (int n = 0; n <= n_max; ++n) {
    Verdict v;
    v.n = n;
    const SparseMatrix mi = induced_map(iota, n);
    const SparseMatrix mp = induced_map(pi, n);
    const SparseMatrix composite = mp * mi;
    v.checks.emplace_back("algebra_maps", morphisms_ok);
    v.checks.emplace_back("pi_iota_id_on_chains",
                          composite == SparseMatrix::identity(b.field(), mi.cols()));
    v.checks.emplace_back("commutes_with_b",
                          commutes_with_boundary(iota, n) && commutes_with_boundary(pi, n));

    const SparseMatrix bn = boundary_matrix(b, n, std::nullopt);
    const SparseMatrix bn1_b = boundary_matrix(b, n + 1, std::nullopt);
    const SparseMatrix bn1_a = boundary_matrix(a, n + 1, std::nullopt);
    const std::size_t dim_b = homology_dim(bn.cols(), rank(bn), rank(bn1_b));
    const SparseMatrix reps = columns_matrix(b.field(), bn.cols(), kernel_basis(bn));
    const std::size_t composite_rank = rank_modulo(bn1_b, composite * reps);
    const std::size_t iota_rank = rank_modulo(bn1_a, mi * reps);
    const std::size_t dim_a = hh_dim(a, n, std::nullopt);

    v.values.emplace_back("dim_HH_B", static_cast<long long>(dim_b));
    v.values.emplace_back("dim_HH_A", static_cast<long long>(dim_a));
    v.values.emplace_back("rank_pi_iota", static_cast<long long>(composite_rank));
    v.values.emplace_back("rank_iota", static_cast<long long>(iota_rank));
    v.checks.emplace_back("HH_B_nonzero", dim_b > 0);
    v.checks.emplace_back("composite_full_rank", composite_rank == dim_b);
    v.checks.emplace_back("iota_injective", iota_rank == dim_b);
    r.verdicts.push_back(std::move(v));
  }
  const bool ok = std::all_of(r.verdicts.begin(), r.verdicts.end(),
                              [](const Verdict& v) { return v.passed(); });
  r.status = ok ? WitnessStatus::kWitnessed : WitnessStatus::kFailed;
  if (ok) {
    r.conclusion = "non-vanishing witnessed: HH_n(pi) HH_n(iota) = id on HH_n(B), so dim HH_n(A) "
                   ">= dim HH_n(B) > 0 for every n <= " + std::to_string(n_max);
  } else {
    const auto bad = std::find_if(r.verdicts.begin(), r.verdicts.end(),
                                  [](const Verdict& v) { return !v.passed(); });
    r.conclusion = "not witnessed: a check failed at n = " + std::to_string(bad->n);
  }
  return r;
}

WitnessReport theorem1_report(const FreePresentation& pres, int n_max) {
  if (n_max < 0) throw ValidationError("n_max must be non-negative");
  const std::size_t idx = split_relation(pres);
  const UnivariatePolynomial f1 = as_univariate(pres.field, pres.relations[idx]);
  if (is_smooth_univariate(pres.field, f1)) {
    WitnessReport r;
    r.theorem = "I";
    r.algebra = pres.name;
    r.field = pres.field.name();
    r.n_max = n_max;
    r.status = WitnessStatus::kInapplicable;
    r.notes.push_back("gcd(f_1, f_1') is constant, so B = k[x_1]/(f_1) is smooth and its "
                      "higher Hochschild homology vanishes");
    r.conclusion = "inapplicable: B smooth";
    return r;
  }
  const Splitting s = splitting_morphisms(pres);
  WitnessReport r = retraction_report(s.iota, s.pi, n_max);
  if (!pres.name.empty()) r.algebra = pres.name;
  return r;
}

WitnessReport theorem1_quiver_report(const QuiverPresentation& qp, int n_max) {
  if (n_max < 0) throw ValidationError("n_max must be non-negative");
  const QuiverSplitting s = quiver_splitting(qp);
  WitnessReport r = retraction_report(s.iota, s.pi, n_max);
  if (!qp.name.empty()) r.algebra = qp.name;
  return r;
}

WitnessReport theorem2_report(const GradedAlgebra& a, int n_max,
                              std::optional<std::pair<std::size_t, std::size_t>> pair, int cap) {
  if (n_max < 1) throw ValidationError("n_max must be at least 1");
  const GradedAlgebra even = regrade_even(a);
  WitnessReport r;
  r.theorem = "II";
  r.algebra = a.name();
  r.field = a.field().name();
  r.n_max = n_max;
  r.cap = cap;
  if (!pair) pair = xy_zero_generators(even);
  if (!pair) {
    r.status = WitnessStatus::kHypothesisNotWitnessed;
    r.notes.push_back("no two indecomposable basis elements x, y with xy = yx = 0 that stay "
                      "out of every product");
    r.conclusion = "hypothesis not witnessed";
    return r;
  }
  const auto [i1, i2] = *pair;
  const CobarAlgebra omega = build_cobar(even);
  const auto g1 = omega.generator_of(i1);
  const auto g2 = omega.generator_of(i2);
  if (!g1 || !g2 || i1 == i2) {
    throw ValidationError("the pair must name two distinct non-unit basis elements");
  }
  r.notes.push_back("x = " + a.label(i1) + ", y = " + a.label(i2) + ", |v_x| = " +
                    std::to_string(omega.generator(*g1).degree) + ", |v_y| = " +
                    std::to_string(omega.generator(*g2).degree));
  std::vector<int> degrees;
  for (int n = 1; n <= n_max; ++n) {
    const QChain x = x_cycle(omega, n, *g1, *g2);
    Verdict v;
    v.n = n;
    v.values.emplace_back("degree", x.degree);
    const bool cycle = is_cycle(omega, x);
    v.checks.emplace_back("cycle", cycle);
    // A non-cycle is never reported as a nonzero class, so skip the costly test.
    v.checks.emplace_back("not_boundary", cycle && !is_boundary(omega, x, cap));
    degrees.push_back(x.degree);
    r.verdicts.push_back(std::move(v));
  }
  const bool ok = std::all_of(r.verdicts.begin(), r.verdicts.end(),
                              [](const Verdict& v) { return v.passed(); });
  const bool increasing = std::adjacent_find(degrees.begin(), degrees.end(),
                                             std::greater_equal<>()) == degrees.end();
  std::string list;
  for (std::size_t i = 0; i < degrees.size(); ++i) {
    list += (i ? ", " : "") + std::to_string(degrees[i]);
  }
  if (ok && increasing) {
    r.status = WitnessStatus::kWitnessed;
    r.conclusion = "non-vanishing witnessed: X_n is a nonzero class of H_d(Q) for d = " + list +
                   "; d strictly increases, so HH_{-d}(A) != 0 for each d and the total "
                   "Hochschild homology of A is not finite dimensional";
  } else {
    r.status = WitnessStatus::kFailed;
    const auto bad = std::find_if(r.verdicts.begin(), r.verdicts.end(),
                                  [](const Verdict& v) { return !v.passed(); });
    r.conclusion = bad == r.verdicts.end()
                       ? "not witnessed: degrees do not increase"
                       : "not witnessed: X_" + std::to_string(bad->n) + " failed";
  }
  return r;
}

std::vector<ScanRow> han_family_scan(const std::vector<ScanEntry>& family, int n_max,
                                     unsigned jobs) {
  if (n_max < 0) throw ValidationError("n_max must be non-negative");
  return parallel_map(jobs, family.size(), [&](std::size_t i) {
    ScanRow row;
    row.name = family[i].name;
    try {
      const GradedAlgebra a = family[i].build();
      const HomologyTable t = hh_table(a, n_max);
      for (int n = 0; n <= n_max; ++n) {
        row.dims.push_back(t.total(n));
        if (row.dims.back() != 0) ++row.nonzero;
      }
    } catch (const Error& e) {
      row.dims.clear();
      row.nonzero = 0;
      row.error = e.what();
    }
    return row;
  });
}

std::string scan_to_json(const std::vector<ScanRow>& rows, int n_max) {
  json j;
  j["n_max"] = n_max;
  json arr = json::array();
  for (const auto& r : rows) {
    json row = {{"name", r.name}};
    if (r.error.empty()) {
      row["dims"] = r.dims;
      row["nonzero"] = r.nonzero;
    } else {
      row["error"] = r.error;
    }
    arr.push_back(row);
  }
  j["rows"] = arr;
  return j.dump(2) + "\n";
}

std::string scan_to_text(const std::vector<ScanRow>& rows, int n_max) {
  std::ostringstream out;
  out << "dim HH_n for n <= " << n_max << '\n';
  for (const auto& r : rows) {
    out << "  " << r.name << ':';
    if (!r.error.empty()) {
      out << " error: " << r.error << '\n';
      continue;
    }
    for (auto d : r.dims) out << ' ' << d;
    out << "  (" << r.nonzero << " nonzero)\n";
  }
  return out.str();
}

}  // namespace hh
