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

#pragma once

#include <cstddef>
#include <functional>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hh/algebra.hpp"
#include "hh/presentations.hpp"
#include "hh/qcomplex.hpp"

namespace hh {

enum class WitnessStatus { kWitnessed, kInapplicable, kHypothesisNotWitnessed, kFailed };

std::string to_string(WitnessStatus s);

/// Checks made for one n. `values` holds the dimensions behind them.
struct Verdict {
  int n = 0;
  std::vector<std::pair<std::string, bool>> checks;
  std::vector<std::pair<std::string, long long>> values;

  bool passed() const;
};

struct WitnessReport {
  std::string theorem;  // "I" or "II"
  std::string algebra;
  std::string field;
  int n_max = 0;
  int cap = 0;
  WitnessStatus status = WitnessStatus::kFailed;
  std::vector<std::string> notes;
  std::vector<Verdict> verdicts;
  std::string conclusion;
};

std::string to_json(const WitnessReport& r);
std::string to_text(const WitnessReport& r);

/// Retraction witness for A = k<x_1..x_n>/(f_1..f_p) with f_1 in k[x_1]:
/// builds B = k[x_1]/(f_1), iota, pi and checks for each n <= n_max that
/// pi o iota = id on chains, both maps commute with b, dim HH_n(B) > 0, and
/// HH_n(pi) HH_n(iota) has rank dim HH_n(B). Inapplicable when B is smooth.
/// Throws HypothesisError when the presentation does not split.
WitnessReport theorem1_report(const FreePresentation& pres, int n_max);

/// The same checks for the loop-at-a-vertex splitting of a quiver algebra.
WitnessReport theorem1_quiver_report(const QuiverPresentation& qp, int n_max);

/// The checks shared by both: A, B, iota: B -> A, pi: A -> B.
WitnessReport retraction_report(const AlgebraMorphism& iota, const AlgebraMorphism& pi,
                                int n_max);

/// Cycle witness: with a pair of basis elements (i1, i2) of A (found by
/// xy_zero_generators when absent), checks that X_1..X_{n_max} in Q_* of
/// the even regrading are cycles and not boundaries.
WitnessReport theorem2_report(const GradedAlgebra& a, int n_max,
                              std::optional<std::pair<std::size_t, std::size_t>> pair = {},
                              int cap = kDefaultWordCap);

struct ScanEntry {
  std::string name;
  std::function<GradedAlgebra()> build;
};

struct ScanRow {
  std::string name;
  std::vector<std::size_t> dims;  // dim HH_n, n = 0..n_max
  std::size_t nonzero = 0;
  std::string error;              // set when the entry could not be built
};

std::vector<ScanRow> han_family_scan(const std::vector<ScanEntry>& family, int n_max,
                                     unsigned jobs = 1);
std::string scan_to_json(const std::vector<ScanRow>& rows, int n_max);
std::string scan_to_text(const std::vector<ScanRow>& rows, int n_max);

}  // namespace hh
