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
#include <optional>
#include <string>
#include <vector>

namespace hh {

struct HomologyCell {
  int p = 0;
  std::optional<int> q;  // absent for ungraded computations
  std::size_t dim = 0;
};

struct DegreeDim {
  int n = 0;
  std::size_t dim = 0;
};

/// Dimensions of HH_p(A)^q, assembled HH_{-n}(A) and H_n(Q_*), plus the
/// metadata needed to reproduce them.
struct HomologyTable {
  std::string algebra;
  std::string field;
  int p_max = 0;
  std::vector<HomologyCell> cells;   // sorted by (p, q)
  std::vector<DegreeDim> negative;   // dim HH_{-n}(A), when assembled
  std::vector<DegreeDim> q_side;     // dim H_n(Q_*), when computed

  /// sum over q of dim HH_p(A)^q.
  std::size_t total(int p) const;
  std::vector<HomologyCell> nonzero_cells() const;
};

std::string to_json(const HomologyTable& t);
/// Columns: section,p,q,n,dim. Sections are "cell", "total" and "negative".
std::string to_csv(const HomologyTable& t);
std::string to_text(const HomologyTable& t);
/// Throws ValidationError for malformed input.
HomologyTable table_from_json(const std::string& text);

}  // namespace hh
