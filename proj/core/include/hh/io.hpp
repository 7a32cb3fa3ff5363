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

#include <optional>
#include <string>
#include <vector>

#include "hh/algebra.hpp"
#include "hh/field.hpp"
#include "hh/presentations.hpp"
#include "hh/witnesses.hpp"

namespace hh {

/// What a JSON input file describes.
enum class InputKind { kAlgebra, kPresentation, kQuiver, kFamily };

/// Parse errors and malformed content throw ValidationError. A field given
/// in `field_override` replaces the one stored in the file.
InputKind detect_input_kind(const std::string& text);

/// {"field", "basis", "unit", "degrees"?, "products": [[j, k, i, "c"], ...]}
/// where j, k, i are indices or labels; repeated (j, k) entries add up. Also
/// {"builtin": "quantum_ci", "q", "a", "b"} and
/// {"builtin": "truncated", "coefficients": ["c_0", ...]}.
GradedAlgebra algebra_from_json(const std::string& text,
                                const std::optional<FieldContext>& field_override = {});

/// {"field", "generators": [{"name", "weight"}], "relations": [[{"word", "coeff"}]],
/// "cap"?}. A word is a list of generator names, or a string of one-letter
/// names.
FreePresentation presentation_from_json(const std::string& text,
                                        const std::optional<FieldContext>& field_override = {});

/// {"field", "vertices", "arrows": [{"name", "src", "dst"}], "relations": [[arrow names]],
/// "loop", "vertex", "power", "cap"?}
QuiverPresentation quiver_from_json(const std::string& text,
                                    const std::optional<FieldContext>& field_override = {});

/// {"field", "family": [entry, ...]} where each entry is an algebra or a
/// presentation object with an optional "name".
std::vector<ScanEntry> family_from_json(const std::string& text,
                                        const std::optional<FieldContext>& field_override = {});

/// Algebra (or presentation, realized) from either file kind.
GradedAlgebra load_algebra(const std::string& text,
                           const std::optional<FieldContext>& field_override = {});

std::string algebra_to_json(const GradedAlgebra& a);

}  // namespace hh
