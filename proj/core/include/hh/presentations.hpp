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
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "hh/algebra.hpp"
#include "hh/field.hpp"

namespace hh {

using Word = std::vector<std::uint32_t>;

struct NcTerm {
  Word word;
  Scalar coeff;
};

/// Formal sum of words in the generators.
using NcPolynomial = std::vector<NcTerm>;

struct PresentationGenerator {
  std::string name;
  int weight = 1;
};

/// k<x_1..x_n>/(f_1..f_p) with weighted-homogeneous relations.
struct FreePresentation {
  static constexpr int kDefaultDegreeCap = 12;

  FieldContext field;
  std::vector<PresentationGenerator> generators;
  std::vector<NcPolynomial> relations;
  int degree_cap = kDefaultDegreeCap;
  std::string name;

  int weight(const Word& w) const;
};

/// Output of realize(): the algebra plus the words its basis elements
/// represent, so callers can map words to elements.
struct Realization {
  GradedAlgebra algebra;
  std::vector<Word> basis_words;
  /// Class of each one-letter word, as coordinates over the basis.
  std::vector<SparseVector> generator_images;

  /// Class of an arbitrary word.
  SparseVector normal_form(const Word& w) const;
};

/// Builds F/I degree by degree. Basis words are chosen by row reduction with
/// the (weight, length, lex) word order, eliminating the smallest words.
/// Throws ValidationError for inhomogeneous relations or relations with a
/// constant term, CapExceeded when finite-dimensionality is not witnessed
/// within degree_cap.
Realization realize_with_words(const FreePresentation& pres);
GradedAlgebra realize(const FreePresentation& pres);

/// k<x,y>/(x^a, y^b, xy - q yx) with basis {y^j x^i}, |x| = |y| = 1.
GradedAlgebra quantum_ci(const FieldContext& field, const Scalar& q, int a, int b);
FreePresentation quantum_ci_presentation(const FieldContext& field, const Scalar& q, int a,
                                         int b);

/// k<x,y,z>/(xy, yx, x^2 - y^2, x^2 - z^2, xz - q zx, yz - q zy).
FreePresentation xy_zero_example_presentation(const FieldContext& field, const Scalar& q);

/// Coefficients from the constant term upwards.
using UnivariatePolynomial = std::vector<Scalar>;

UnivariatePolynomial trimmed(UnivariatePolynomial f);
UnivariatePolynomial derivative(const UnivariatePolynomial& f);
UnivariatePolynomial polynomial_gcd(const FieldContext& field, UnivariatePolynomial f,
                                    UnivariatePolynomial g);

/// k[x]/(f) with basis 1, x, ..., x^{deg f - 1}. f is made monic; it must have
/// degree >= 2 and zero constant term. Graded (|x| = 1) iff f is a monomial.
GradedAlgebra truncated_univariate(const FieldContext& field, UnivariatePolynomial f);

/// True iff gcd(f, f') is a nonzero constant.
bool is_smooth_univariate(const FieldContext& field, const UnivariatePolynomial& f);

/// Linear map given on the source basis; an algebra morphism once
/// validate_morphism() comes back empty.
struct AlgebraMorphism {
  std::shared_ptr<const GradedAlgebra> source;
  std::shared_ptr<const GradedAlgebra> target;
  std::vector<SparseVector> images;
};

/// Checks multiplicativity on basis pairs, unit preservation, and degree
/// preservation when both sides are graded.
std::vector<Diagnostic> validate_morphism(const AlgebraMorphism& f);

/// after o before.
AlgebraMorphism compose(const AlgebraMorphism& after, const AlgebraMorphism& before);
bool is_identity(const AlgebraMorphism& f);

/// B = k[x_1]/(f_1) together with iota: B -> A and pi: A -> B.
struct Splitting {
  std::shared_ptr<const GradedAlgebra> a;
  std::shared_ptr<const GradedAlgebra> b;
  UnivariatePolynomial f1;
  AlgebraMorphism iota;
  AlgebraMorphism pi;
};

/// Relation in k[x_1] of pres (its index), or HypothesisError when the
/// presentation does not split as k[x_1]/(f_1) plus relations in (x_2..x_n).
std::size_t split_relation(const FreePresentation& pres);
UnivariatePolynomial as_univariate(const FieldContext& field, const NcPolynomial& f);

/// Realizes A and builds iota(x_1) = x_1, pi(x_1) = x_1, pi(x_i) = 0 (i >= 2).
/// Throws HypothesisError when the splitting hypotheses fail, and
/// ValidationError if pi o iota != id_B.
Splitting splitting_morphisms(const FreePresentation& pres);

struct Arrow {
  std::string name;
  std::size_t source = 0;
  std::size_t target = 0;
};

/// Quiver with monomial relations and a distinguished loop x at vertex e_i
/// with x^power among the relations. Paths compose left to right: the path
/// ab means "a then b" and needs target(a) = source(b).
struct QuiverPresentation {
  static constexpr int kDefaultPathCap = 12;

  FieldContext field;
  std::vector<std::string> vertices;
  std::vector<Arrow> arrows;
  std::vector<std::vector<std::size_t>> relations;
  std::size_t loop = 0;
  std::size_t vertex = 0;
  int power = 2;
  int path_cap = kDefaultPathCap;
  std::string name;
};

/// kQ/I in the adapted basis {1, e_j (j != vertex), nonzero paths}. The algebra
/// is ungraded. Throws CapExceeded when some path of length path_cap survives.
GradedAlgebra path_algebra(const QuiverPresentation& qp);

struct QuiverSplitting {
  std::shared_ptr<const GradedAlgebra> a;
  std::shared_ptr<const GradedAlgebra> b;
  AlgebraMorphism iota;
  AlgebraMorphism pi;
};

/// iota(e) = 1, iota(x) = x; pi(e_j) = delta_{ij}, pi(y) = delta_{yx} x.
QuiverSplitting quiver_splitting(const QuiverPresentation& qp);

}  // namespace hh
