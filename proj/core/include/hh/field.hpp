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

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>
#include <variant>

namespace hh {

class Scalar;

enum class FieldKind { kRationals, kPrimeField };

/// Ground field of a computation: the rationals, or F_p for a prime p < 2^31.
///
/// Fields are cheap value types. Two contexts compare equal iff they denote
/// the same field.
class FieldContext {
 public:
  /// 32003 is prime and congruent to 3 mod 4, so -1 is not a square in F_p.
  static constexpr std::uint32_t kDefaultPrime = 32003;

  FieldContext() = default;  // the rationals

  static FieldContext rationals() { return FieldContext(); }
  /// Throws ValidationError unless p is a prime below 2^31.
  static FieldContext prime_field(std::uint32_t p);
  /// Accepts "q"/"Q" and "fp:P"/"Fp:P".
  static FieldContext parse(std::string_view selector);

  FieldKind kind() const { return kind_; }
  bool is_rationals() const { return kind_ == FieldKind::kRationals; }
  /// 0 for the rationals.
  std::uint32_t characteristic() const { return p_; }

  /// "Q" or "F_p".
  std::string name() const;
  /// Round-trips through parse(): "q" or "fp:p".
  std::string selector() const;

  Scalar zero() const;
  Scalar one() const;
  Scalar from_int(std::int64_t n) const;
  /// Throws ValidationError if the denominator vanishes in the field.
  Scalar from_rational(const mpq_class& r) const;
  /// Parses "n" or "a/b" (optionally signed).
  Scalar parse_scalar(std::string_view text) const;
  /// Coerces a scalar from any field compatible with this one into it.
  Scalar coerce(const Scalar& s) const;

  bool operator==(const FieldContext&) const = default;

 private:
  FieldContext(FieldKind kind, std::uint32_t p) : kind_(kind), p_(p) {}

  FieldKind kind_ = FieldKind::kRationals;
  std::uint32_t p_ = 0;
};

/// An exact field element: a GMP rational or a residue modulo a prime.
///
/// Mixed arithmetic between a rational and a residue reduces the rational
/// into F_p, so a default-constructed zero works as an accumulator in either
/// field. Mixing residues of different moduli throws std::logic_error.
class Scalar {
 public:
  Scalar() = default;
  explicit Scalar(mpq_class value) : value_(std::move(value)) { canonical(); }
  static Scalar residue(std::uint64_t value, std::uint32_t modulus);

  bool is_rational() const { return std::holds_alternative<mpq_class>(value_); }
  const mpq_class& rational() const { return std::get<mpq_class>(value_); }
  std::uint32_t residue_value() const { return std::get<Residue>(value_).value; }
  std::uint32_t modulus() const {
    return is_rational() ? 0 : std::get<Residue>(value_).modulus;
  }

  bool is_zero() const;
  bool is_one() const;

  /// Throws std::domain_error for zero.
  Scalar inverse() const;

  Scalar operator-() const;
  Scalar& operator+=(const Scalar& other);
  Scalar& operator-=(const Scalar& other);
  Scalar& operator*=(const Scalar& other);
  Scalar& operator/=(const Scalar& other);

  friend Scalar operator+(Scalar a, const Scalar& b) { return a += b; }
  friend Scalar operator-(Scalar a, const Scalar& b) { return a -= b; }
  friend Scalar operator*(Scalar a, const Scalar& b) { return a *= b; }
  friend Scalar operator/(Scalar a, const Scalar& b) { return a /= b; }

  /// Value equality; a rational equals a residue when it reduces to it.
  friend bool operator==(const Scalar& a, const Scalar& b);

  /// "a/b", "n", or the residue in [0, p).
  std::string to_string() const;

 private:
  struct Residue {
    std::uint32_t value = 0;
    std::uint32_t modulus = 0;
  };

  void canonical();
  template <class RationalOp, class ResidueOp>
  Scalar& apply(const Scalar& other, RationalOp rational_op, ResidueOp residue_op);
  /// Brings *this and other into the same representation.
  static Residue reduce(const mpq_class& r, std::uint32_t modulus);

  std::variant<mpq_class, Residue> value_;
};

/// (-1)^e as a scalar of the given field.
Scalar sign_scalar(const FieldContext& field, long long exponent);

}  // namespace hh
