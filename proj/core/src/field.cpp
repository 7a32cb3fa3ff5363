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

#include "hh/field.hpp"

#include <charconv>
#include <stdexcept>

#include "hh/error.hpp"

namespace hh {
namespace {

bool is_prime(std::uint32_t p) {
  if (p < 2) return false;
  if (p % 2 == 0) return p == 2;
  for (std::uint64_t d = 3; d * d <= p; d += 2) {
    if (p % d == 0) return false;
  }
  return true;
}

std::uint32_t mod_inverse(std::uint32_t a, std::uint32_t p) {
  // Extended Euclid on (a, p); a is nonzero mod p.
  std::int64_t t = 0, new_t = 1;
  std::int64_t r = p, new_r = a;
  while (new_r != 0) {
    const std::int64_t quotient = r / new_r;
    t -= quotient * new_t;
    std::swap(t, new_t);
    r -= quotient * new_r;
    std::swap(r, new_r);
  }
  if (t < 0) t += p;
  return static_cast<std::uint32_t>(t);
}

std::uint32_t mpz_mod(const mpz_class& z, std::uint32_t p) {
  mpz_class r;
  mpz_fdiv_r_ui(r.get_mpz_t(), z.get_mpz_t(), p);
  return static_cast<std::uint32_t>(r.get_ui());
}

}  // namespace

FieldContext FieldContext::prime_field(std::uint32_t p) {
  if (p >= (1u << 31) || !is_prime(p)) {
    throw ValidationError("field characteristic " + std::to_string(p) +
                          " is not a prime below 2^31");
  }
  return FieldContext(FieldKind::kPrimeField, p);
}

FieldContext FieldContext::parse(std::string_view selector) {
  if (selector == "q" || selector == "Q") return rationals();
  for (std::string_view prefix : {"fp:", "Fp:", "FP:"}) {
    if (selector.substr(0, prefix.size()) == prefix) {
      const auto digits = selector.substr(prefix.size());
      std::uint32_t p = 0;
      const auto [ptr, ec] =
          std::from_chars(digits.data(), digits.data() + digits.size(), p);
      if (ec != std::errc() || ptr != digits.data() + digits.size()) break;
      return prime_field(p);
    }
  }
  throw ValidationError("unknown field selector '" + std::string(selector) +
                        "' (expected q or fp:P)");
}

std::string FieldContext::name() const {
  return is_rationals() ? "Q" : "F_" + std::to_string(p_);
}

std::string FieldContext::selector() const {
  return is_rationals() ? "q" : "fp:" + std::to_string(p_);
}

Scalar FieldContext::zero() const { return from_int(0); }
Scalar FieldContext::one() const { return from_int(1); }

Scalar FieldContext::from_int(std::int64_t n) const {
  if (is_rationals()) return Scalar(mpq_class(static_cast<long>(n)));
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return Scalar::residue(static_cast<std::uint64_t>(r), p_);
}

Scalar FieldContext::from_rational(const mpq_class& r) const {
  if (is_rationals()) return Scalar(r);
  const std::uint32_t den = mpz_mod(r.get_den(), p_);
  if (den == 0) {
    throw ValidationError("scalar " + r.get_str() + " has a denominator divisible by " +
                          std::to_string(p_));
  }
  const std::uint64_t num = mpz_mod(r.get_num(), p_);
  return Scalar::residue(num * mod_inverse(den, p_) % p_, p_);
}

Scalar FieldContext::parse_scalar(std::string_view text) const {
  std::string s(text);
  const auto first = s.find_first_not_of(" \t");
  const auto last = s.find_last_not_of(" \t");
  if (first == std::string::npos) throw ValidationError("empty scalar");
  s = s.substr(first, last - first + 1);
  if (!s.empty() && s.front() == '+') s.erase(0, 1);
  mpq_class value;
  if (s.empty() || value.set_str(s, 10) != 0) {
    throw ValidationError("malformed scalar '" + std::string(text) + "'");
  }
  if (value.get_den() == 0) throw ValidationError("zero denominator in '" + s + "'");
  value.canonicalize();
  return from_rational(value);
}

Scalar FieldContext::coerce(const Scalar& s) const {
  if (s.is_rational()) return from_rational(s.rational());
  if (is_rationals() || s.modulus() != p_) {
    throw ValidationError("cannot coerce an element of F_" + std::to_string(s.modulus()) +
                          " into " + name());
  }
  return s;
}

Scalar Scalar::residue(std::uint64_t value, std::uint32_t modulus) {
  Scalar s;
  s.value_ = Residue{static_cast<std::uint32_t>(value % modulus), modulus};
  return s;
}

void Scalar::canonical() {
  if (auto* q = std::get_if<mpq_class>(&value_)) q->canonicalize();
}

Scalar::Residue Scalar::reduce(const mpq_class& r, std::uint32_t modulus) {
  const std::uint32_t den = mpz_mod(r.get_den(), modulus);
  if (den == 0) throw std::domain_error("rational not representable modulo p");
  const std::uint64_t num = mpz_mod(r.get_num(), modulus);
  return Residue{static_cast<std::uint32_t>(num * mod_inverse(den, modulus) % modulus),
                 modulus};
}

bool Scalar::is_zero() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return sgn(*q) == 0;
  return std::get<Residue>(value_).value == 0;
}

bool Scalar::is_one() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return *q == 1;
  return std::get<Residue>(value_).value == 1;
}

Scalar Scalar::inverse() const {
  if (is_zero()) throw std::domain_error("inverse of zero");
  if (const auto* q = std::get_if<mpq_class>(&value_)) return Scalar(mpq_class(1) / *q);
  const auto& r = std::get<Residue>(value_);
  return residue(mod_inverse(r.value, r.modulus), r.modulus);
}

Scalar Scalar::operator-() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return Scalar(mpq_class(-*q));
  const auto& r = std::get<Residue>(value_);
  return residue(r.value == 0 ? 0 : r.modulus - r.value, r.modulus);
}

template <class RationalOp, class ResidueOp>
Scalar& Scalar::apply(const Scalar& other, RationalOp rational_op, ResidueOp residue_op) {
  auto* lhs_q = std::get_if<mpq_class>(&value_);
  const auto* rhs_q = std::get_if<mpq_class>(&other.value_);
  if (lhs_q && rhs_q) {
    *lhs_q = rational_op(*lhs_q, *rhs_q);
    return *this;
  }
  Residue rhs;
  if (lhs_q) {
    rhs = std::get<Residue>(other.value_);
    value_ = reduce(*lhs_q, rhs.modulus);
  } else if (rhs_q) {
    rhs = reduce(*rhs_q, std::get<Residue>(value_).modulus);
  } else {
    rhs = std::get<Residue>(other.value_);
  }
  auto& lhs = std::get<Residue>(value_);
  if (lhs.modulus != rhs.modulus) {
    throw std::logic_error("arithmetic between different prime fields");
  }
  lhs.value = static_cast<std::uint32_t>(residue_op(lhs.value, rhs.value, lhs.modulus));
  return *this;
}

Scalar& Scalar::operator+=(const Scalar& other) {
  return apply(
      other, [](const mpq_class& a, const mpq_class& b) { return mpq_class(a + b); },
      [](std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a + b) % p; });
}

Scalar& Scalar::operator-=(const Scalar& other) {
  return apply(
      other, [](const mpq_class& a, const mpq_class& b) { return mpq_class(a - b); },
      [](std::uint64_t a, std::uint64_t b, std::uint64_t p) { return (a + p - b) % p; });
}

Scalar& Scalar::operator*=(const Scalar& other) {
  return apply(
      other, [](const mpq_class& a, const mpq_class& b) { return mpq_class(a * b); },
      [](std::uint64_t a, std::uint64_t b, std::uint64_t p) { return a * b % p; });
}

Scalar& Scalar::operator/=(const Scalar& other) {
  if (other.is_zero()) throw std::domain_error("division by zero");
  return apply(
      other, [](const mpq_class& a, const mpq_class& b) { return mpq_class(a / b); },
      [](std::uint64_t a, std::uint64_t b, std::uint64_t p) {
        if (b == 0) throw std::domain_error("division by zero");
        return a * mod_inverse(static_cast<std::uint32_t>(b), static_cast<std::uint32_t>(p)) % p;
      });
}

bool operator==(const Scalar& a, const Scalar& b) {
  const auto* aq = std::get_if<mpq_class>(&a.value_);
  const auto* bq = std::get_if<mpq_class>(&b.value_);
  if (aq && bq) return *aq == *bq;
  if (aq) return (Scalar(*aq) - b).is_zero();
  if (bq) return (a - Scalar(*bq)).is_zero();
  const auto& ar = std::get<Scalar::Residue>(a.value_);
  const auto& br = std::get<Scalar::Residue>(b.value_);
  return ar.modulus == br.modulus && ar.value == br.value;
}

std::string Scalar::to_string() const {
  if (const auto* q = std::get_if<mpq_class>(&value_)) return q->get_str();
  return std::to_string(std::get<Residue>(value_).value);
}

Scalar sign_scalar(const FieldContext& field, long long exponent) {
  return field.from_int(exponent % 2 == 0 ? 1 : -1);
}

}  // namespace hh
