// Copyright 2026 The qmds Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#ifndef QMDS_FIELD_H
#define QMDS_FIELD_H

#include <cstdint>
#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace qmds {

class Field;
class FieldElement;
using FieldPtr = std::shared_ptr<const Field>;

inline constexpr std::uint64_t kDefaultMaxFieldOrder = std::uint64_t{1} << 32;
// Extension fields up to this order use log/antilog tables.
inline constexpr std::uint64_t kTableLimit = std::uint64_t{1} << 20;

// An explicit finite field GF(p^m).
//
// Elements are packed into a `Value`: for m == 1 the residue itself, for
// m > 1 the polynomial-basis coefficients c_0..c_{m-1} read as the base-p
// integer sum c_k p^k. Every field is immutable once created, so a FieldPtr
// may be shared freely between threads.
//
// Determinism rules:
//   - the modulus of GF(p^m), m > 1, is the smallest monic irreducible of
//     degree m when coefficient vectors (c_0, c_1, ..., c_m) are compared
//     lexicographically;
//   - "smallest element" searches use the same lexicographic rule on
//     (c_0, ..., c_{m-1}); for m == 1 this is the ordinary residue order.
class Field : public std::enable_shared_from_this<Field> {
   public:
    using Value = std::uint32_t;

    static FieldPtr create(std::uint64_t p, unsigned m, std::uint64_t max_order = kDefaultMaxFieldOrder);

    // Uses the given monic modulus (coefficients low degree first) instead of
    // the default one. Throws InvalidArgument if it is not monic irreducible.
    static FieldPtr create_with_modulus(
        std::uint64_t p, std::vector<std::uint32_t> modulus, std::uint64_t max_order = kDefaultMaxFieldOrder);

    // Accepts `GF(q)`, `GF(p^m)`, `Z_p`, and the canonical
    // `GF(p^m; modulus=...)` produced by to_string().
    static FieldPtr parse(std::string_view text, std::uint64_t max_order = kDefaultMaxFieldOrder);

    std::uint32_t characteristic() const {
        return p_;
    }
    unsigned degree() const {
        return m_;
    }
    std::uint64_t order() const {
        return q_;
    }
    // Monic modulus, coefficients c_0..c_m. Empty for prime fields.
    const std::vector<std::uint32_t> &modulus() const {
        return modulus_;
    }

    // `GF(p)` for prime fields, `GF(p^m; modulus=c0+c1*x+...)` otherwise.
    std::string to_string() const;
    bool same_as(const Field &other) const;

    Value zero() const {
        return 0;
    }
    Value one() const {
        return 1;
    }
    bool is_valid(Value a) const {
        return a < q_;
    }
    // The image of an integer under Z -> GF(q), i.e. k * 1_F.
    Value from_integer(std::int64_t k) const;

    Value add(Value a, Value b) const;
    Value sub(Value a, Value b) const;
    Value neg(Value a) const;
    Value mul(Value a, Value b) const;
    Value inv(Value a) const;
    Value div(Value a, Value b) const;
    Value pow(Value a, std::uint64_t exponent) const;

    std::vector<std::uint32_t> coefficients(Value a) const;
    Value from_coefficients(std::span<const std::uint32_t> coefficients) const;
    std::string format(Value a) const;
    Value parse_element(std::string_view text) const;

    std::uint64_t canonical_rank(Value a) const;
    Value from_canonical_rank(std::uint64_t rank) const;
    bool canonical_less(Value a, Value b) const {
        return canonical_rank(a) < canonical_rank(b);
    }

    // Multiplicative order, by descending through the prime factors of q-1.
    std::uint64_t element_order(Value a) const;
    // The canonically smallest generator of the multiplicative group.
    Value primitive_element() const;
    // The canonically smallest element of multiplicative order exactly n.
    Value primitive_root_of_unity(std::uint64_t n) const;

    FieldElement element(Value a) const;
    FieldElement element_from_integer(std::int64_t k) const;

    // Prime factorization of q-1.
    const std::vector<std::pair<std::uint64_t, unsigned>> &group_order_factors() const {
        return group_factors_;
    }

   private:
    struct Passkey {};

   public:
    Field(Passkey, std::uint32_t p, unsigned m, std::vector<std::uint32_t> modulus);

   private:
    void build_tables();
    Value mul_binary(Value a, Value b) const;
    Value mul_extension(Value a, Value b) const;
    Value inv_extension(Value a) const;

    std::uint32_t p_;
    unsigned m_;
    std::uint64_t q_;
    std::vector<std::uint32_t> modulus_;
    std::vector<std::uint32_t> reduction_;  // (p - c_k) mod p for k < m
    // Extension fields up to kTableLimit: exp_ over two periods, log_, and v + 1.
    std::vector<Value> exp_;
    std::vector<std::uint32_t> log_;
    std::vector<Value> succ_;
    std::uint32_t binary_modulus_bits_ = 0;
    std::vector<std::pair<std::uint64_t, unsigned>> group_factors_;
};

// An element of a specific field. Mixing elements of different fields
// raises FieldMismatch.
class FieldElement {
   public:
    FieldElement(FieldPtr field, Field::Value value);

    const FieldPtr &field() const {
        return field_;
    }
    Field::Value value() const {
        return value_;
    }
    bool is_zero() const {
        return value_ == 0;
    }

    FieldElement operator+(const FieldElement &other) const;
    FieldElement operator-(const FieldElement &other) const;
    FieldElement operator*(const FieldElement &other) const;
    FieldElement operator/(const FieldElement &other) const;
    FieldElement operator-() const;
    bool operator==(const FieldElement &other) const;

    FieldElement inverse() const;
    FieldElement pow(std::uint64_t exponent) const;
    std::string to_string() const;

   private:
    void require_same_field(const FieldElement &other) const;

    FieldPtr field_;
    Field::Value value_;
};

FieldPtr field_create(std::uint64_t p, unsigned m, std::uint64_t max_order = kDefaultMaxFieldOrder);

FieldElement add(const FieldElement &a, const FieldElement &b);
FieldElement sub(const FieldElement &a, const FieldElement &b);
FieldElement mul(const FieldElement &a, const FieldElement &b);
FieldElement inv(const FieldElement &a);
FieldElement pow(const FieldElement &a, std::uint64_t exponent);

// Throws ZeroElement for a == 0.
std::uint64_t element_order(const FieldElement &a);

// Throws NoSuchRoot unless n divides q-1.
FieldElement find_primitive_root_of_unity(const FieldPtr &field, std::uint64_t n);

// a^l; for l a power of the characteristic this is a field automorphism.
FieldElement frobenius_power(const FieldElement &a, std::uint64_t l);

// Irreducibility of a monic polynomial over GF(p) (coefficients low degree first).
bool is_irreducible_over_prime_field(std::uint32_t p, std::span<const std::uint32_t> poly);

}  // namespace qmds

#endif
