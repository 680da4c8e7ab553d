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

#ifndef QMDS_PLANNER_H
#define QMDS_PLANNER_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmds/css_builder.h"
#include "qmds/field.h"
#include "qmds/fourier_code.h"
#include "qmds/rational.h"

namespace qmds {

// n = 2(d-1)/(1-R) when that is an integer, nullopt otherwise.
// Throws InvalidRate unless 0 < R < 1, InvalidArgument when d < 2.
std::optional<std::uint64_t> solve_length(const Rational &rate, std::uint64_t d);

enum class FieldPolicyKind { prime_field, fixed_characteristic, smallest_field };

std::string_view field_policy_name(FieldPolicyKind kind);

struct FieldPolicy {
    FieldPolicyKind kind = FieldPolicyKind::prime_field;
    std::uint64_t characteristic = 0;

    static FieldPolicy prime_field() {
        return {FieldPolicyKind::prime_field, 0};
    }
    static FieldPolicy fixed_characteristic(std::uint64_t p) {
        return {FieldPolicyKind::fixed_characteristic, p};
    }
    static FieldPolicy smallest_field() {
        return {FieldPolicyKind::smallest_field, 0};
    }
};

struct PlanRequest {
    Rational rate;
    std::uint64_t d_min = 2;
    FieldPolicy policy;
    // Largest distance tried; defaults to d_min + 512.
    std::optional<std::uint64_t> max_distance;
    std::optional<std::uint64_t> max_length;
    // Rows 0, s, 2s, ... instead of the consecutive prefix. Distances whose
    // length shares a factor with s are skipped.
    std::optional<std::uint64_t> arithmetic_step;
    // Fields above this order are treated as unavailable.
    std::uint64_t max_field_order = kDefaultMaxFieldOrder;
    // Candidate fields are listed up to this order (the chosen one always).
    std::uint64_t candidate_cap = 1024;
};

// GF(p^e), e the least degree with n | p^e - 1.
struct FieldCandidate {
    std::uint64_t p;
    unsigned e;
    std::uint64_t order;
};

struct PlanResult {
    std::uint64_t d;
    std::uint64_t n;
    std::uint64_t r;
    std::uint64_t k;
    FieldPtr field;
    ClassicalCode code;
    QuantumCodeParams quantum;
    std::vector<FieldCandidate> candidates;
    // Distances tried past d_min before success.
    std::uint64_t d_steps;
    std::string arithmetic_note;
};

// Throws InvalidRate, InvalidArgument, NotPrime or SearchExhausted.
PlanResult plan(const PlanRequest &request);

// All characteristics p with p^ord_p(n) <= cap, by order then p.
std::vector<FieldCandidate> candidate_fields(std::uint64_t n, std::uint64_t cap);

// Smallest field containing a primitive n-th root of unity.
FieldCandidate smallest_field_for_length(std::uint64_t n, std::uint64_t max_order = kDefaultMaxFieldOrder);

// ord_n(p), checked to divide phi(n). Throws NotPrime,
// CharacteristicDividesLength.
unsigned euler_field_existence(std::uint64_t p, std::uint64_t n);

struct CatalogOptions {
    std::optional<std::uint64_t> min_dimension;
    std::optional<std::uint64_t> min_distance;
};

struct CatalogEntry {
    std::uint64_t n;
    std::uint64_t r;
    std::uint64_t k;
    std::uint64_t d;
};

// [[q-1, 2r-(q-1), q-r]] for every r with 2r - (q-1) >= 1 and r <= q-2,
// increasing in r.
std::vector<CatalogEntry> best_for_field(const Field &field, const CatalogOptions &options = {});

// The Euclidean CSS record behind a catalog entry (consecutive prefix).
QuantumCodeParams catalog_entry_code(const FieldPtr &field, const CatalogEntry &entry);

}  // namespace qmds

#endif
