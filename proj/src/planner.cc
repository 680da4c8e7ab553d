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

#include "qmds/planner.h"

#include <algorithm>
#include <limits>
#include <numeric>

#include "qmds/error.h"
#include "qmds/number_theory.h"

namespace qmds {

namespace {

std::optional<FieldCandidate> candidate_for(std::uint64_t p, std::uint64_t n, std::uint64_t cap) {
    if (n % p == 0) {
        return std::nullopt;
    }
    unsigned e = n == 1 ? 1 : static_cast<unsigned>(order_mod(p, n));
    auto order = checked_pow(p, e, cap);
    if (!order) {
        return std::nullopt;
    }
    return FieldCandidate{p, e, *order};
}

bool candidate_less(const FieldCandidate &a, const FieldCandidate &b) {
    return a.order != b.order ? a.order < b.order : a.p < b.p;
}

std::optional<FieldCandidate> choose_field(const FieldPolicy &policy, std::uint64_t n, std::uint64_t max_order) {
    switch (policy.kind) {
        case FieldPolicyKind::prime_field:
            if (n + 1 <= max_order && is_prime(n + 1)) {
                return FieldCandidate{n + 1, 1, n + 1};
            }
            return std::nullopt;
        case FieldPolicyKind::fixed_characteristic:
            return candidate_for(policy.characteristic, n, max_order);
        case FieldPolicyKind::smallest_field: {
            auto best = smallest_field_for_length(n, max_order);
            if (best.order == 0) {
                return std::nullopt;
            }
            return best;
        }
    }
    return std::nullopt;
}

std::string arithmetic_note(const Field &field) {
    if (field.degree() == 1) {
        return "prime field: integer arithmetic modulo " + std::to_string(field.characteristic());
    }
    return "extension field: polynomial arithmetic in " + field.to_string();
}

}  // namespace

std::optional<std::uint64_t> solve_length(const Rational &rate, std::uint64_t d) {
    if (rate <= 0 || rate >= 1) {
        throw Error(ErrorKind::InvalidRate, "rate " + format_rational(rate) + " is not strictly between 0 and 1");
    }
    if (d < 2) {
        throw Error(ErrorKind::InvalidArgument, "distance must be at least 2");
    }
    Rational gap = 1 - rate;
    auto num = static_cast<std::uint64_t>(gap.numerator());
    auto den = static_cast<std::uint64_t>(gap.denominator());
    if ((2 * (d - 1)) % num != 0) {
        return std::nullopt;
    }
    return (2 * (d - 1)) / num * den;
}

std::string_view field_policy_name(FieldPolicyKind kind) {
    switch (kind) {
        case FieldPolicyKind::prime_field: return "prime";
        case FieldPolicyKind::fixed_characteristic: return "characteristic";
        case FieldPolicyKind::smallest_field: return "smallest";
    }
    return "prime";
}

FieldCandidate smallest_field_for_length(std::uint64_t n, std::uint64_t max_order) {
    FieldCandidate best{0, 0, 0};
    std::uint64_t limit = max_order;
    for (std::uint64_t p = 2; p <= limit; p = next_prime(p)) {
        auto c = candidate_for(p, n, limit);
        if (c && (best.order == 0 || candidate_less(*c, best))) {
            best = *c;
            limit = c->order;
        }
    }
    return best;
}

std::vector<FieldCandidate> candidate_fields(std::uint64_t n, std::uint64_t cap) {
    std::vector<FieldCandidate> out;
    for (std::uint64_t p = 2; p <= cap; p = next_prime(p)) {
        if (auto c = candidate_for(p, n, cap)) {
            out.push_back(*c);
        }
    }
    std::sort(out.begin(), out.end(), candidate_less);
    return out;
}

unsigned euler_field_existence(std::uint64_t p, std::uint64_t n) {
    if (!is_prime(p)) {
        throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    }
    if (n == 0 || n % p == 0) {
        throw Error(ErrorKind::CharacteristicDividesLength,
                    std::to_string(p) + " divides n = " + std::to_string(n));
    }
    if (n == 1) {
        return 1;
    }
    auto e = order_mod(p, n);
    if (euler_phi(n) % e != 0) {
        throw Error(ErrorKind::InvalidArgument, "order does not divide phi(n)");
    }
    return static_cast<unsigned>(e);
}

PlanResult plan(const PlanRequest &request) {
    if (request.rate <= 0 || request.rate >= 1) {
        throw Error(ErrorKind::InvalidRate,
                    "rate " + format_rational(request.rate) + " is not strictly between 0 and 1");
    }
    if (request.d_min < 2) {
        throw Error(ErrorKind::InvalidArgument, "distance must be at least 2");
    }
    if (request.policy.kind == FieldPolicyKind::fixed_characteristic && !is_prime(request.policy.characteristic)) {
        throw Error(ErrorKind::NotPrime, std::to_string(request.policy.characteristic) + " is not prime");
    }
    if (request.arithmetic_step && *request.arithmetic_step == 0) {
        throw Error(ErrorKind::BadArithmeticDifference, "arithmetic step must be positive");
    }
    const std::uint64_t d_max = request.max_distance.value_or(request.d_min + 512);
    std::uint64_t last_tried = request.d_min;
    for (std::uint64_t d = request.d_min; d <= d_max; d++) {
        last_tried = d;
        auto n = solve_length(request.rate, d);
        if (!n) {
            continue;
        }
        if (request.max_length && *n > *request.max_length) {
            break;
        }
        if (request.arithmetic_step && std::gcd(*n, *request.arithmetic_step) != 1) {
            continue;
        }
        auto choice = choose_field(request.policy, *n, request.max_field_order);
        if (!choice) {
            continue;
        }
        const std::uint64_t k = *n - 2 * (d - 1);
        const std::uint64_t r = (*n + k) / 2;
        auto field = Field::create(choice->p, choice->e, request.max_field_order);
        auto matrix = fourier_matrix(field, *n);
        auto selection = request.arithmetic_step
                             ? RowSelection::arithmetic(*n, 0, *request.arithmetic_step % *n, r)
                             : RowSelection::consecutive(*n, r);
        auto code = code_from_rows(matrix, selection);
        auto quantum = css_from_euclidean(code);

        auto candidates = candidate_fields(*n, request.candidate_cap);
        bool listed = std::any_of(candidates.begin(), candidates.end(),
                                  [&](const FieldCandidate &c) { return c.p == choice->p && c.e == choice->e; });
        if (!listed) {
            candidates.push_back(*choice);
            std::sort(candidates.begin(), candidates.end(), candidate_less);
        }
        return PlanResult{d, *n, r, k, field, code, quantum, std::move(candidates), d - request.d_min,
                          arithmetic_note(*field)};
    }
    throw Error(ErrorKind::SearchExhausted, "no construction for distances " + std::to_string(request.d_min) +
                                                ".." + std::to_string(last_tried) + " under the " +
                                                std::string(field_policy_name(request.policy.kind)) + " policy");
}

std::vector<CatalogEntry> best_for_field(const Field &field, const CatalogOptions &options) {
    const std::uint64_t n = field.order() - 1;
    std::vector<CatalogEntry> out;
    for (std::uint64_t r = n / 2 + 1; r + 1 <= n; r++) {
        CatalogEntry e{n, r, 2 * r - n, n - r + 1};
        if (options.min_dimension && e.k < *options.min_dimension) {
            continue;
        }
        if (options.min_distance && e.d < *options.min_distance) {
            continue;
        }
        out.push_back(e);
    }
    return out;
}

QuantumCodeParams catalog_entry_code(const FieldPtr &field, const CatalogEntry &entry) {
    auto matrix = fourier_matrix(field, entry.n);
    return css_from_euclidean(code_from_rows(matrix, RowSelection::consecutive(entry.n, entry.r)));
}

}  // namespace qmds
