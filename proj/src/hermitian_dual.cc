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

#include "qmds/hermitian_dual.h"

#include <algorithm>

#include "qmds/error.h"
#include "qmds/number_theory.h"

namespace qmds {

HermitianContext::HermitianContext(std::size_t n, std::uint64_t l, std::optional<FourierMatrix> matrix)
    : n_(n), l_(l), l_inverse_(0), matrix_(std::move(matrix)) {
    if (n_ == 0) {
        throw Error(ErrorKind::InvalidArgument, "Hermitian context needs n >= 1");
    }
    auto inv = inverse_mod(l_ % n_, n_);
    if (!inv) {
        throw Error(ErrorKind::LNotInvertible,
                    "l = " + std::to_string(l_) + " is not invertible mod n = " + std::to_string(n_));
    }
    l_inverse_ = *inv;
}

HermitianContext HermitianContext::from_matrix(const FourierMatrix &matrix) {
    const Field &f = *matrix.field();
    if (f.degree() % 2 != 0) {
        throw Error(ErrorKind::NotHermitianField, f.to_string() + " is not of the form GF(l^2)");
    }
    std::uint64_t l = 1;
    for (unsigned k = 0; k < f.degree() / 2; k++) {
        l *= f.characteristic();
    }
    return HermitianContext(matrix.length(), l, matrix);
}

HermitianContext HermitianContext::from_parameters(std::size_t n, std::uint64_t l) {
    return HermitianContext(n, l, std::nullopt);
}

std::size_t HermitianContext::partner(std::size_t i) const {
    std::uint64_t t = mul_mod(i % n_, l_inverse_, n_);
    return static_cast<std::size_t>((n_ - t) % n_);
}

Field::Value hermitian_inner_product(
    const Field &field, std::uint64_t l, std::span<const Field::Value> u, std::span<const Field::Value> v) {
    if (u.size() != v.size()) {
        throw Error(ErrorKind::LengthMismatch, "Hermitian product of vectors with different lengths");
    }
    Field::Value acc = 0;
    for (std::size_t i = 0; i < u.size(); i++) {
        if (u[i] != 0 && v[i] != 0) {
            acc = field.add(acc, field.mul(u[i], field.pow(v[i], l)));
        }
    }
    return acc;
}

FieldElement hermitian_inner_product(
    const std::vector<FieldElement> &u, const std::vector<FieldElement> &v, const HermitianContext &ctx) {
    if (!ctx.matrix()) {
        throw Error(ErrorKind::InvalidArgument, "Hermitian context has no field attached");
    }
    const FieldPtr &field = ctx.matrix()->field();
    if (u.size() != v.size()) {
        throw Error(ErrorKind::LengthMismatch, "Hermitian product of vectors with different lengths");
    }
    Vector ru, rv;
    for (std::size_t i = 0; i < u.size(); i++) {
        if (!u[i].field()->same_as(*field) || !v[i].field()->same_as(*field)) {
            throw Error(ErrorKind::FieldMismatch, "vector entry outside " + field->to_string());
        }
        ru.push_back(u[i].value());
        rv.push_back(v[i].value());
    }
    return field->element(hermitian_inner_product(*field, ctx.conjugation_exponent(), ru, rv));
}

std::size_t row_conjugate_index(std::size_t i, const HermitianContext &ctx) {
    return static_cast<std::size_t>(mul_mod(i, ctx.conjugation_exponent(), ctx.length()));
}

std::vector<std::size_t> hermitian_dual_indices(std::span<const std::size_t> indices, const HermitianContext &ctx) {
    std::vector<bool> excluded(ctx.length(), false);
    for (auto i : indices) {
        excluded[ctx.partner(i)] = true;
    }
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < ctx.length(); j++) {
        if (!excluded[j]) {
            out.push_back(j);
        }
    }
    return out;
}

std::vector<std::size_t> non_self_dual_rows(const HermitianContext &ctx) {
    std::vector<std::size_t> out;
    const std::uint64_t n = ctx.length();
    const std::uint64_t l1 = (ctx.conjugation_exponent() + 1) % n;
    for (std::size_t i = 0; i < n; i++) {
        if (mul_mod(i, l1, n) == 0) {
            out.push_back(i);
        }
    }
    return out;
}

HermitianContainment diagnose_hermitian_containment(
    std::span<const std::size_t> indices, const HermitianContext &ctx) {
    std::vector<bool> member(ctx.length(), false);
    for (auto i : indices) {
        member[i % ctx.length()] = true;
    }
    HermitianContainment out;
    out.dual_indices = hermitian_dual_indices(indices, ctx);
    for (auto j : out.dual_indices) {
        if (!member[j]) {
            out.uncovered.push_back(j);
        }
    }
    for (auto j : non_self_dual_rows(ctx)) {
        if (!member[j]) {
            out.missing_non_self_dual.push_back(j);
        }
    }
    out.dual_containing = out.uncovered.empty();
    return out;
}

bool is_hermitian_dual_containing(std::span<const std::size_t> indices, const HermitianContext &ctx) {
    return diagnose_hermitian_containment(indices, ctx).dual_containing;
}

}  // namespace qmds
