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

#include "qmds/fourier_code.h"

#include <algorithm>
#include <numeric>

#include "qmds/error.h"

namespace qmds {

FourierMatrix::FourierMatrix(FieldPtr field, std::size_t n, std::shared_ptr<const std::vector<Field::Value>> powers)
    : field_(std::move(field)), n_(n), powers_(std::move(powers)) {
}

Vector FourierMatrix::row(std::size_t i) const {
    Vector out(n_);
    for (std::size_t j = 0; j < n_; j++) {
        out[j] = entry(i, j);
    }
    return out;
}

Matrix FourierMatrix::rows(std::span<const std::size_t> indices) const {
    Matrix out(field_, indices.size(), n_);
    for (std::size_t r = 0; r < indices.size(); r++) {
        auto dst = out.row(r);
        for (std::size_t j = 0; j < n_; j++) {
            dst[j] = entry(indices[r], j);
        }
    }
    return out;
}

FourierMatrix fourier_matrix(const FieldPtr &field, std::uint64_t n, std::optional<FieldElement> omega) {
    if (n == 0) {
        throw Error(ErrorKind::InvalidArgument, "Fourier matrix length must be positive");
    }
    if (n % field->characteristic() == 0) {
        throw Error(
            ErrorKind::CharacteristicDividesLength,
            "characteristic " + std::to_string(field->characteristic()) + " divides n = " + std::to_string(n));
    }
    Field::Value w;
    if (omega) {
        if (!omega->field()->same_as(*field)) {
            throw Error(ErrorKind::FieldMismatch, "omega is not an element of " + field->to_string());
        }
        if (omega->is_zero() || field->element_order(omega->value()) != n) {
            throw Error(
                ErrorKind::NotPrimitiveRoot,
                omega->to_string() + " is not a primitive " + std::to_string(n) + "-th root of unity");
        }
        w = omega->value();
    } else {
        w = field->primitive_root_of_unity(n);
    }
    auto powers = std::make_shared<std::vector<Field::Value>>(n);
    Field::Value current = field->one();
    for (std::uint64_t k = 0; k < n; k++) {
        (*powers)[k] = current;
        current = field->mul(current, w);
    }
    return FourierMatrix(field, n, std::move(powers));
}

std::string_view selection_kind_name(SelectionKind kind) {
    switch (kind) {
        case SelectionKind::consecutive: return "consecutive";
        case SelectionKind::arithmetic: return "arithmetic";
        case SelectionKind::arbitrary: return "arbitrary";
    }
    return "arbitrary";
}

RowSelection::RowSelection(
    std::size_t n, std::vector<std::size_t> indices, SelectionKind kind, std::size_t start, std::size_t step)
    : n_(n), indices_(std::move(indices)), kind_(kind), start_(start), step_(step), member_(n, false) {
    if (n_ == 0) {
        throw Error(ErrorKind::InvalidSelection, "selection over an empty matrix");
    }
    if (indices_.empty()) {
        throw Error(ErrorKind::InvalidSelection, "a selection needs at least one row");
    }
    for (auto &i : indices_) {
        i %= n_;
        if (member_[i]) {
            throw Error(ErrorKind::InvalidSelection, "row " + std::to_string(i) + " selected twice");
        }
        member_[i] = true;
    }
}

RowSelection RowSelection::consecutive(std::size_t n, std::size_t count, std::size_t start) {
    if (n == 0 || count > n) {
        throw Error(ErrorKind::InvalidSelection,
                    "cannot take " + std::to_string(count) + " rows of F_" + std::to_string(n));
    }
    std::vector<std::size_t> indices(count);
    for (std::size_t k = 0; k < count; k++) {
        indices[k] = (start + k) % n;
    }
    return RowSelection(n, std::move(indices), SelectionKind::consecutive, start % n, 1);
}

RowSelection RowSelection::arithmetic(std::size_t n, std::size_t start, std::size_t step, std::size_t count) {
    if (n == 0 || std::gcd(n, step) != 1) {
        throw Error(
            ErrorKind::BadArithmeticDifference,
            "gcd(" + std::to_string(n) + ", " + std::to_string(step) + ") != 1");
    }
    if (count > n) {
        throw Error(ErrorKind::InvalidSelection,
                    "cannot take " + std::to_string(count) + " rows of F_" + std::to_string(n));
    }
    std::vector<std::size_t> indices(count);
    for (std::size_t k = 0; k < count; k++) {
        indices[k] = static_cast<std::size_t>((start + static_cast<std::uint64_t>(k) * step) % n);
    }
    return RowSelection(n, std::move(indices), SelectionKind::arithmetic, start % n, step % n);
}

RowSelection RowSelection::arbitrary(std::size_t n, std::vector<std::size_t> indices) {
    return RowSelection(n, std::move(indices), SelectionKind::arbitrary, 0, 0);
}

std::vector<std::size_t> RowSelection::sorted_indices() const {
    auto out = indices_;
    std::sort(out.begin(), out.end());
    return out;
}

bool RowSelection::contains(std::size_t index) const {
    return index < n_ && member_[index];
}

ClassicalCode::ClassicalCode(FourierMatrix matrix, RowSelection selection, std::optional<DistanceClaim> distance)
    : matrix_(std::move(matrix)), selection_(std::move(selection)), distance_(distance) {
    if (selection_.length() != matrix_.length()) {
        throw Error(ErrorKind::LengthMismatch, "selection over F_" + std::to_string(selection_.length()) +
                                                   " applied to F_" + std::to_string(matrix_.length()));
    }
}

Matrix ClassicalCode::generator() const {
    return matrix_.rows(selection_.indices());
}

ClassicalCode ClassicalCode::with_distance(DistanceClaim claim) const {
    return ClassicalCode(matrix_, selection_, claim);
}

ClassicalCode code_from_rows(const FourierMatrix &matrix, const RowSelection &selection) {
    std::optional<DistanceClaim> distance;
    switch (selection.kind()) {
        case SelectionKind::arithmetic:
            if (std::gcd(selection.length(), selection.step()) != 1) {
                throw Error(ErrorKind::BadArithmeticDifference, "arithmetic step not coprime to n");
            }
            [[fallthrough]];
        case SelectionKind::consecutive:
            distance = DistanceClaim{matrix.length() - selection.size() + 1, DistanceBasis::theorem};
            break;
        case SelectionKind::arbitrary:
            break;
    }
    return ClassicalCode(matrix, selection, distance);
}

std::vector<std::size_t> euclidean_dual_indices(std::size_t n, std::span<const std::size_t> indices) {
    std::vector<bool> excluded(n, false);
    for (auto i : indices) {
        excluded[(n - i % n) % n] = true;
    }
    std::vector<std::size_t> out;
    for (std::size_t j = 0; j < n; j++) {
        if (!excluded[j]) {
            out.push_back(j);
        }
    }
    return out;
}

std::vector<std::size_t> euclidean_dual_indices(const RowSelection &selection) {
    return euclidean_dual_indices(selection.length(), selection.indices());
}

bool is_euclidean_dual_containing(std::size_t n, std::span<const std::size_t> indices) {
    std::vector<bool> member(n, false);
    for (auto i : indices) {
        member[i % n] = true;
    }
    auto dual = euclidean_dual_indices(n, indices);
    return std::all_of(dual.begin(), dual.end(), [&](std::size_t j) { return member[j]; });
}

bool is_euclidean_dual_containing(const RowSelection &selection) {
    return is_euclidean_dual_containing(selection.length(), selection.indices());
}

Vector encode(const ClassicalCode &code, std::span<const Field::Value> message) {
    if (message.size() != code.dimension()) {
        throw Error(ErrorKind::LengthMismatch, "message length " + std::to_string(message.size()) +
                                                   " != dimension " + std::to_string(code.dimension()));
    }
    const Field &f = *code.field();
    const auto &rows = code.selection().indices();
    Vector out(code.length(), 0);
    for (std::size_t k = 0; k < message.size(); k++) {
        if (message[k] == 0) {
            continue;
        }
        for (std::size_t j = 0; j < out.size(); j++) {
            out[j] = f.add(out[j], f.mul(message[k], code.matrix().entry(rows[k], j)));
        }
    }
    return out;
}

std::vector<FieldElement> encode(const ClassicalCode &code, const std::vector<FieldElement> &message) {
    Vector raw;
    raw.reserve(message.size());
    for (const auto &m : message) {
        if (!m.field()->same_as(*code.field())) {
            throw Error(ErrorKind::FieldMismatch, "message symbol from " + m.field()->to_string() +
                                                      ", code over " + code.field()->to_string());
        }
        raw.push_back(m.value());
    }
    std::vector<FieldElement> out;
    for (auto v : encode(code, raw)) {
        out.push_back(code.field()->element(v));
    }
    return out;
}

}  // namespace qmds
