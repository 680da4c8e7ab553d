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

#ifndef QMDS_FOURIER_CODE_H
#define QMDS_FOURIER_CODE_H

#include <cstddef>
#include <memory>
#include <optional>
#include <span>
#include <string_view>
#include <vector>

#include "qmds/field.h"
#include "qmds/linear_algebra.h"

namespace qmds {

// The n x n matrix with entry (i, j) = w^(ij) for a primitive n-th root of
// unity w. Row i is e_i = (1, w^i, w^(2i), ..., w^((n-1)i)).
//
// Only the n powers of w are stored; copies share them.
class FourierMatrix {
   public:
    const FieldPtr &field() const {
        return field_;
    }
    std::size_t length() const {
        return n_;
    }
    FieldElement omega() const {
        return field_->element((*powers_)[n_ > 1 ? 1 : 0]);
    }
    Field::Value omega_power(std::uint64_t k) const {
        return (*powers_)[k % n_];
    }
    Field::Value entry(std::size_t i, std::size_t j) const {
        return (*powers_)[(static_cast<std::uint64_t>(i) * j) % n_];
    }
    Vector row(std::size_t i) const;
    // The listed rows, in the given order.
    Matrix rows(std::span<const std::size_t> indices) const;

   private:
    friend FourierMatrix fourier_matrix(const FieldPtr &, std::uint64_t, std::optional<FieldElement>);
    FourierMatrix(FieldPtr field, std::size_t n, std::shared_ptr<const std::vector<Field::Value>> powers);

    FieldPtr field_;
    std::size_t n_;
    std::shared_ptr<const std::vector<Field::Value>> powers_;
};

// Throws CharacteristicDividesLength when p | n, NotPrimitiveRoot when the
// supplied omega does not have order exactly n, and NoSuchRoot when no
// omega is supplied and n does not divide q-1.
FourierMatrix fourier_matrix(
    const FieldPtr &field, std::uint64_t n, std::optional<FieldElement> omega = std::nullopt);

enum class SelectionKind { consecutive, arithmetic, arbitrary };

std::string_view selection_kind_name(SelectionKind kind);

// An ordered set of distinct row indices of F_n.
class RowSelection {
   public:
    // Rows start, start+1, ..., start+count-1 (mod n).
    static RowSelection consecutive(std::size_t n, std::size_t count, std::size_t start = 0);
    // Rows start, start+step, ... (mod n). Throws BadArithmeticDifference
    // unless gcd(n, step) = 1.
    static RowSelection arithmetic(std::size_t n, std::size_t start, std::size_t step, std::size_t count);
    // Any distinct indices; each is reduced mod n.
    static RowSelection arbitrary(std::size_t n, std::vector<std::size_t> indices);

    std::size_t length() const {
        return n_;
    }
    std::size_t size() const {
        return indices_.size();
    }
    const std::vector<std::size_t> &indices() const {
        return indices_;
    }
    std::vector<std::size_t> sorted_indices() const;
    SelectionKind kind() const {
        return kind_;
    }
    std::size_t start() const {
        return start_;
    }
    std::size_t step() const {
        return step_;
    }
    bool contains(std::size_t index) const;

   private:
    RowSelection(std::size_t n, std::vector<std::size_t> indices, SelectionKind kind, std::size_t start,
                 std::size_t step);

    std::size_t n_;
    std::vector<std::size_t> indices_;
    SelectionKind kind_;
    std::size_t start_;
    std::size_t step_;
    std::vector<bool> member_;
};

enum class DistanceBasis { theorem, oracle };

struct DistanceClaim {
    std::size_t value;
    DistanceBasis basis;
};

// The code spanned by a selection of Fourier rows.
class ClassicalCode {
   public:
    ClassicalCode(FourierMatrix matrix, RowSelection selection, std::optional<DistanceClaim> distance);

    const FourierMatrix &matrix() const {
        return matrix_;
    }
    const RowSelection &selection() const {
        return selection_;
    }
    const FieldPtr &field() const {
        return matrix_.field();
    }
    std::size_t length() const {
        return matrix_.length();
    }
    std::size_t dimension() const {
        return selection_.size();
    }
    const std::optional<DistanceClaim> &distance() const {
        return distance_;
    }
    bool is_mds() const {
        return distance_ && distance_->value == length() - dimension() + 1;
    }
    // Selected rows in selection order.
    Matrix generator() const;
    ClassicalCode with_distance(DistanceClaim claim) const;

   private:
    FourierMatrix matrix_;
    RowSelection selection_;
    std::optional<DistanceClaim> distance_;
};

// Consecutive and coprime-step arithmetic selections are MDS with distance
// n-r+1; arbitrary selections carry no distance until an oracle supplies one.
ClassicalCode code_from_rows(const FourierMatrix &matrix, const RowSelection &selection);

// {0..n-1} minus {(n-i) mod n : i in S}, ascending. These rows span C^perp.
std::vector<std::size_t> euclidean_dual_indices(const RowSelection &selection);
std::vector<std::size_t> euclidean_dual_indices(std::size_t n, std::span<const std::size_t> indices);

bool is_euclidean_dual_containing(const RowSelection &selection);
bool is_euclidean_dual_containing(std::size_t n, std::span<const std::size_t> indices);

// message x generator. Throws LengthMismatch unless |message| = r.
Vector encode(const ClassicalCode &code, std::span<const Field::Value> message);
std::vector<FieldElement> encode(const ClassicalCode &code, const std::vector<FieldElement> &message);

}  // namespace qmds

#endif
