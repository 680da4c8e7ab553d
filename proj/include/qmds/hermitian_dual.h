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

#ifndef QMDS_HERMITIAN_DUAL_H
#define QMDS_HERMITIAN_DUAL_H

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "qmds/field.h"
#include "qmds/fourier_code.h"

namespace qmds {

// Hermitian product <u, v>_H = sum u_i v_i^l over GF(l^2), together with
// the row pairing of F_n it induces: <e_i, e_j>_H != 0 iff i + j*l = 0 mod n.
class HermitianContext {
   public:
    // The field of `matrix` must have even degree; l = p^(m/2).
    // Throws NotHermitianField or LNotInvertible.
    static HermitianContext from_matrix(const FourierMatrix &matrix);
    // Index-level context with no field attached.
    static HermitianContext from_parameters(std::size_t n, std::uint64_t l);

    std::size_t length() const {
        return n_;
    }
    std::uint64_t conjugation_exponent() const {
        return l_;
    }
    // l^-1 mod n.
    std::uint64_t l_inverse() const {
        return l_inverse_;
    }
    const std::optional<FourierMatrix> &matrix() const {
        return matrix_;
    }
    // Row j with <e_i, e_j>_H != 0, i.e. j = -i * l^-1 mod n.
    std::size_t partner(std::size_t i) const;

   private:
    HermitianContext(std::size_t n, std::uint64_t l, std::optional<FourierMatrix> matrix);

    std::size_t n_;
    std::uint64_t l_;
    std::uint64_t l_inverse_;
    std::optional<FourierMatrix> matrix_;
};

Field::Value hermitian_inner_product(
    const Field &field, std::uint64_t l, std::span<const Field::Value> u, std::span<const Field::Value> v);

// Requires a context with a field. Throws LengthMismatch / FieldMismatch.
FieldElement hermitian_inner_product(
    const std::vector<FieldElement> &u, const std::vector<FieldElement> &v, const HermitianContext &ctx);

// (i * l) mod n: the componentwise l-th power of e_i is e_{il}.
std::size_t row_conjugate_index(std::size_t i, const HermitianContext &ctx);

// {0..n-1} minus {-i l^-1 mod n : i in S}, ascending.
std::vector<std::size_t> hermitian_dual_indices(std::span<const std::size_t> indices, const HermitianContext &ctx);

// Rows with <e_i, e_i>_H != 0, i.e. i (1 + l) = 0 mod n.
std::vector<std::size_t> non_self_dual_rows(const HermitianContext &ctx);

bool is_hermitian_dual_containing(std::span<const std::size_t> indices, const HermitianContext &ctx);

struct HermitianContainment {
    bool dual_containing;
    std::vector<std::size_t> dual_indices;
    // Dual rows missing from the selection.
    std::vector<std::size_t> uncovered;
    // Non-self-dual rows missing from the selection; any such row rules
    // out dual containment.
    std::vector<std::size_t> missing_non_self_dual;
};

HermitianContainment diagnose_hermitian_containment(
    std::span<const std::size_t> indices, const HermitianContext &ctx);

}  // namespace qmds

#endif
