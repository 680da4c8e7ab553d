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

#ifndef QMDS_CSS_BUILDER_H
#define QMDS_CSS_BUILDER_H

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>

#include "qmds/field.h"
#include "qmds/fourier_code.h"
#include "qmds/hermitian_dual.h"

namespace qmds {

enum class CssConstruction { euclidean, hermitian };

std::string_view css_construction_name(CssConstruction construction);

// An [[n, k, >= d_lower]]_q stabilizer code produced by CSS.
struct QuantumCodeParams {
    std::size_t n;
    std::size_t k;
    std::size_t d_lower;
    FieldPtr field;
    CssConstruction construction;
    // Set when 2 d_lower = n - k + 2 and the source code is MDS.
    bool mds;
    // The dual-containing classical code the record was derived from.
    std::optional<ClassicalCode> source;
    // Conjugation exponent for Hermitian records, 0 otherwise.
    std::uint64_t hermitian_l = 0;

    // "[[n,k,d]]_q".
    std::string display() const;
};

struct SingletonCheck {
    bool satisfied;
    bool saturated;
};

SingletonCheck check_quantum_singleton(std::size_t n, std::size_t k, std::size_t d);
SingletonCheck check_quantum_singleton(const QuantumCodeParams &params);

// Throws NotDualContaining, UnknownDistance, InvalidArgument (k = 0) or
// SingletonViolation.
QuantumCodeParams css_from_euclidean(const ClassicalCode &code);
QuantumCodeParams css_from_hermitian(const ClassicalCode &code, const HermitianContext &ctx);

}  // namespace qmds

#endif
