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

#include "qmds/css_builder.h"

#include "qmds/error.h"

namespace qmds {

namespace {

QuantumCodeParams assemble(const ClassicalCode &code, CssConstruction construction, std::uint64_t l) {
    if (!code.distance()) {
        throw Error(ErrorKind::UnknownDistance,
                    "classical code has no theorem-backed or verified distance; refusing to emit a bound");
    }
    const std::size_t n = code.length();
    const std::size_t r = code.dimension();
    if (2 * r <= n) {
        throw Error(ErrorKind::InvalidArgument,
                    "CSS dimension 2r - n = " + std::to_string(static_cast<long long>(2 * r) - static_cast<long long>(n)) +
                        " is not positive");
    }
    QuantumCodeParams out{n, 2 * r - n, code.distance()->value, code.field(), construction, false, code, l};
    auto singleton = check_quantum_singleton(out);
    if (!singleton.satisfied) {
        throw Error(ErrorKind::SingletonViolation, out.display() + " violates 2d <= n - k + 2");
    }
    out.mds = singleton.saturated && code.is_mds();
    return out;
}

}  // namespace

std::string_view css_construction_name(CssConstruction construction) {
    return construction == CssConstruction::euclidean ? "euclidean-css" : "hermitian-css";
}

std::string QuantumCodeParams::display() const {
    std::string out = "[[" + std::to_string(n) + "," + std::to_string(k) + "," + std::to_string(d_lower) + "]]";
    if (field) {
        out += "_" + std::to_string(field->order());
    }
    return out;
}

SingletonCheck check_quantum_singleton(std::size_t n, std::size_t k, std::size_t d) {
    if (k > n) {
        return {false, false};
    }
    const std::size_t bound = n - k + 2;
    return {2 * d <= bound, 2 * d == bound};
}

SingletonCheck check_quantum_singleton(const QuantumCodeParams &params) {
    return check_quantum_singleton(params.n, params.k, params.d_lower);
}

QuantumCodeParams css_from_euclidean(const ClassicalCode &code) {
    if (!is_euclidean_dual_containing(code.selection())) {
        throw Error(ErrorKind::NotDualContaining, "code does not contain its Euclidean dual");
    }
    return assemble(code, CssConstruction::euclidean, 0);
}

QuantumCodeParams css_from_hermitian(const ClassicalCode &code, const HermitianContext &ctx) {
    if (ctx.length() != code.length()) {
        throw Error(ErrorKind::LengthMismatch, "Hermitian context length differs from code length");
    }
    if (!is_hermitian_dual_containing(code.selection().indices(), ctx)) {
        throw Error(ErrorKind::NotDualContaining, "code does not contain its Hermitian dual");
    }
    return assemble(code, CssConstruction::hermitian, ctx.conjugation_exponent());
}

}  // namespace qmds
