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

#include "qmds/hermitian_family.h"

#include "qmds/error.h"
#include "qmds/number_theory.h"

namespace qmds {

bool hermitian_window_dual_containing(std::uint64_t n, std::uint64_t l, std::uint64_t start) {
    // Window W misses l - 2 rows. C^perp_H is inside W iff each missing row j
    // pairs with a selected row, i.e. -j*l mod n lies in W.
    const std::uint64_t gap = l - 2;
    const std::uint64_t gap_start = (start % n + (n - gap)) % n;
    for (std::uint64_t t = 0; t < gap; t++) {
        std::uint64_t j = (gap_start + t) % n;
        std::uint64_t i = (n - mul_mod(j, l % n, n)) % n;
        std::uint64_t offset = (i + n - gap_start) % n;
        if (offset < gap) {
            return false;
        }
    }
    return true;
}

FamilyRecipe hermitian_family(std::uint64_t p, unsigned s, const FamilyOptions &options) {
    if (!is_prime(p)) {
        throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    }
    if (s == 0) {
        throw Error(ErrorKind::InvalidArgument, "family parameter s must be at least 1");
    }
    auto q = checked_pow(p, 2 * static_cast<std::uint64_t>(s), std::uint64_t{1} << 62);
    if (!q) {
        throw Error(ErrorKind::InvalidArgument,
                    std::to_string(p) + "^" + std::to_string(2 * s) + " is too large to represent");
    }
    FamilyRecipe out{};
    out.p = p;
    out.s = s;
    out.l = *checked_pow(p, s, *q);
    out.q = *q;
    out.n = *q - 1;
    out.window_start = options.window_start % out.n;
    out.window_count = out.n - out.l + 2;
    out.classical_r = out.window_count;
    out.classical_d = out.l - 1;
    out.quantum_k = 2 * out.classical_r - out.n;
    out.quantum_d = out.l - 1;
    out.rate = Rational(static_cast<std::int64_t>(out.quantum_k), static_cast<std::int64_t>(out.n));

    if (!hermitian_window_dual_containing(out.n, out.l, out.window_start)) {
        throw Error(ErrorKind::NotDualContaining,
                    "window starting at row " + std::to_string(out.window_start) +
                        " does not contain its Hermitian dual");
    }

    if (options.materialize) {
        if (out.q > options.max_order) {
            throw Error(ErrorKind::SizeExceeded, "GF(" + std::to_string(out.q) + ") exceeds materialization bound " +
                                                     std::to_string(options.max_order));
        }
        auto field = Field::create(p, 2 * s, options.max_order);
        auto matrix = fourier_matrix(field, out.n);
        auto ctx = HermitianContext::from_matrix(matrix);
        auto selection = RowSelection::consecutive(out.n, out.window_count, out.window_start);
        out.code = css_from_hermitian(code_from_rows(matrix, selection), ctx);
    }
    return out;
}

}  // namespace qmds
