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

#ifndef QMDS_HERMITIAN_FAMILY_H
#define QMDS_HERMITIAN_FAMILY_H

#include <cstdint>
#include <optional>

#include "qmds/css_builder.h"
#include "qmds/rational.h"

namespace qmds {

struct FamilyOptions {
    // First row of the consecutive window; must give a dual-containing window.
    std::uint64_t window_start = 0;
    bool materialize = false;
    // Largest field order built when materializing.
    std::uint64_t max_order = std::uint64_t{1} << 20;
};

// Over GF(l^2) with l = p^s and n = l^2 - 1: the window of n - l + 2
// consecutive rows of F_n gives [n, n-l+2, l-1], hence
// [[n, l^2 - 2l + 3, l - 1]] by Hermitian CSS.
struct FamilyRecipe {
    std::uint64_t p;
    unsigned s;
    std::uint64_t l;
    std::uint64_t q;
    std::uint64_t n;
    std::uint64_t window_start;
    std::uint64_t window_count;
    std::uint64_t classical_r;
    std::uint64_t classical_d;
    std::uint64_t quantum_k;
    std::uint64_t quantum_d;
    Rational rate;
    // Present only when materialized.
    std::optional<QuantumCodeParams> code;
};

// Throws NotPrime, InvalidArgument (s = 0 or overflow), NotDualContaining
// for a bad window start, SizeExceeded when materializing above max_order.
FamilyRecipe hermitian_family(std::uint64_t p, unsigned s, const FamilyOptions &options = {});

// True iff the window {start, ..., start + n - l + 1} (mod n) contains its
// Hermitian dual, using only the l - 2 rows outside it.
bool hermitian_window_dual_containing(std::uint64_t n, std::uint64_t l, std::uint64_t start);

}  // namespace qmds

#endif
