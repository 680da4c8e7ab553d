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

#ifndef QMDS_CODE_ORACLES_H
#define QMDS_CODE_ORACLES_H

#include <cstdint>
#include <optional>
#include <string_view>

#include "qmds/fourier_code.h"
#include "qmds/linear_algebra.h"

namespace qmds {

// Work limits for the brute-force oracles. Exceeding one raises
// OracleBoundExceeded (or, inside the verifier, records a skipped check).
struct OracleBounds {
    // q^r codewords for exhaustive enumeration.
    std::uint64_t max_enumeration = std::uint64_t{1} << 24;
    // C(n, r) square submatrices for the all-minors MDS test.
    std::uint64_t max_minor_subsets = std::uint64_t{1} << 20;
    // C(n, r) * r^3 field operations for the all-minors MDS test.
    std::uint64_t max_minor_field_ops = std::uint64_t{1} << 34;
    // Largest n handed to Gaussian elimination.
    std::size_t max_elimination_length = 256;
};

enum class DistanceStrategy { enumeration, minors, automatic };

std::string_view distance_strategy_name(DistanceStrategy strategy);

struct DistanceOracleResult {
    DistanceStrategy strategy;
    // Exact minimum distance. Always set by enumeration. The minor check
    // sets it to n-r+1 for MDS codes and otherwise falls back to the
    // column-rank oracle when that fits the subset bound.
    std::optional<std::size_t> distance;
    bool mds;
    std::uint64_t cost;
};

// q^r, saturated at UINT64_MAX.
std::uint64_t enumeration_cost(std::uint64_t q, std::size_t r);
// C(n, r) * r^3, saturated at UINT64_MAX.
std::uint64_t minor_check_cost(std::size_t n, std::size_t r);

// Minimum Hamming weight over all nonzero codewords of the row space of
// `generator` (assumed full rank). Codewords are visited once per
// projective point, i.e. messages whose first nonzero symbol is 1; scalar
// multiples share a weight.
std::size_t min_distance_by_enumeration(const Matrix &generator, const OracleBounds &bounds = {});

// Sum of C(n, w) for 1 <= w <= n - r, saturated at UINT64_MAX.
std::uint64_t column_rank_cost(std::size_t n, std::size_t r);

// Exact minimum distance as the least w such that some n - w columns of
// the generator have rank below r. Bounded by max_minor_subsets.
std::size_t min_distance_by_column_ranks(const Matrix &generator, const OracleBounds &bounds = {});

// True iff every r x r column submatrix of `generator` is nonsingular.
bool is_mds_by_minors(const Matrix &generator, const OracleBounds &bounds = {});

DistanceOracleResult min_distance_oracle(
    const Matrix &generator, DistanceStrategy strategy = DistanceStrategy::automatic,
    const OracleBounds &bounds = {});
DistanceOracleResult min_distance_oracle(
    const ClassicalCode &code, DistanceStrategy strategy = DistanceStrategy::automatic,
    const OracleBounds &bounds = {});

// C^perp by Gaussian elimination on the generator, independent of the
// row-exclusion rule.
Matrix dual_basis_oracle(const ClassicalCode &code, const OracleBounds &bounds = {});

}  // namespace qmds

#endif
