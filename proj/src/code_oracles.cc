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

#include "qmds/code_oracles.h"

#include <algorithm>
#include <limits>

#include "qmds/error.h"
#include "qmds/number_theory.h"

namespace qmds {

namespace {

constexpr std::uint64_t kSaturated = std::numeric_limits<std::uint64_t>::max();

std::size_t weight(std::span<const Field::Value> v) {
    return static_cast<std::size_t>(std::count_if(v.begin(), v.end(), [](Field::Value x) { return x != 0; }));
}

void require_enumeration_budget(std::uint64_t q, std::size_t r, const OracleBounds &bounds) {
    std::uint64_t cost = enumeration_cost(q, r);
    if (cost > bounds.max_enumeration) {
        throw Error(
            ErrorKind::OracleBoundExceeded,
            "enumeration needs q^r = " + (cost == kSaturated ? std::string("overflow") : std::to_string(cost)) +
                " codewords, bound " + std::to_string(bounds.max_enumeration));
    }
}

void require_minor_budget(std::size_t n, std::size_t r, const OracleBounds &bounds) {
    std::uint64_t subsets = binomial_saturated(n, r, kSaturated);
    std::uint64_t ops = minor_check_cost(n, r);
    if (subsets > bounds.max_minor_subsets || ops > bounds.max_minor_field_ops) {
        throw Error(
            ErrorKind::OracleBoundExceeded,
            "minor check needs C(n,r) = " + std::to_string(subsets) + " minors (" +
                (ops == kSaturated ? std::string("overflow") : std::to_string(ops)) + " field ops), bounds " +
                std::to_string(bounds.max_minor_subsets) + " / " + std::to_string(bounds.max_minor_field_ops));
    }
}

// Nonzero determinant test for the square matrix held in `work` (destroyed).
bool nonsingular(const Field &f, std::vector<Field::Value> &work, std::size_t r) {
    for (std::size_t col = 0; col < r; col++) {
        std::size_t pivot = col;
        while (pivot < r && work[pivot * r + col] == 0) {
            pivot++;
        }
        if (pivot == r) {
            return false;
        }
        if (pivot != col) {
            std::swap_ranges(work.begin() + pivot * r, work.begin() + pivot * r + r, work.begin() + col * r);
        }
        Field::Value inv = f.inv(work[col * r + col]);
        for (std::size_t i = col + 1; i < r; i++) {
            Field::Value factor = work[i * r + col];
            if (factor == 0) {
                continue;
            }
            factor = f.mul(factor, inv);
            for (std::size_t j = col; j < r; j++) {
                work[i * r + j] = f.sub(work[i * r + j], f.mul(factor, work[col * r + j]));
            }
        }
    }
    return true;
}

std::size_t submatrix_rank(const Field &f, const Matrix &g, const std::vector<std::size_t> &cols,
                           std::vector<Field::Value> &work) {
    const std::size_t r = g.rows();
    const std::size_t z = cols.size();
    work.resize(r * z);
    for (std::size_t i = 0; i < r; i++) {
        for (std::size_t k = 0; k < z; k++) {
            work[i * z + k] = g.at(i, cols[k]);
        }
    }
    std::size_t rank = 0;
    for (std::size_t col = 0; col < z && rank < r; col++) {
        std::size_t pivot = rank;
        while (pivot < r && work[pivot * z + col] == 0) {
            pivot++;
        }
        if (pivot == r) {
            continue;
        }
        if (pivot != rank) {
            std::swap_ranges(work.begin() + pivot * z, work.begin() + pivot * z + z, work.begin() + rank * z);
        }
        Field::Value inv = f.inv(work[rank * z + col]);
        for (std::size_t i = rank + 1; i < r; i++) {
            Field::Value factor = work[i * z + col];
            if (factor == 0) {
                continue;
            }
            factor = f.mul(factor, inv);
            for (std::size_t j = col; j < z; j++) {
                work[i * z + j] = f.sub(work[i * z + j], f.mul(factor, work[rank * z + j]));
            }
        }
        rank++;
    }
    return rank;
}

}  // namespace

std::string_view distance_strategy_name(DistanceStrategy strategy) {
    switch (strategy) {
        case DistanceStrategy::enumeration: return "enumeration";
        case DistanceStrategy::minors: return "minors";
        case DistanceStrategy::automatic: return "automatic";
    }
    return "automatic";
}

std::uint64_t enumeration_cost(std::uint64_t q, std::size_t r) {
    return checked_pow(q, r, kSaturated - 1).value_or(kSaturated);
}

std::uint64_t minor_check_cost(std::size_t n, std::size_t r) {
    std::uint64_t subsets = binomial_saturated(n, r, kSaturated);
    unsigned __int128 ops = static_cast<unsigned __int128>(subsets) * r * r * r;
    return ops >= kSaturated ? kSaturated : static_cast<std::uint64_t>(ops);
}

std::size_t min_distance_by_enumeration(const Matrix &generator, const OracleBounds &bounds) {
    const Field &f = *generator.field();
    const std::uint64_t q = f.order();
    const std::size_t r = generator.rows();
    const std::size_t n = generator.cols();
    if (r == 0) {
        throw Error(ErrorKind::InvalidArgument, "the zero code has no minimum distance");
    }
    require_enumeration_budget(q, r, bounds);

    std::size_t best = n;
    Vector codeword(n);
    // step[i][a] = (a+1)g_i - a g_i, with a = q-1 wrapping back to 0.
    std::vector<std::vector<Vector>> step(r);
    for (std::size_t lead = 0; lead < r; lead++) {
        auto lead_row = generator.row(lead);
        best = std::min(best, weight(lead_row));
        if (lead + 1 == r) {
            break;
        }
        auto &s = step[lead + 1];
        if (s.empty()) {
            // Build once per trailing row; later leads reuse it.
            for (std::size_t i = lead + 1; i < r; i++) {
                auto g = generator.row(i);
                step[i].assign(q, Vector(n));
                for (std::uint64_t a = 0; a < q; a++) {
                    Field::Value next = static_cast<Field::Value>((a + 1) % q);
                    for (std::size_t j = 0; j < n; j++) {
                        step[i][a][j] = f.sub(f.mul(next, g[j]), f.mul(static_cast<Field::Value>(a), g[j]));
                    }
                }
            }
        }
        // Messages (0, ..., 0, 1, m_{lead+1}, ..., m_{r-1}) in mixed-radix order.
        std::copy(lead_row.begin(), lead_row.end(), codeword.begin());
        std::vector<std::uint64_t> digits(r, 0);
        while (true) {
            std::size_t pos = r - 1;
            while (true) {
                const Vector &delta = step[pos][digits[pos]];
                for (std::size_t j = 0; j < n; j++) {
                    codeword[j] = f.add(codeword[j], delta[j]);
                }
                digits[pos] = (digits[pos] + 1) % q;
                if (digits[pos] != 0 || pos == lead + 1) {
                    break;
                }
                pos--;
            }
            if (pos == lead + 1 && digits[pos] == 0) {
                break;
            }
            best = std::min(best, weight(codeword));
        }
    }
    return best;
}

bool is_mds_by_minors(const Matrix &generator, const OracleBounds &bounds) {
    const Field &f = *generator.field();
    const std::size_t r = generator.rows();
    const std::size_t n = generator.cols();
    if (r == 0 || r > n) {
        throw Error(ErrorKind::InvalidArgument, "minor check needs 1 <= r <= n");
    }
    require_minor_budget(n, r, bounds);
    std::vector<std::size_t> cols(r);
    for (std::size_t k = 0; k < r; k++) {
        cols[k] = k;
    }
    std::vector<Field::Value> work(r * r);
    while (true) {
        for (std::size_t i = 0; i < r; i++) {
            for (std::size_t k = 0; k < r; k++) {
                work[i * r + k] = generator.at(i, cols[k]);
            }
        }
        if (!nonsingular(f, work, r)) {
            return false;
        }
        // Next r-subset in lexicographic order.
        std::size_t k = r;
        while (k > 0 && cols[k - 1] == n - r + (k - 1)) {
            k--;
        }
        if (k == 0) {
            return true;
        }
        cols[k - 1]++;
        for (std::size_t t = k; t < r; t++) {
            cols[t] = cols[t - 1] + 1;
        }
    }
}

std::uint64_t column_rank_cost(std::size_t n, std::size_t r) {
    std::uint64_t total = 0;
    for (std::size_t w = 1; w + r <= n; w++) {
        std::uint64_t c = binomial_saturated(n, w, kSaturated);
        if (c == kSaturated || total > kSaturated - c) {
            return kSaturated;
        }
        total += c;
    }
    return total;
}

std::size_t min_distance_by_column_ranks(const Matrix &generator, const OracleBounds &bounds) {
    const Field &f = *generator.field();
    const std::size_t r = generator.rows();
    const std::size_t n = generator.cols();
    if (r == 0 || r > n) {
        throw Error(ErrorKind::InvalidArgument, "column-rank oracle needs 1 <= r <= n");
    }
    std::uint64_t cost = column_rank_cost(n, r);
    if (cost > bounds.max_minor_subsets) {
        throw Error(ErrorKind::OracleBoundExceeded,
                    "column-rank oracle needs " + (cost == kSaturated ? std::string("overflow") : std::to_string(cost)) +
                        " column subsets, bound " + std::to_string(bounds.max_minor_subsets));
    }
    std::vector<Field::Value> work;
    // A codeword of weight <= w vanishes on some n - w columns, so those
    // columns have rank < r.
    for (std::size_t w = 1; w + r <= n; w++) {
        const std::size_t z = n - w;
        std::vector<std::size_t> cols(z);
        for (std::size_t k = 0; k < z; k++) {
            cols[k] = k;
        }
        while (true) {
            if (submatrix_rank(f, generator, cols, work) < r) {
                return w;
            }
            std::size_t k = z;
            while (k > 0 && cols[k - 1] == n - z + (k - 1)) {
                k--;
            }
            if (k == 0) {
                break;
            }
            cols[k - 1]++;
            for (std::size_t t = k; t < z; t++) {
                cols[t] = cols[t - 1] + 1;
            }
        }
    }
    return n - r + 1;
}

DistanceOracleResult min_distance_oracle(
    const Matrix &generator, DistanceStrategy strategy, const OracleBounds &bounds) {
    const std::size_t r = generator.rows();
    const std::size_t n = generator.cols();
    const std::uint64_t q = generator.field()->order();
    if (strategy == DistanceStrategy::automatic) {
        strategy = enumeration_cost(q, r) <= bounds.max_enumeration ? DistanceStrategy::enumeration
                                                                      : DistanceStrategy::minors;
    }
    if (strategy == DistanceStrategy::enumeration) {
        std::size_t d = min_distance_by_enumeration(generator, bounds);
        return {strategy, d, d == n - r + 1, enumeration_cost(q, r)};
    }
    bool mds = is_mds_by_minors(generator, bounds);
    std::optional<std::size_t> d;
    std::uint64_t cost = minor_check_cost(n, r);
    if (mds) {
        d = n - r + 1;
    } else if (column_rank_cost(n, r) <= bounds.max_minor_subsets) {
        d = min_distance_by_column_ranks(generator, bounds);
        cost += column_rank_cost(n, r);
    }
    return {strategy, d, mds, cost};
}

DistanceOracleResult min_distance_oracle(
    const ClassicalCode &code, DistanceStrategy strategy, const OracleBounds &bounds) {
    return min_distance_oracle(code.generator(), strategy, bounds);
}

Matrix dual_basis_oracle(const ClassicalCode &code, const OracleBounds &bounds) {
    if (code.length() > bounds.max_elimination_length) {
        throw Error(
            ErrorKind::OracleBoundExceeded, "nullspace oracle limited to n <= " +
                                                std::to_string(bounds.max_elimination_length) + ", got n = " +
                                                std::to_string(code.length()));
    }
    return nullspace(code.generator());
}

}  // namespace qmds
