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

#include "qmds/verify.h"

#include <algorithm>
#include <numeric>

#include "qmds/error.h"
#include "qmds/linear_algebra.h"
#include "qmds/number_theory.h"

namespace qmds {

namespace {

std::uint64_t cube(std::uint64_t x) {
    return x * x * x;
}

Matrix build_generator(const CodeSubject &s) {
    const Field &f = *s.field;
    Matrix g(s.field, s.rows.size(), s.n);
    for (std::size_t a = 0; a < s.rows.size(); a++) {
        Field::Value step = f.pow(s.omega, s.rows[a]);
        Field::Value x = f.one();
        auto row = g.row(a);
        for (std::size_t j = 0; j < s.n; j++) {
            row[j] = x;
            x = f.mul(x, step);
        }
    }
    return g;
}

Matrix fourier_rows(const CodeSubject &s, const std::vector<std::size_t> &indices) {
    CodeSubject t = s;
    t.rows = indices;
    return build_generator(t);
}

std::uint64_t conjugation_exponent(const Field &f) {
    std::uint64_t l = 1;
    for (unsigned k = 0; k < f.degree() / 2; k++) {
        l *= f.characteristic();
    }
    return l;
}

Field::Value pairing(const Field &f, InnerProduct product, std::uint64_t l, std::span<const Field::Value> u,
                     std::span<const Field::Value> v) {
    Field::Value acc = 0;
    for (std::size_t i = 0; i < u.size(); i++) {
        Field::Value y = product == InnerProduct::hermitian ? f.pow(v[i], l) : v[i];
        acc = f.add(acc, f.mul(u[i], y));
    }
    return acc;
}

void finalize(VerificationReport &report) {
    std::sort(report.checks.begin(), report.checks.end(),
              [](const CheckResult &a, const CheckResult &b) { return a.name < b.name; });
    bool failed = false;
    bool skipped = false;
    for (const auto &c : report.checks) {
        failed |= c.outcome == CheckOutcome::fail;
        skipped |= c.outcome == CheckOutcome::skipped;
    }
    report.verdict = failed ? Verdict::fail : skipped ? Verdict::partial_pass : Verdict::pass;
}

[[noreturn]] void broken(const std::string &message) {
    throw Error(ErrorKind::BrokenProvenance, message);
}

}  // namespace

std::string_view inner_product_name(InnerProduct product) {
    return product == InnerProduct::euclidean ? "euclidean" : "hermitian";
}

std::string_view check_outcome_name(CheckOutcome outcome) {
    switch (outcome) {
        case CheckOutcome::pass: return "pass";
        case CheckOutcome::fail: return "fail";
        case CheckOutcome::skipped: return "skipped";
    }
    return "skipped";
}

std::string_view verdict_name(Verdict verdict) {
    switch (verdict) {
        case Verdict::pass: return "pass";
        case Verdict::partial_pass: return "partial_pass";
        case Verdict::fail: return "fail";
    }
    return "fail";
}

int verdict_exit_code(Verdict verdict) {
    switch (verdict) {
        case Verdict::pass: return 0;
        case Verdict::fail: return 1;
        case Verdict::partial_pass: return 2;
    }
    return 1;
}

const CheckResult *VerificationReport::find(std::string_view name) const {
    for (const auto &c : checks) {
        if (c.name == name) {
            return &c;
        }
    }
    return nullptr;
}

CodeSubject CodeSubject::from_code(const ClassicalCode &code, InnerProduct product) {
    return {code.field(), code.length(), code.matrix().omega().value(), code.selection().indices(), product};
}

std::string CodeSubject::describe() const {
    return "[" + std::to_string(n) + "," + std::to_string(rows.size()) + "] over " + field->to_string() +
           ", omega = " + field->format(omega) + ", " + std::string(inner_product_name(product));
}

std::optional<std::size_t> detect_arithmetic_step(std::size_t n, const std::vector<std::size_t> &rows) {
    const std::size_t r = rows.size();
    if (r == 0 || n == 0) {
        return std::nullopt;
    }
    if (r == 1 || r == n) {
        return 1;
    }
    std::vector<bool> member(n, false);
    for (auto i : rows) {
        member[i % n] = true;
    }
    for (std::size_t s = 1; s < n; s++) {
        if (std::gcd(s, n) != 1) {
            continue;
        }
        // An arithmetic run of length r < n has exactly one element whose
        // successor is missing.
        std::size_t ends = 0;
        for (auto i : rows) {
            if (!member[(i + s) % n] && ++ends > 1) {
                break;
            }
        }
        if (ends == 1) {
            return s;
        }
    }
    return std::nullopt;
}

VerificationReport verify_classical(const CodeSubject &s, VerificationLevel level, const OracleBounds &bounds) {
    VerificationReport report;
    report.subject = s.describe();
    report.mds_status = "unknown";
    const Field &f = *s.field;
    const std::size_t n = s.n;
    const std::size_t r = s.rows.size();

    // omega has multiplicative order exactly n.
    {
        std::size_t order = 0;
        Field::Value x = s.omega;
        for (std::size_t k = 1; k <= n; k++) {
            if (x == f.one()) {
                order = k;
                break;
            }
            x = f.mul(x, s.omega);
        }
        bool ok = order == n;
        report.checks.push_back({"omega-order", "repeated multiplication", ok ? CheckOutcome::pass : CheckOutcome::fail,
                                 n, "order " + (order ? std::to_string(order) : std::string("> n"))});
        if (!ok) {
            finalize(report);
            return report;
        }
    }

    Matrix g = build_generator(s);
    const std::uint64_t l = s.product == InnerProduct::hermitian ? conjugation_exponent(f) : 1;
    bool hermitian_ok = s.product == InnerProduct::euclidean || f.degree() % 2 == 0;

    if (n > bounds.max_elimination_length) {
        std::string why = "n = " + std::to_string(n) + " exceeds elimination bound " +
                          std::to_string(bounds.max_elimination_length);
        for (const char *name : {"generator-rank", "dual-exclusion-rule", "dual-orthogonality", "dual-containment"}) {
            report.checks.push_back({name, "gaussian elimination", CheckOutcome::skipped, 0, why});
        }
    } else if (!hermitian_ok) {
        report.checks.push_back({"dual-containment", "hermitian nullspace", CheckOutcome::fail, 0,
                                 f.to_string() + " has odd degree; no Hermitian product"});
    } else {
        std::size_t rk = rank(g);
        report.measured_dimension = rk;
        report.checks.push_back({"generator-rank", "gaussian elimination",
                                 rk == r ? CheckOutcome::pass : CheckOutcome::fail, cube(n),
                                 "rank " + std::to_string(rk) + " of " + std::to_string(r) + " rows"});

        // The dual: kernel of G (Euclidean) or of G^(l) (Hermitian).
        Matrix dual = s.product == InnerProduct::hermitian ? nullspace(entrywise_power(g, l)) : nullspace(g);

        std::vector<bool> excluded(n, false);
        std::uint64_t l_inv = 1;
        bool rule_applicable = true;
        if (s.product == InnerProduct::hermitian) {
            auto inv = inverse_mod(l % n, n);
            rule_applicable = inv.has_value();
            l_inv = inv.value_or(0);
        }
        if (rule_applicable) {
            for (auto i : s.rows) {
                excluded[(n - mul_mod(i % n, l_inv, n)) % n] = true;
            }
            std::vector<std::size_t> predicted;
            for (std::size_t j = 0; j < n; j++) {
                if (!excluded[j]) {
                    predicted.push_back(j);
                }
            }
            bool same = predicted.empty() ? dual.rows() == 0 : same_row_space(fourier_rows(s, predicted), dual);
            report.checks.push_back({"dual-exclusion-rule", "nullspace span comparison",
                                     same ? CheckOutcome::pass : CheckOutcome::fail, cube(n),
                                     "predicted " + std::to_string(predicted.size()) + " rows, nullspace dimension " +
                                         std::to_string(dual.rows())});
        } else {
            report.checks.push_back({"dual-exclusion-rule", "nullspace span comparison", CheckOutcome::skipped, 0,
                                     "l is not invertible mod n"});
        }

        bool orthogonal = true;
        std::uint64_t pairs = 0;
        for (std::size_t a = 0; a < g.rows() && orthogonal; a++) {
            for (std::size_t b = 0; b < dual.rows(); b++) {
                pairs++;
                if (pairing(f, s.product, l, g.row(a), dual.row(b)) != 0) {
                    orthogonal = false;
                    break;
                }
            }
        }
        report.checks.push_back({"dual-orthogonality", "direct inner products",
                                 orthogonal ? CheckOutcome::pass : CheckOutcome::fail, pairs * n,
                                 std::to_string(pairs) + " generator/dual pairs"});

        bool contained = dual.rows() == 0 || rank(stack(g, dual)) == rk;
        report.checks.push_back({"dual-containment", "rank of stacked bases",
                                 contained ? CheckOutcome::pass : CheckOutcome::fail, cube(n),
                                 contained ? "dual lies in the code" : "dual not contained in the code"});
    }

    if (level == VerificationLevel::full) {
        DistanceStrategy strategy = enumeration_cost(f.order(), r) <= bounds.max_enumeration
                                        ? DistanceStrategy::enumeration
                                        : DistanceStrategy::minors;
        try {
            auto res = min_distance_oracle(g, strategy, bounds);
            report.measured_distance = res.distance;
            report.mds_status = res.mds ? "verified" : "not_mds";
            std::string detail = res.distance ? "distance " + std::to_string(*res.distance) : "singular minor found";
            report.checks.push_back({"distance", std::string(distance_strategy_name(res.strategy)),
                                     CheckOutcome::pass, res.cost, detail});
        } catch (const Error &e) {
            if (e.kind() != ErrorKind::OracleBoundExceeded) {
                throw;
            }
            report.checks.push_back({"distance", "bounded oracle", CheckOutcome::skipped, 0, e.what()});
        }
    }
    if (report.mds_status == "unknown" && detect_arithmetic_step(n, s.rows)) {
        report.mds_status = "by_theorem";
    }
    finalize(report);
    return report;
}

VerificationReport verify_classical(
    const ClassicalCode &code, InnerProduct product, VerificationLevel level, const OracleBounds &bounds) {
    return verify_classical(CodeSubject::from_code(code, product), level, bounds);
}

VerificationReport verify_quantum(const QuantumCodeParams &params, VerificationLevel level, const OracleBounds &bounds) {
    if ((params.n + params.k) % 2 != 0) {
        broken("n + k = " + std::to_string(params.n + params.k) + " is odd");
    }
    if (!params.source) {
        broken("record has no source classical code");
    }
    const ClassicalCode &src = *params.source;
    if (src.length() != params.n) {
        broken("source length " + std::to_string(src.length()) + " != n = " + std::to_string(params.n));
    }
    if (2 * src.dimension() < params.n || 2 * src.dimension() - params.n != params.k) {
        broken("2r - n = " + std::to_string(2 * static_cast<long long>(src.dimension()) -
                                            static_cast<long long>(params.n)) +
               " != k = " + std::to_string(params.k));
    }
    if (params.field && !params.field->same_as(*src.field())) {
        broken("record field differs from source field");
    }
    InnerProduct product =
        params.construction == CssConstruction::hermitian ? InnerProduct::hermitian : InnerProduct::euclidean;
    VerificationReport report = verify_classical(CodeSubject::from_code(src, product), level, bounds);
    report.subject = params.display() + " from " + report.subject;

    report.checks.push_back({"quantum-dimension", "k = 2r - n", CheckOutcome::pass, 1,
                             "k = " + std::to_string(params.k)});
    report.checks.push_back({"quantum-parity", "n + k even", CheckOutcome::pass, 1,
                             "n + k = " + std::to_string(params.n + params.k)});
    auto singleton = check_quantum_singleton(params.n, params.k, params.d_lower);
    report.checks.push_back({"quantum-singleton", "2d <= n - k + 2",
                             singleton.satisfied ? CheckOutcome::pass : CheckOutcome::fail, 1,
                             singleton.saturated ? "saturated" : "not saturated"});
    if (report.measured_distance) {
        bool ok = *report.measured_distance >= params.d_lower;
        report.checks.push_back({"quantum-distance-bound", "classical distance >= d",
                                 ok ? CheckOutcome::pass : CheckOutcome::fail, 1,
                                 "classical distance " + std::to_string(*report.measured_distance)});
    } else if (report.mds_status == "not_mds") {
        report.checks.push_back({"quantum-distance-bound", "classical distance >= d", CheckOutcome::fail, 1,
                                 "classical code is not MDS"});
    }
    finalize(report);
    return report;
}

}  // namespace qmds
