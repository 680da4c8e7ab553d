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

#ifndef QMDS_VERIFY_H
#define QMDS_VERIFY_H

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qmds/code_oracles.h"
#include "qmds/css_builder.h"
#include "qmds/field.h"
#include "qmds/fourier_code.h"

namespace qmds {

enum class InnerProduct { euclidean, hermitian };

std::string_view inner_product_name(InnerProduct product);

// Everything the verifier is allowed to look at. Claimed distances and
// dual-containment flags never reach it.
struct CodeSubject {
    FieldPtr field;
    std::size_t n;
    Field::Value omega;
    std::vector<std::size_t> rows;
    InnerProduct product;

    static CodeSubject from_code(const ClassicalCode &code, InnerProduct product);
    std::string describe() const;
};

enum class VerificationLevel { fast, full };
enum class CheckOutcome { pass, fail, skipped };
enum class Verdict { pass, partial_pass, fail };

std::string_view check_outcome_name(CheckOutcome outcome);
std::string_view verdict_name(Verdict verdict);
// 0 pass, 1 fail, 2 pass with skipped checks.
int verdict_exit_code(Verdict verdict);

struct CheckResult {
    std::string name;
    std::string method;
    CheckOutcome outcome;
    std::uint64_t cost;
    std::string detail;
};

struct VerificationReport {
    std::string subject;
    // Sorted by name.
    std::vector<CheckResult> checks;
    Verdict verdict;
    // "verified", "not_mds", "by_theorem" or "unknown".
    std::string mds_status;
    std::optional<std::size_t> measured_distance;
    std::optional<std::size_t> measured_dimension;

    const CheckResult *find(std::string_view name) const;
};

VerificationReport verify_classical(
    const CodeSubject &subject, VerificationLevel level, const OracleBounds &bounds = {});
VerificationReport verify_classical(
    const ClassicalCode &code, InnerProduct product, VerificationLevel level, const OracleBounds &bounds = {});

// Throws BrokenProvenance when the record has no source code or its
// parameters do not follow from it.
VerificationReport verify_quantum(
    const QuantumCodeParams &params, VerificationLevel level, const OracleBounds &bounds = {});

// Step s with gcd(s, n) = 1 such that rows form {a, a+s, ..., a+(r-1)s}
// mod n, if any.
std::optional<std::size_t> detect_arithmetic_step(std::size_t n, const std::vector<std::size_t> &rows);

}  // namespace qmds

#endif
