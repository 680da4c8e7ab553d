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

#include "gtest/gtest.h"
#include "qmds/error.h"
#include "qmds/hermitian_family.h"
#include "qmds/planner.h"
#include "test_util.test.h"

using namespace qmds;
using qmds_test::kind_of;

namespace {

ClassicalCode prefix(std::uint64_t p, unsigned m, std::size_t n, std::size_t r) {
    return code_from_rows(fourier_matrix(field_create(p, m), n), RowSelection::consecutive(n, r));
}

CheckOutcome outcome(const VerificationReport &report, std::string_view name) {
    auto *c = report.find(name);
    if (!c) {
        throw std::runtime_error("missing check " + std::string(name));
    }
    return c->outcome;
}

}  // namespace

TEST(verify, ten_six_five_full) {
    auto report = verify_classical(prefix(11, 1, 10, 6), InnerProduct::euclidean, VerificationLevel::full);
    ASSERT_EQ(report.verdict, Verdict::pass);
    ASSERT_EQ(report.measured_distance, std::optional<std::size_t>(5));
    ASSERT_EQ(report.measured_dimension, std::optional<std::size_t>(6));
    ASSERT_EQ(report.mds_status, "verified");
    for (auto name : {"omega-order", "generator-rank", "dual-exclusion-rule", "dual-orthogonality", "dual-containment",
                      "distance"}) {
        ASSERT_EQ(outcome(report, name), CheckOutcome::pass) << name;
    }
    ASSERT_EQ(report.find("distance")->method, "enumeration");
    ASSERT_TRUE(std::is_sorted(report.checks.begin(), report.checks.end(),
                               [](auto &a, auto &b) { return a.name < b.name; }));
}

TEST(verify, fast_level_has_no_distance) {
    auto report = verify_classical(prefix(11, 1, 10, 6), InnerProduct::euclidean, VerificationLevel::fast);
    ASSERT_EQ(report.verdict, Verdict::pass);
    ASSERT_EQ(report.find("distance"), nullptr);
    ASSERT_EQ(report.mds_status, "by_theorem");
}

TEST(verify, code_t_fails_containment) {
    auto report = verify_classical(prefix(11, 1, 10, 5), InnerProduct::euclidean, VerificationLevel::full);
    ASSERT_EQ(report.verdict, Verdict::fail);
    ASSERT_EQ(outcome(report, "dual-containment"), CheckOutcome::fail);
    ASSERT_EQ(outcome(report, "dual-exclusion-rule"), CheckOutcome::pass);
    ASSERT_EQ(verdict_exit_code(report.verdict), 1);
}

TEST(verify, hermitian_fifteen_thirteen) {
    auto report = verify_classical(prefix(2, 4, 15, 13), InnerProduct::hermitian, VerificationLevel::full);
    ASSERT_EQ(report.verdict, Verdict::pass);
    ASSERT_EQ(report.find("distance")->method, "minors");
    ASSERT_EQ(report.mds_status, "verified");
    ASSERT_EQ(report.measured_distance, std::optional<std::size_t>(3));
    auto euclid = verify_classical(prefix(2, 4, 15, 12), InnerProduct::hermitian, VerificationLevel::fast);
    ASSERT_EQ(euclid.verdict, Verdict::fail);
    auto odd = verify_classical(prefix(2, 3, 7, 5), InnerProduct::hermitian, VerificationLevel::fast);
    ASSERT_EQ(odd.verdict, Verdict::fail);
}

TEST(verify, hermitian_code_d_not_mds) {
    auto m = fourier_matrix(field_create(2, 4), 15);
    auto d = code_from_rows(m, RowSelection::arbitrary(15, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 12}));
    auto report = verify_classical(d, InnerProduct::hermitian, VerificationLevel::full);
    ASSERT_EQ(report.verdict, Verdict::pass);
    ASSERT_EQ(report.mds_status, "not_mds");
    ASSERT_EQ(report.measured_distance, std::optional<std::size_t>(3));
}

TEST(verify, subject_independent_of_claims) {
    auto f = field_create(11, 1);
    CodeSubject s{f, 10, f->from_integer(2), {0, 1, 2, 3, 4, 5}, InnerProduct::euclidean};
    auto report = verify_classical(s, VerificationLevel::full);
    ASSERT_EQ(report.verdict, Verdict::pass);
    s.omega = f->from_integer(3);
    auto bad = verify_classical(s, VerificationLevel::full);
    ASSERT_EQ(bad.verdict, Verdict::fail);
    ASSERT_EQ(outcome(bad, "omega-order"), CheckOutcome::fail);
}

TEST(verify, skipped_checks_give_partial_pass) {
    OracleBounds tight;
    tight.max_enumeration = 10;
    tight.max_minor_subsets = 10;
    auto report = verify_classical(prefix(11, 1, 10, 6), InnerProduct::euclidean, VerificationLevel::full, tight);
    ASSERT_EQ(report.verdict, Verdict::partial_pass);
    ASSERT_EQ(outcome(report, "distance"), CheckOutcome::skipped);
    ASSERT_EQ(report.mds_status, "by_theorem");
    ASSERT_EQ(verdict_exit_code(report.verdict), 2);
    ASSERT_EQ(verdict_exit_code(Verdict::pass), 0);
    tight.max_elimination_length = 8;
    auto big = verify_classical(prefix(11, 1, 10, 6), InnerProduct::euclidean, VerificationLevel::fast, tight);
    ASSERT_EQ(big.verdict, Verdict::partial_pass);
    ASSERT_EQ(outcome(big, "dual-containment"), CheckOutcome::skipped);
}

TEST(verify, arithmetic_step_detection) {
    ASSERT_EQ(detect_arithmetic_step(10, {0, 3, 6, 9}), std::optional<std::size_t>(3));
    ASSERT_EQ(detect_arithmetic_step(10, {0, 1, 2}), std::optional<std::size_t>(1));
    ASSERT_EQ(detect_arithmetic_step(10, {0, 2, 4}), std::nullopt);
    ASSERT_EQ(detect_arithmetic_step(10, {0, 1, 3}), std::nullopt);
    ASSERT_TRUE(detect_arithmetic_step(15, {6, 7, 8, 9, 10, 11, 0}).has_value() == false);
}

TEST(verify, quantum_examples) {
    auto q = css_from_euclidean(prefix(11, 1, 10, 6));
    auto report = verify_quantum(q, VerificationLevel::full);
    ASSERT_EQ(report.verdict, Verdict::pass);
    ASSERT_EQ(report.find("quantum-singleton")->detail, "saturated");
    ASSERT_EQ(outcome(report, "quantum-distance-bound"), CheckOutcome::pass);

    auto q40 = css_from_euclidean(prefix(41, 1, 40, 28));
    ASSERT_EQ(q40.display(), "[[40,16,13]]_41");
    ASSERT_EQ(verify_quantum(q40, VerificationLevel::fast).verdict, Verdict::pass);
    auto full40 = verify_quantum(q40, VerificationLevel::full);
    ASSERT_EQ(full40.verdict, Verdict::partial_pass);
    ASSERT_EQ(full40.mds_status, "by_theorem");
}

TEST(verify, broken_provenance) {
    auto q = css_from_euclidean(prefix(11, 1, 10, 6));
    auto tampered = q;
    tampered.k = 3;
    ASSERT_EQ(kind_of([&] { verify_quantum(tampered, VerificationLevel::fast); }), ErrorKind::BrokenProvenance);
    tampered = q;
    tampered.k = 4;
    ASSERT_EQ(kind_of([&] { verify_quantum(tampered, VerificationLevel::fast); }), ErrorKind::BrokenProvenance);
    tampered = q;
    tampered.source.reset();
    ASSERT_EQ(kind_of([&] { verify_quantum(tampered, VerificationLevel::fast); }), ErrorKind::BrokenProvenance);
    tampered = q;
    tampered.n = 12;
    ASSERT_EQ(kind_of([&] { verify_quantum(tampered, VerificationLevel::fast); }), ErrorKind::BrokenProvenance);
    tampered = q;
    tampered.field = field_create(13, 1);
    ASSERT_EQ(kind_of([&] { verify_quantum(tampered, VerificationLevel::fast); }), ErrorKind::BrokenProvenance);
    tampered = q;
    tampered.d_lower = 6;
    auto report = verify_quantum(tampered, VerificationLevel::full);
    ASSERT_EQ(report.verdict, Verdict::fail);
    ASSERT_EQ(outcome(report, "quantum-singleton"), CheckOutcome::fail);
    ASSERT_EQ(outcome(report, "quantum-distance-bound"), CheckOutcome::fail);
}

// Every quantum code in the example corpus passes fast verification.
TEST(verify, corpus_fast_level) {
    std::vector<QuantumCodeParams> corpus;
    corpus.push_back(css_from_euclidean(prefix(11, 1, 10, 6)));
    corpus.push_back(css_from_euclidean(prefix(11, 1, 10, 8)));
    corpus.push_back(css_from_euclidean(prefix(2, 5, 31, 25)));
    corpus.push_back(css_from_euclidean(prefix(2, 8, 255, 245)));
    corpus.push_back(css_from_euclidean(prefix(41, 1, 40, 28)));
    for (auto [rate, d] : {std::pair{"3/4", 3u}, {"7/8", 7u}, {"15/16", 7u}, {"3/5", 11u}, {"4/7", 17u}}) {
        PlanRequest req;
        req.rate = parse_rational(rate);
        req.d_min = d;
        corpus.push_back(plan(req).quantum);
    }
    FamilyOptions opts;
    opts.materialize = true;
    for (auto [p, s] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 1u}, {3u, 2u}, {2u, 4u}}) {
        corpus.push_back(*hermitian_family(p, s, opts).code);
    }
    for (const auto &q : corpus) {
        auto report = verify_quantum(q, VerificationLevel::fast);
        ASSERT_EQ(report.verdict, Verdict::pass) << q.display();
    }
}

TEST(verify, corpus_large_lengths_fast_level) {
    OracleBounds bounds;
    bounds.max_elimination_length = 1024;
    std::vector<QuantumCodeParams> corpus;
    PlanRequest req;
    req.rate = Rational(15, 16);
    req.d_min = 15;
    corpus.push_back(plan(req).quantum);
    FamilyOptions opts;
    opts.materialize = true;
    for (auto [p, s] : {std::pair{5u, 2u}, {3u, 3u}}) {
        corpus.push_back(*hermitian_family(p, s, opts).code);
    }
    for (const auto &q : corpus) {
        auto skipped = verify_quantum(q, VerificationLevel::fast);
        ASSERT_EQ(skipped.verdict, Verdict::partial_pass) << q.display();
        auto report = verify_quantum(q, VerificationLevel::fast, bounds);
        ASSERT_EQ(report.verdict, Verdict::pass) << q.display();
    }
}
