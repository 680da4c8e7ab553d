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

#include "qmds/cli.h"

#include <cstdlib>
#include <fstream>
#include <sstream>

#include "gtest/gtest.h"
#include "qmds/error.h"
#include "test_util.test.h"

using namespace qmds;
using qmds_test::kind_of;

namespace {

struct GoldenCase {
    const char *name;
    std::vector<std::string> args;
    int exit_code;
};

const std::vector<GoldenCase> &golden_cases() {
    static const std::vector<GoldenCase> cases = {
        {"plan_3_4_d3_prime", {"plan", "--rate", "3/4", "--distance", "3", "--field", "prime", "--json"}, 0},
        {"plan_3_4_d3_char3", {"plan", "--rate", "3/4", "--distance", "3", "--field", "char:3"}, 0},
        {"plan_2_5_d11_prime", {"plan", "--rate", "2/5", "--distance", "11", "--json"}, 0},
        {"plan_7_8_d7_char5", {"plan", "--rate", "7/8", "-d", "7", "-p", "5", "--json"}, 0},
        {"plan_15_16_d15_prime", {"plan", "--rate", "15/16", "--distance", "15", "--field", "prime"}, 0},
        {"plan_3_5_d11_prime", {"plan", "--rate", "3/5", "--distance", "11", "--field", "prime", "--json"}, 0},
        {"plan_4_7_d17_prime", {"plan", "--rate", "4/7", "--distance", "17", "--field", "prime", "--json"}, 0},
        {"plan_1_2_d3_prime", {"plan", "--rate", "1/2", "--distance", "3", "--field", "prime"}, 0},
        {"plan_3_4_t1_smallest_verify", {"plan", "--rate", "3/4", "-t", "1", "--field", "smallest", "--verify", "full"}, 0},
        {"plan_bad_rate", {"plan", "--rate", "5/4", "--distance", "3", "--json"}, kExitError},
        {"build_gf11_consecutive6", {"build", "--field", "GF(11)", "--n", "10", "--consecutive", "6", "--json"}, 0},
        {"build_gf11_rows_0_7", {"build", "--field", "Z_11", "--n", "10", "--rows", "0..7"}, 0},
        {"build_gf11_consecutive5", {"build", "--field", "GF(11)", "--n", "10", "--consecutive", "5"}, 0},
        {"build_gf16_hermitian", {"build", "--field", "GF(16)", "--n", "15", "--consecutive", "13", "--hermitian", "--json"}, 0},
        {"build_gf16_code_d", {"build", "--field", "GF(2^4)", "--n", "15", "--rows", "0-9,12", "--hermitian"}, 0},
        {"build_gf11_arithmetic", {"build", "--field", "GF(11)", "--n", "10", "--rows", "0:3:8", "--generator"}, 0},
        {"build_gf4_char_divides", {"build", "--field", "GF(4)", "--n", "2", "--consecutive", "1"}, kExitError},
        {"build_bad_step", {"build", "--field", "GF(11)", "--n", "10", "--rows", "0:2:6", "--json"}, kExitError},
        {"verify_gf11_consecutive6", {"verify", "--field", "GF(11)", "--n", "10", "--consecutive", "6", "--json"}, 0},
        {"verify_gf11_code_t", {"verify", "--field", "GF(11)", "--n", "10", "--consecutive", "5"}, 1},
        {"verify_gf16_hermitian", {"verify", "--field", "GF(16)", "--n", "15", "--consecutive", "13", "--hermitian"}, 0},
        {"verify_gf41_partial", {"verify", "--field", "GF(41)", "--n", "40", "--consecutive", "28"}, 2},
        {"catalog_gf32", {"catalog", "--field", "GF(2^5)"}, 0},
        {"catalog_gf5", {"catalog", "--field", "GF(5)", "--json"}, 0},
        {"catalog_gf3", {"catalog", "--field", "GF(3)"}, 0},
        {"catalog_gf257_filtered", {"catalog", "--field", "GF(257)", "--min-k", "200", "--min-d", "12", "--json"}, 0},
        {"family_2_2", {"family", "--p", "2", "--s", "2", "--json"}, 0},
        {"family_5_2", {"family", "--p", "5", "--s", "2"}, 0},
        {"family_7_1_materialized", {"family", "--p", "7", "--s", "1", "--materialize", "--verify", "fast", "--json"}, 0},
        {"family_3_1_full", {"family", "--p", "3", "--s", "1", "--materialize", "--verify", "full"}, 0},
        {"family_not_prime", {"family", "--p", "4", "--s", "1"}, kExitError},
        {"ord_3_16", {"ord", "3", "16"}, 0},
        {"ord_5_193", {"ord", "5", "193"}, 0},
        {"ord_3_113", {"ord", "3", "113"}, 0},
        {"ord_not_coprime", {"ord", "2", "16"}, kExitError},
    };
    return cases;
}

std::string golden_path(const std::string &name) {
    return std::string(QMDS_GOLDEN_DIR) + "/" + name + ".txt";
}

std::string run(const std::vector<std::string> &args, int &code) {
    std::ostringstream out, err;
    code = run_cli(args, out, err);
    return out.str() + err.str();
}

}  // namespace

class CliGolden : public ::testing::TestWithParam<GoldenCase> {};

TEST_P(CliGolden, matches) {
    const auto &c = GetParam();
    int code = -1;
    auto text = run(c.args, code);
    EXPECT_EQ(code, c.exit_code);
    auto path = golden_path(c.name);
    if (std::getenv("QMDS_UPDATE_GOLDEN")) {
        std::ofstream(path) << text;
        return;
    }
    std::ifstream in(path);
    ASSERT_TRUE(in.good()) << "missing golden " << path;
    std::stringstream expected;
    expected << in.rdbuf();
    EXPECT_EQ(text, expected.str());
    int again = -1;
    EXPECT_EQ(run(c.args, again), text);
}

INSTANTIATE_TEST_SUITE_P(cli, CliGolden, ::testing::ValuesIn(golden_cases()),
                         [](const auto &info) { return std::string(info.param.name); });

TEST(cli, parse_rows) {
    auto a = parse_rows(10, "0,1,2,3");
    ASSERT_EQ(a.kind(), SelectionKind::consecutive);
    ASSERT_EQ(a.size(), 4u);
    auto b = parse_rows(15, "0-9,12");
    ASSERT_EQ(b.kind(), SelectionKind::arbitrary);
    ASSERT_EQ(b.size(), 11u);
    auto c = parse_rows(10, "2..5");
    ASSERT_EQ(c.kind(), SelectionKind::consecutive);
    ASSERT_EQ(c.indices(), (std::vector<std::size_t>{2, 3, 4, 5}));
    auto d = parse_rows(10, "1:3:4");
    ASSERT_EQ(d.kind(), SelectionKind::arithmetic);
    ASSERT_EQ(d.indices(), (std::vector<std::size_t>{1, 4, 7, 0}));
    ASSERT_EQ(kind_of([] { parse_rows(10, "1:2:4"); }), ErrorKind::BadArithmeticDifference);
    ASSERT_EQ(kind_of([] { parse_rows(10, "a,b"); }), ErrorKind::ParseError);
    ASSERT_EQ(kind_of([] { parse_rows(10, "1,1"); }), ErrorKind::InvalidSelection);
    ASSERT_EQ(kind_of([] { parse_rows(10, ""); }), ErrorKind::ParseError);
}

TEST(cli, usage_errors) {
    int code = -1;
    run({}, code);
    ASSERT_NE(code, 0);
    run({"bogus"}, code);
    ASSERT_NE(code, 0);
    auto help = run({"--help"}, code);
    ASSERT_EQ(code, 0);
    ASSERT_NE(help.find("plan"), std::string::npos);
}

TEST(cli, plan_request_file) {
    auto path = std::string(::testing::TempDir()) + "/qmds_request.json";
    std::ofstream(path) << R"({"rate": "15/16", "d_min": 7, "policy": {"kind": "prime"}})";
    int code = -1;
    auto text = run({"plan", "--request", path}, code);
    ASSERT_EQ(code, 0);
    ASSERT_NE(text.find("[[192,180,7]]_193"), std::string::npos);
}
