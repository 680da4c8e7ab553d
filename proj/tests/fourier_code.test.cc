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

#include "qmds/fourier_code.h"

#include <algorithm>
#include <random>

#include "gtest/gtest.h"
#include "qmds/error.h"
#include "test_util.test.h"

using namespace qmds;

namespace {

template <typename F>
ErrorKind kind_of(F &&f) {
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    throw std::runtime_error("expected an error");
}

std::vector<std::size_t> range(std::size_t lo, std::size_t hi) {
    std::vector<std::size_t> out;
    for (std::size_t i = lo; i <= hi; i++) {
        out.push_back(i);
    }
    return out;
}

std::vector<std::size_t> from_mask(std::size_t n, std::uint32_t mask) {
    std::vector<std::size_t> out;
    for (std::size_t i = 0; i < n; i++) {
        if (mask >> i & 1) {
            out.push_back(i);
        }
    }
    return out;
}

}  // namespace

TEST(fourier_code, matrix_entries) {
    auto f = field_create(17, 1);
    auto m = fourier_matrix(f, 16, f->element(3));
    ASSERT_EQ(m.omega().value(), 3u);
    for (std::size_t i = 0; i < 16; i++) {
        for (std::size_t j = 0; j < 16; j++) {
            ASSERT_EQ(m.entry(i, j), f->pow(3, i * j));
        }
    }
    ASSERT_EQ(m.row(0), Vector(16, 1));
    ASSERT_EQ(fourier_matrix(field_create(11, 1), 10).omega().value(), 2u);
    ASSERT_EQ(fourier_matrix(f, 1).row(0), Vector{1});
}

TEST(fourier_code, matrix_errors) {
    auto f4 = field_create(2, 2);
    auto f17 = field_create(17, 1);
    ASSERT_EQ(kind_of([&] { fourier_matrix(f4, 2); }), ErrorKind::CharacteristicDividesLength);
    ASSERT_EQ(kind_of([&] { fourier_matrix(f17, 16, f17->element(2)); }), ErrorKind::NotPrimitiveRoot);
    ASSERT_EQ(kind_of([&] { fourier_matrix(f17, 16, f17->element(0)); }), ErrorKind::NotPrimitiveRoot);
    ASSERT_EQ(kind_of([&] { fourier_matrix(f17, 16, field_create(13, 1)->element(2)); }), ErrorKind::FieldMismatch);
    ASSERT_EQ(kind_of([&] { fourier_matrix(f17, 5); }), ErrorKind::NoSuchRoot);
    ASSERT_EQ(kind_of([&] { fourier_matrix(f17, 0); }), ErrorKind::InvalidArgument);
}

TEST(fourier_code, row_inner_products) {
    std::vector<std::pair<FieldPtr, std::size_t>> cases = {
        {field_create(11, 1), 10}, {field_create(17, 1), 16}, {field_create(2, 4), 15}, {field_create(13, 1), 12},
        {field_create(3, 4), 16},  {field_create(7, 2), 16},  {field_create(2, 6), 63}, {field_create(3, 2), 8},
    };
    for (const auto &[f, n] : cases) {
        auto m = fourier_matrix(f, n);
        const auto n_one = f->from_integer(static_cast<std::int64_t>(n));
        ASSERT_NE(n_one, 0u);
        for (std::size_t i = 0; i < n; i++) {
            auto ei = m.row(i);
            for (std::size_t j = 0; j < n; j++) {
                auto expected = (i + j) % n == 0 ? n_one : 0u;
                ASSERT_EQ(dot(*f, ei, m.row(j)), expected) << f->to_string() << " " << i << "," << j;
            }
        }
    }
}

TEST(fourier_code, selections) {
    auto c = RowSelection::consecutive(10, 6);
    ASSERT_EQ(c.indices(), range(0, 5));
    ASSERT_EQ(c.kind(), SelectionKind::consecutive);
    auto wrap = RowSelection::consecutive(12, 7, 6);
    ASSERT_EQ(wrap.indices(), (std::vector<std::size_t>{6, 7, 8, 9, 10, 11, 0}));
    auto a = RowSelection::arithmetic(10, 1, 3, 4);
    ASSERT_EQ(a.indices(), (std::vector<std::size_t>{1, 4, 7, 0}));
    ASSERT_EQ(a.sorted_indices(), (std::vector<std::size_t>{0, 1, 4, 7}));
    ASSERT_TRUE(a.contains(7));
    ASSERT_FALSE(a.contains(2));
    auto arb = RowSelection::arbitrary(15, {12, 0, 16});
    ASSERT_EQ(arb.indices(), (std::vector<std::size_t>{12, 0, 1}));
    ASSERT_EQ(kind_of([] { RowSelection::arithmetic(10, 0, 2, 3); }), ErrorKind::BadArithmeticDifference);
    ASSERT_EQ(kind_of([] { RowSelection::arithmetic(10, 0, 5, 3); }), ErrorKind::BadArithmeticDifference);
    ASSERT_EQ(kind_of([] { RowSelection::arbitrary(10, {1, 11}); }), ErrorKind::InvalidSelection);
    ASSERT_EQ(kind_of([] { RowSelection::arbitrary(10, {}); }), ErrorKind::InvalidSelection);
    ASSERT_EQ(kind_of([] { RowSelection::consecutive(10, 11); }), ErrorKind::InvalidSelection);
}

TEST(fourier_code, code_from_rows_examples) {
    auto f = field_create(11, 1);
    auto m = fourier_matrix(f, 10);
    auto c = code_from_rows(m, RowSelection::consecutive(10, 6));
    ASSERT_EQ(c.length(), 10u);
    ASSERT_EQ(c.dimension(), 6u);
    ASSERT_EQ(c.distance()->value, 5u);
    ASSERT_EQ(c.distance()->basis, DistanceBasis::theorem);
    ASSERT_TRUE(c.is_mds());
    auto all = code_from_rows(m, RowSelection::consecutive(10, 10));
    ASSERT_EQ(all.distance()->value, 1u);
    auto ar = code_from_rows(m, RowSelection::arithmetic(10, 2, 3, 4));
    ASSERT_EQ(ar.distance()->value, 7u);

    auto g = field_create(2, 4);
    auto d = code_from_rows(fourier_matrix(g, 15), RowSelection::arbitrary(15, {0, 1, 2, 3, 4, 5, 6, 7, 8, 9, 12}));
    ASSERT_EQ(d.dimension(), 11u);
    ASSERT_FALSE(d.distance().has_value());
    ASSERT_FALSE(d.is_mds());
    auto claimed = d.with_distance({3, DistanceBasis::oracle});
    ASSERT_EQ(claimed.distance()->value, 3u);
    ASSERT_EQ(kind_of([&] { ClassicalCode(m, RowSelection::consecutive(9, 3), std::nullopt); }),
              ErrorKind::LengthMismatch);
}

TEST(fourier_code, generator_is_selected_rows) {
    auto f = field_create(13, 1);
    auto m = fourier_matrix(f, 12);
    auto sel = RowSelection::arbitrary(12, {5, 0, 7});
    auto g = code_from_rows(m, sel).generator();
    ASSERT_EQ(g.rows(), 3u);
    for (std::size_t r = 0; r < 3; r++) {
        for (std::size_t j = 0; j < 12; j++) {
            ASSERT_EQ(g.at(r, j), m.entry(sel.indices()[r], j));
        }
    }
}

TEST(fourier_code, euclidean_dual_examples) {
    ASSERT_EQ(euclidean_dual_indices(RowSelection::consecutive(10, 6)), range(1, 4));
    ASSERT_EQ(euclidean_dual_indices(RowSelection::consecutive(10, 8)), range(1, 2));
    ASSERT_TRUE(euclidean_dual_indices(RowSelection::consecutive(10, 10)).empty());
    ASSERT_TRUE(is_euclidean_dual_containing(RowSelection::consecutive(10, 6)));
    ASSERT_FALSE(is_euclidean_dual_containing(RowSelection::consecutive(10, 5)));
    ASSERT_TRUE(is_euclidean_dual_containing(RowSelection::consecutive(12, 7)));
    ASSERT_FALSE(is_euclidean_dual_containing(RowSelection::consecutive(12, 6)));
    ASSERT_TRUE(is_euclidean_dual_containing(RowSelection::consecutive(10, 10)));
    // The window 6..11,0 of F_12; reading e_1 in place of e_10 breaks it.
    ASSERT_TRUE(is_euclidean_dual_containing(RowSelection::consecutive(12, 7, 6)));
    ASSERT_FALSE(is_euclidean_dual_containing(RowSelection::arbitrary(12, {6, 7, 8, 9, 1, 11, 0})));
}

TEST(fourier_code, dual_containing_prefix_threshold) {
    for (std::size_t n = 1; n <= 64; n++) {
        for (std::size_t t = 0; t < n; t++) {
            bool contains = is_euclidean_dual_containing(RowSelection::consecutive(n, t + 1));
            ASSERT_EQ(contains, 2 * t >= n - 1) << n << " " << t;
        }
    }
}

TEST(fourier_code, dual_containing_needs_more_than_half) {
    for (std::size_t n = 1; n <= 12; n++) {
        for (std::uint32_t mask = 1; mask < (1u << n); mask++) {
            auto s = from_mask(n, mask);
            if (is_euclidean_dual_containing(n, s)) {
                ASSERT_GT(2 * s.size(), n);
                ASSERT_EQ(euclidean_dual_indices(n, s).size(), n - s.size());
            }
        }
    }
}

TEST(fourier_code, encode) {
    auto f = field_create(11, 1);
    auto code = code_from_rows(fourier_matrix(f, 10), RowSelection::consecutive(10, 6));
    ASSERT_EQ(encode(code, Vector(6, 0)), Vector(10, 0));
    Vector unit(6, 0);
    unit[0] = 1;
    ASSERT_EQ(encode(code, unit), code.matrix().row(0));
    std::mt19937 rng(11);
    for (int trial = 0; trial < 500; trial++) {
        Vector msg(6);
        for (auto &x : msg) {
            x = rng() % 11;
        }
        if (std::all_of(msg.begin(), msg.end(), [](auto x) { return x == 0; })) {
            continue;
        }
        auto w = encode(code, msg);
        ASSERT_GE(std::count_if(w.begin(), w.end(), [](auto x) { return x != 0; }), 5);
    }
    std::vector<FieldElement> elems(6, f->element(0));
    elems[1] = f->element(1);
    auto cw = encode(code, elems);
    ASSERT_EQ(cw[1].value(), code.matrix().entry(1, 1));
    ASSERT_EQ(kind_of([&] { encode(code, Vector(5, 0)); }), ErrorKind::LengthMismatch);
    std::vector<FieldElement> foreign(6, field_create(13, 1)->element(1));
    ASSERT_EQ(kind_of([&] { encode(code, foreign); }), ErrorKind::FieldMismatch);
}
