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

#include "qmds/field.h"

#include <set>

#include "gtest/gtest.h"
#include "qmds/error.h"
#include "test_util.test.h"

using namespace qmds;

namespace {

ErrorKind kind_of(const std::function<void()> &f) {
    try {
        f();
    } catch (const Error &e) {
        return e.kind();
    }
    throw std::runtime_error("expected an error");
}

}  // namespace

TEST(field, create_prime) {
    auto f = field_create(17, 1);
    ASSERT_EQ(f->order(), 17u);
    ASSERT_EQ(f->degree(), 1u);
    ASSERT_TRUE(f->modulus().empty());
    ASSERT_EQ(f->to_string(), "GF(17)");
}

TEST(field, create_errors) {
    ASSERT_EQ(kind_of([] { field_create(4, 2); }), ErrorKind::NotPrime);
    ASSERT_EQ(kind_of([] { field_create(1, 1); }), ErrorKind::NotPrime);
    ASSERT_EQ(kind_of([] { field_create(2, 33); }), ErrorKind::SizeExceeded);
    ASSERT_EQ(kind_of([] { field_create(3, 7, 729); }), ErrorKind::SizeExceeded);
    ASSERT_EQ(kind_of([] { field_create(2, 0); }), ErrorKind::InvalidArgument);
}

TEST(field, frozen_moduli) {
    struct Case {
        std::uint32_t p;
        unsigned m;
        std::vector<std::uint32_t> modulus;
    };
    std::vector<Case> cases = {
        {2, 2, {1, 1, 1}},
        {2, 3, {1, 0, 1, 1}},
        {2, 4, {1, 0, 0, 1, 1}},
        {2, 5, {1, 0, 0, 1, 0, 1}},
        {2, 6, {1, 0, 0, 0, 0, 1, 1}},
        {2, 8, {1, 0, 0, 0, 1, 1, 0, 1, 1}},
        {3, 2, {1, 0, 1}},
        {3, 4, {1, 0, 1, 1, 1}},
        {3, 6, {1, 0, 0, 0, 1, 1, 1}},
        {5, 2, {1, 1, 1}},
        {5, 4, {1, 0, 1, 1, 1}},
        {7, 2, {1, 0, 1}},
        {5, 8, {1, 0, 0, 0, 0, 1, 1, 0, 1}},
    };
    for (const auto &c : cases) {
        auto f = field_create(c.p, c.m);
        ASSERT_EQ(f->modulus(), c.modulus) << c.p << "^" << c.m;
    }
    ASSERT_EQ(field_create(2, 4)->to_string(), "GF(2^4; modulus=1+x^3+x^4)");
}

TEST(field, modulus_matches_trial_division_oracle) {
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, unsigned>>{
             {2, 2}, {2, 3}, {2, 4}, {2, 5}, {2, 6}, {2, 7}, {3, 2}, {3, 3}, {3, 4}, {5, 2}, {5, 3}, {7, 2}, {11, 2}}) {
        auto f = field_create(p, m);
        ASSERT_EQ(f->modulus(), qmds_test::smallest_irreducible(p, m)) << p << "^" << m;
        ASSERT_TRUE(is_irreducible_over_prime_field(p, f->modulus()));
    }
    ASSERT_FALSE(is_irreducible_over_prime_field(2, std::vector<std::uint32_t>{1, 0, 1}));
    ASSERT_TRUE(is_irreducible_over_prime_field(2, std::vector<std::uint32_t>{1, 1, 0, 0, 1}));
    ASSERT_FALSE(is_irreducible_over_prime_field(2, std::vector<std::uint32_t>{1, 0, 1, 0, 1}));
}

TEST(field, multiplication_matches_polynomial_oracle) {
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 4}, {3, 2}, {3, 3}, {5, 2}, {2, 6}}) {
        auto f = field_create(p, m);
        for (Field::Value a = 0; a < f->order(); a++) {
            for (Field::Value b = 0; b < f->order(); b++) {
                auto expect = qmds_test::poly_mul_mod(
                    p, qmds_test::poly_trim(f->coefficients(a)), qmds_test::poly_trim(f->coefficients(b)),
                    f->modulus());
                ASSERT_EQ(qmds_test::poly_trim(f->coefficients(f->mul(a, b))), expect);
            }
        }
    }
}

TEST(field, axioms_exhaustive) {
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 1}, {2, 2}, {2, 3}, {3, 2}, {7, 1}, {13, 1},
                                                                        {2, 4}, {5, 2}, {3, 3}}) {
        auto f = field_create(p, m);
        const auto q = static_cast<Field::Value>(f->order());
        for (Field::Value a = 0; a < q; a++) {
            ASSERT_EQ(f->add(a, f->neg(a)), 0u);
            ASSERT_EQ(f->mul(a, 1), a);
            if (a != 0) {
                ASSERT_EQ(f->mul(a, f->inv(a)), 1u);
                ASSERT_EQ(f->pow(a, q - 1), 1u);
            }
            for (Field::Value b = 0; b < q; b++) {
                ASSERT_EQ(f->add(a, b), f->add(b, a));
                ASSERT_EQ(f->mul(a, b), f->mul(b, a));
                ASSERT_EQ(f->sub(f->add(a, b), b), a);
                for (Field::Value c = 0; c < q; c++) {
                    ASSERT_EQ(f->add(f->add(a, b), c), f->add(a, f->add(b, c)));
                    ASSERT_EQ(f->mul(f->mul(a, b), c), f->mul(a, f->mul(b, c)));
                    ASSERT_EQ(f->mul(a, f->add(b, c)), f->add(f->mul(a, b), f->mul(a, c)));
                }
            }
        }
    }
}

TEST(field, axioms_sampled_larger) {
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 8}, {2, 12}, {3, 6}, {5, 4}, {4093, 1}}) {
        auto f = field_create(p, m);
        const auto q = f->order();
        for (std::uint64_t a = 1; a < q; a += 1 + q / 97) {
            auto x = static_cast<Field::Value>(a);
            ASSERT_EQ(f->mul(x, f->inv(x)), 1u);
            for (std::uint64_t b = 0; b < q; b += 1 + q / 61) {
                auto y = static_cast<Field::Value>(b);
                auto z = static_cast<Field::Value>((a * 7 + b * 3) % q);
                ASSERT_EQ(f->mul(x, f->add(y, z)), f->add(f->mul(x, y), f->mul(x, z)));
                ASSERT_EQ(f->mul(f->mul(x, y), z), f->mul(x, f->mul(y, z)));
            }
        }
    }
}

TEST(field, arithmetic_examples) {
    auto f = field_create(17, 1);
    auto three = f->element(3);
    ASSERT_EQ((three * f->element(6)).value(), 1u);
    ASSERT_EQ(inv(three).value(), 6u);
    ASSERT_EQ(add(three, f->element(15)).value(), 1u);
    ASSERT_EQ(sub(three, f->element(5)).value(), 15u);
    ASSERT_EQ(pow(three, 16).value(), 1u);
    ASSERT_EQ(mul(three, three).value(), 9u);
    ASSERT_EQ((-three).value(), 14u);
    ASSERT_EQ((f->element(1) / three).value(), 6u);
    ASSERT_EQ(f->from_integer(-1), 16u);
    ASSERT_EQ(f->element_from_integer(35).value(), 1u);
    auto g16 = field_create(2, 4);
    for (Field::Value a = 1; a < 16; a++) {
        ASSERT_EQ((g16->element(a) * g16->element(a).inverse()).value(), 1u);
    }
}

TEST(field, element_errors) {
    auto f = field_create(17, 1);
    auto g = field_create(13, 1);
    ASSERT_EQ(kind_of([&] { inv(f->element(0)); }), ErrorKind::DivisionByZero);
    ASSERT_EQ(kind_of([&] { f->inv(0); }), ErrorKind::DivisionByZero);
    ASSERT_EQ(kind_of([&] { (void)(f->element(1) / f->element(0)); }), ErrorKind::DivisionByZero);
    ASSERT_EQ(kind_of([&] { (void)(f->element(1) + g->element(1)); }), ErrorKind::FieldMismatch);
    ASSERT_EQ(kind_of([&] { (void)(f->element(1) == g->element(1)); }), ErrorKind::FieldMismatch);
    ASSERT_EQ(kind_of([&] { element_order(f->element(0)); }), ErrorKind::ZeroElement);
    ASSERT_EQ(kind_of([&] { f->element(17); }), ErrorKind::InvalidArgument);
}

TEST(field, same_field_identity) {
    auto a = field_create(2, 4);
    auto b = field_create(2, 4);
    ASSERT_TRUE(a->same_as(*b));
    ASSERT_TRUE(a->element(3) == b->element(3));
    auto c = Field::create_with_modulus(2, {1, 1, 0, 0, 1});
    ASSERT_FALSE(a->same_as(*c));
    ASSERT_EQ(kind_of([&] { Field::create_with_modulus(2, {1, 0, 1}); }), ErrorKind::InvalidArgument);
}

TEST(field, element_order_examples) {
    auto f17 = field_create(17, 1);
    ASSERT_EQ(element_order(f17->element(1)), 1u);
    ASSERT_EQ(element_order(f17->element(3)), 16u);
    ASSERT_EQ(element_order(field_create(41, 1)->element(7)), 40u);
    ASSERT_EQ(element_order(field_create(449, 1)->element(3)), 448u);
    ASSERT_EQ(element_order(field_create(193, 1)->element(5)), 192u);
}

TEST(field, element_order_matches_multiplication) {
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, unsigned>>{{2, 4}, {3, 4}, {5, 3}, {61, 1}, {2, 8}}) {
        auto f = field_create(p, m);
        for (Field::Value a = 1; a < f->order(); a++) {
            auto e = f->element_order(a);
            ASSERT_EQ(e, qmds_test::order_by_multiplication(*f, a));
            ASSERT_EQ((f->order() - 1) % e, 0u);
        }
    }
}

TEST(field, primitive_roots_of_unity) {
    ASSERT_EQ(find_primitive_root_of_unity(field_create(17, 1), 16).value(), 3u);
    ASSERT_EQ(find_primitive_root_of_unity(field_create(61, 1), 60).value(), 2u);
    ASSERT_EQ(find_primitive_root_of_unity(field_create(11, 1), 10).value(), 2u);
    ASSERT_EQ(find_primitive_root_of_unity(field_create(41, 1), 40).value(), 6u);
    ASSERT_EQ(find_primitive_root_of_unity(field_create(17, 1), 1).value(), 1u);
    ASSERT_EQ(find_primitive_root_of_unity(field_create(17, 1), 2).value(), 16u);
    ASSERT_EQ(find_primitive_root_of_unity(field_create(2, 4), 15).to_string(), "x^2");
    ASSERT_EQ(kind_of([] { find_primitive_root_of_unity(field_create(13, 1), 5); }), ErrorKind::NoSuchRoot);
}

TEST(field, primitive_root_is_canonical_minimum) {
    for (auto [p, m] : std::vector<std::pair<std::uint32_t, unsigned>>{
             {17, 1}, {41, 1}, {2, 4}, {3, 2}, {3, 4}, {7, 2}, {2, 6}, {5, 2}, {113, 1}}) {
        auto f = field_create(p, m);
        const std::uint64_t q = f->order();
        for (std::uint64_t n = 1; n < q; n++) {
            if ((q - 1) % n != 0) {
                continue;
            }
            auto w = f->primitive_root_of_unity(n);
            ASSERT_EQ(qmds_test::order_by_multiplication(*f, w), n);
            for (std::uint64_t rank = 0; rank < f->canonical_rank(w); rank++) {
                auto x = f->from_canonical_rank(rank);
                ASSERT_TRUE(x == 0 || qmds_test::order_by_multiplication(*f, x) != n);
            }
        }
    }
}

TEST(field, order_mod_gives_root_degree) {
    for (auto [p, n] : std::vector<std::pair<std::uint32_t, std::uint64_t>>{{3, 16}, {7, 16}, {2, 15}, {3, 8}, {5, 12},
                                                                            {2, 21}, {3, 20}}) {
        unsigned e = 1;
        std::uint64_t x = p % n;
        while (x != 1) {
            x = x * p % n;
            e++;
        }
        auto f = field_create(p, e);
        ASSERT_EQ((f->order() - 1) % n, 0u);
        auto w = f->primitive_root_of_unity(n);
        ASSERT_EQ(f->element_order(w), n);
    }
}

TEST(field, canonical_rank_roundtrip) {
    auto f = field_create(3, 3);
    std::set<Field::Value> seen;
    for (std::uint64_t rank = 0; rank < f->order(); rank++) {
        auto v = f->from_canonical_rank(rank);
        ASSERT_EQ(f->canonical_rank(v), rank);
        seen.insert(v);
    }
    ASSERT_EQ(seen.size(), f->order());
    // c0 is the most significant digit: 1 (constant) ranks above x.
    auto g = field_create(2, 4);
    ASSERT_TRUE(g->canonical_less(g->parse_element("x"), g->parse_element("1")));
}

TEST(field, frobenius) {
    auto f4 = field_create(2, 2);
    for (Field::Value a = 0; a < 4; a++) {
        ASSERT_EQ(frobenius_power(frobenius_power(f4->element(a), 2), 2).value(), a);
    }
    auto f9 = field_create(3, 2);
    ASSERT_EQ(frobenius_power(f9->element(0), 3).value(), 0u);
    std::set<Field::Value> fixed;
    for (Field::Value a = 0; a < 9; a++) {
        for (Field::Value b = 0; b < 9; b++) {
            ASSERT_EQ(f9->pow(f9->add(a, b), 3), f9->add(f9->pow(a, 3), f9->pow(b, 3)));
            ASSERT_EQ(f9->pow(f9->mul(a, b), 3), f9->mul(f9->pow(a, 3), f9->pow(b, 3)));
        }
        if (f9->pow(a, 3) == a) {
            fixed.insert(a);
        }
    }
    ASSERT_EQ(fixed, (std::set<Field::Value>{0, 1, 2}));
}

TEST(field, format_and_parse) {
    auto f = field_create(3, 2);
    for (Field::Value a = 0; a < 9; a++) {
        ASSERT_EQ(f->parse_element(f->format(a)), a);
    }
    ASSERT_EQ(f->format(0), "0");
    ASSERT_EQ(f->format(f->parse_element("2*x+1")), "1+2*x");
    ASSERT_EQ(kind_of([&] { f->parse_element("x^2"); }), ErrorKind::ParseError);
    auto p = field_create(11, 1);
    ASSERT_EQ(p->parse_element("13"), 2u);
    ASSERT_EQ(kind_of([&] { p->parse_element("x"); }), ErrorKind::ParseError);
    ASSERT_EQ(kind_of([&] { f->parse_element("y+1"); }), ErrorKind::ParseError);
}

TEST(field, parse_specs) {
    ASSERT_EQ(Field::parse("GF(11)")->order(), 11u);
    ASSERT_EQ(Field::parse("Z_7")->order(), 7u);
    ASSERT_EQ(Field::parse("Z7")->order(), 7u);
    ASSERT_EQ(Field::parse("GF(16)")->degree(), 4u);
    ASSERT_EQ(Field::parse("GF(2^4)")->to_string(), "GF(2^4; modulus=1+x^3+x^4)");
    ASSERT_EQ(Field::parse("GF(5^8)")->order(), 390625u);
    auto custom = Field::parse("GF(2^4; modulus=1+x+x^4)");
    ASSERT_EQ(custom->modulus(), (std::vector<std::uint32_t>{1, 1, 0, 0, 1}));
    ASSERT_TRUE(Field::parse(custom->to_string())->same_as(*custom));
    ASSERT_EQ(kind_of([] { Field::parse("GF(12)"); }), ErrorKind::NotPrime);
    ASSERT_EQ(kind_of([] { Field::parse("GF(x)"); }), ErrorKind::ParseError);
    ASSERT_EQ(kind_of([] { Field::parse("Z_9"); }), ErrorKind::NotPrime);
}
