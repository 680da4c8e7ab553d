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

#include <algorithm>
#include <array>
#include <cctype>
#include <charconv>
#include <numeric>

#include "qmds/error.h"
#include "qmds/number_theory.h"

namespace qmds {

namespace {

// Dense polynomials over GF(p), coefficients low degree first, no trailing zeros.
using Poly = std::vector<std::uint64_t>;

void trim(Poly &a) {
    while (!a.empty() && a.back() == 0) {
        a.pop_back();
    }
}

Poly poly_mod(Poly a, const Poly &f, std::uint64_t p) {
    trim(a);
    std::uint64_t lead_inv = *inverse_mod(f.back(), p);
    while (a.size() >= f.size()) {
        std::uint64_t c = mul_mod(a.back(), lead_inv, p);
        std::size_t shift = a.size() - f.size();
        for (std::size_t i = 0; i < f.size(); i++) {
            a[shift + i] = (a[shift + i] + p - mul_mod(c, f[i], p)) % p;
        }
        trim(a);
    }
    return a;
}

Poly poly_mul(const Poly &a, const Poly &b, std::uint64_t p) {
    if (a.empty() || b.empty()) {
        return {};
    }
    Poly out(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); i++) {
        for (std::size_t j = 0; j < b.size(); j++) {
            out[i + j] = (out[i + j] + mul_mod(a[i], b[j], p)) % p;
        }
    }
    trim(out);
    return out;
}

Poly poly_sub(Poly a, const Poly &b, std::uint64_t p) {
    if (a.size() < b.size()) {
        a.resize(b.size(), 0);
    }
    for (std::size_t i = 0; i < b.size(); i++) {
        a[i] = (a[i] + p - b[i]) % p;
    }
    trim(a);
    return a;
}

// Quotient and remainder of a / f.
std::pair<Poly, Poly> poly_divmod(Poly a, const Poly &f, std::uint64_t p) {
    trim(a);
    Poly quotient;
    if (a.size() >= f.size()) {
        quotient.assign(a.size() - f.size() + 1, 0);
    }
    std::uint64_t lead_inv = *inverse_mod(f.back(), p);
    while (a.size() >= f.size()) {
        std::uint64_t c = mul_mod(a.back(), lead_inv, p);
        std::size_t shift = a.size() - f.size();
        quotient[shift] = c;
        for (std::size_t i = 0; i < f.size(); i++) {
            a[shift + i] = (a[shift + i] + p - mul_mod(c, f[i], p)) % p;
        }
        trim(a);
    }
    trim(quotient);
    return {quotient, a};
}

Poly poly_gcd(Poly a, Poly b, std::uint64_t p) {
    trim(a);
    trim(b);
    while (!b.empty()) {
        Poly r = poly_mod(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return a;
}

Poly poly_pow_mod(Poly base, std::uint64_t exponent, const Poly &f, std::uint64_t p) {
    Poly result{1};
    base = poly_mod(base, f, p);
    while (exponent) {
        if (exponent & 1) {
            result = poly_mod(poly_mul(result, base, p), f, p);
        }
        base = poly_mod(poly_mul(base, base, p), f, p);
        exponent >>= 1;
    }
    return result;
}

std::string trim_spaces(std::string_view text) {
    std::string out;
    for (char c : text) {
        if (!std::isspace(static_cast<unsigned char>(c))) {
            out.push_back(c);
        }
    }
    return out;
}

std::uint64_t parse_unsigned(std::string_view text, std::string_view context) {
    std::uint64_t value = 0;
    auto [ptr, ec] = std::from_chars(text.data(), text.data() + text.size(), value);
    if (text.empty() || ec != std::errc() || ptr != text.data() + text.size()) {
        throw Error(ErrorKind::ParseError, "expected an integer in '" + std::string(context) + "'");
    }
    return value;
}

// Parses "c0+c1*x+x^3" style polynomials into (degree, coefficient) terms.
std::vector<std::pair<std::uint64_t, std::int64_t>> parse_poly_terms(std::string_view raw) {
    std::string text = trim_spaces(raw);
    if (text.empty()) {
        throw Error(ErrorKind::ParseError, "empty polynomial");
    }
    std::vector<std::pair<std::uint64_t, std::int64_t>> terms;
    std::size_t pos = 0;
    while (pos < text.size()) {
        bool negative = false;
        if (text[pos] == '+' || text[pos] == '-') {
            negative = text[pos] == '-';
            pos++;
        }
        std::size_t end = pos;
        while (end < text.size() && text[end] != '+' && text[end] != '-') {
            end++;
        }
        std::string_view term(text.data() + pos, end - pos);
        if (term.empty()) {
            throw Error(ErrorKind::ParseError, "malformed polynomial '" + text + "'");
        }
        std::int64_t coefficient = 1;
        std::uint64_t degree = 0;
        std::size_t x = term.find('x');
        if (x == std::string_view::npos) {
            coefficient = static_cast<std::int64_t>(parse_unsigned(term, text));
        } else {
            std::string_view head = term.substr(0, x);
            std::string_view tail = term.substr(x + 1);
            if (!head.empty()) {
                if (head.back() == '*') {
                    head.remove_suffix(1);
                }
                coefficient = static_cast<std::int64_t>(parse_unsigned(head, text));
            }
            degree = 1;
            if (!tail.empty()) {
                if (tail.front() != '^') {
                    throw Error(ErrorKind::ParseError, "malformed term in '" + text + "'");
                }
                degree = parse_unsigned(tail.substr(1), text);
            }
        }
        terms.emplace_back(degree, negative ? -coefficient : coefficient);
        pos = end;
    }
    return terms;
}

std::string format_poly(std::span<const std::uint32_t> coefficients) {
    std::string out;
    for (std::size_t k = 0; k < coefficients.size(); k++) {
        std::uint32_t c = coefficients[k];
        if (c == 0) {
            continue;
        }
        if (!out.empty()) {
            out += "+";
        }
        if (k == 0) {
            out += std::to_string(c);
            continue;
        }
        if (c != 1) {
            out += std::to_string(c) + "*";
        }
        out += "x";
        if (k > 1) {
            out += "^" + std::to_string(k);
        }
    }
    return out.empty() ? "0" : out;
}

}  // namespace

bool is_irreducible_over_prime_field(std::uint32_t p, std::span<const std::uint32_t> poly) {
    Poly f(poly.begin(), poly.end());
    trim(f);
    if (f.size() < 2) {
        return false;
    }
    std::size_t m = f.size() - 1;
    if (m == 1) {
        return true;
    }
    if (f[0] == 0) {
        return false;
    }
    // Ben-Or: f is irreducible iff gcd(x^(p^i) - x, f) = 1 for 1 <= i <= m/2.
    Poly x{0, 1};
    Poly h = x;
    for (std::size_t i = 1; i <= m / 2; i++) {
        h = poly_pow_mod(h, p, f, p);
        Poly g = poly_gcd(f, poly_sub(h, x, p), p);
        if (g.size() > 1) {
            return false;
        }
    }
    return true;
}

Field::Field(Passkey, std::uint32_t p, unsigned m, std::vector<std::uint32_t> modulus)
    : p_(p), m_(m), q_(1), modulus_(std::move(modulus)) {
    for (unsigned i = 0; i < m_; i++) {
        q_ *= p_;
    }
    if (m_ > 1) {
        reduction_.resize(m_);
        for (unsigned k = 0; k < m_; k++) {
            reduction_[k] = (p_ - modulus_[k]) % p_;
        }
        if (p_ == 2) {
            for (unsigned k = 0; k < m_; k++) {
                binary_modulus_bits_ |= modulus_[k] << k;
            }
        }
    }
    group_factors_ = factorize(q_ - 1);
    if (m_ > 1 && q_ <= kTableLimit) {
        build_tables();
    }
}

void Field::build_tables() {
    const std::uint64_t period = q_ - 1;
    Value g = primitive_element();
    std::vector<Value> exp(2 * period);
    std::vector<std::uint32_t> log(q_, 0);
    Value x = 1;
    for (std::uint64_t i = 0; i < period; i++) {
        exp[i] = exp[i + period] = x;
        log[x] = static_cast<std::uint32_t>(i);
        x = mul(x, g);
    }
    std::vector<Value> succ(q_);
    for (std::uint64_t v = 0; v < q_; v++) {
        succ[v] = add(static_cast<Value>(v), 1);
    }
    exp_ = std::move(exp);
    log_ = std::move(log);
    succ_ = std::move(succ);
}

FieldPtr Field::create(std::uint64_t p, unsigned m, std::uint64_t max_order) {
    if (!is_prime(p)) {
        throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    }
    if (m < 1) {
        throw Error(ErrorKind::InvalidArgument, "extension degree must be at least 1");
    }
    auto q = checked_pow(p, m, std::min(max_order, kDefaultMaxFieldOrder));
    if (!q) {
        throw Error(
            ErrorKind::SizeExceeded,
            std::to_string(p) + "^" + std::to_string(m) + " exceeds the field size bound " +
                std::to_string(std::min(max_order, kDefaultMaxFieldOrder)));
    }
    std::vector<std::uint32_t> modulus;
    if (m > 1) {
        // Walk (c_0, ..., c_{m-1}) in lexicographic order; c_0 = 0 is always reducible.
        std::uint64_t block = *q / p;
        std::vector<std::uint32_t> candidate(m + 1, 0);
        candidate[m] = 1;
        bool found = false;
        for (std::uint64_t rank = block; rank < *q && !found; rank++) {
            // candidate[0] is the most significant digit of rank.
            std::uint64_t rest = rank;
            for (unsigned k = m; k-- > 0;) {
                candidate[k] = static_cast<std::uint32_t>(rest % p);
                rest /= p;
            }
            if (is_irreducible_over_prime_field(static_cast<std::uint32_t>(p), candidate)) {
                found = true;
            }
        }
        modulus = candidate;
    }
    return std::make_shared<const Field>(Passkey{}, static_cast<std::uint32_t>(p), m, std::move(modulus));
}

FieldPtr Field::create_with_modulus(std::uint64_t p, std::vector<std::uint32_t> modulus, std::uint64_t max_order) {
    if (!is_prime(p)) {
        throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    }
    if (modulus.size() < 2) {
        throw Error(ErrorKind::InvalidArgument, "modulus must have degree at least 1");
    }
    unsigned m = static_cast<unsigned>(modulus.size() - 1);
    if (m == 1) {
        return create(p, 1, max_order);
    }
    for (auto c : modulus) {
        if (c >= p) {
            throw Error(ErrorKind::InvalidArgument, "modulus coefficient out of range");
        }
    }
    if (modulus.back() != 1 || !is_irreducible_over_prime_field(static_cast<std::uint32_t>(p), modulus)) {
        throw Error(ErrorKind::InvalidArgument, "modulus must be monic and irreducible");
    }
    if (!checked_pow(p, m, std::min(max_order, kDefaultMaxFieldOrder))) {
        throw Error(ErrorKind::SizeExceeded, "field order exceeds the size bound");
    }
    return std::make_shared<const Field>(Passkey{}, static_cast<std::uint32_t>(p), m, std::move(modulus));
}

FieldPtr Field::parse(std::string_view raw, std::uint64_t max_order) {
    std::string text = trim_spaces(raw);
    std::string body;
    if (text.rfind("GF(", 0) == 0 && text.back() == ')') {
        body = text.substr(3, text.size() - 4);
    } else if (text.rfind("Z", 0) == 0) {
        // Z_n is a field only for prime n.
        std::uint64_t p = parse_unsigned(text.substr(text.rfind("Z_", 0) == 0 ? 2 : 1), raw);
        if (!is_prime(p)) {
            throw Error(ErrorKind::NotPrime, "Z_" + std::to_string(p) + " is not a field");
        }
        return create(p, 1, max_order);
    } else {
        throw Error(ErrorKind::ParseError, "unrecognized field '" + std::string(raw) + "'");
    }
    std::string modulus_text;
    if (auto semi = body.find(';'); semi != std::string::npos) {
        std::string rest = body.substr(semi + 1);
        body = body.substr(0, semi);
        if (rest.rfind("modulus=", 0) != 0) {
            throw Error(ErrorKind::ParseError, "expected 'modulus=' in '" + std::string(raw) + "'");
        }
        modulus_text = rest.substr(8);
    }
    std::uint64_t p = 0;
    unsigned m = 1;
    if (auto caret = body.find('^'); caret != std::string::npos) {
        p = parse_unsigned(std::string_view(body).substr(0, caret), raw);
        m = static_cast<unsigned>(parse_unsigned(std::string_view(body).substr(caret + 1), raw));
    } else {
        std::uint64_t q = parse_unsigned(body, raw);
        auto factors = factorize(q);
        if (factors.size() != 1) {
            throw Error(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
        }
        p = factors[0].first;
        m = factors[0].second;
    }
    if (modulus_text.empty()) {
        return create(p, m, max_order);
    }
    if (!is_prime(p)) {
        throw Error(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
    }
    std::vector<std::uint32_t> modulus(m + 1, 0);
    for (auto [degree, c] : parse_poly_terms(modulus_text)) {
        if (degree > m) {
            throw Error(ErrorKind::ParseError, "modulus degree exceeds extension degree");
        }
        std::int64_t pp = static_cast<std::int64_t>(p);
        modulus[degree] = static_cast<std::uint32_t>((((modulus[degree] + c) % pp) + pp) % pp);
    }
    return create_with_modulus(p, std::move(modulus), max_order);
}

std::string Field::to_string() const {
    if (m_ == 1) {
        return "GF(" + std::to_string(p_) + ")";
    }
    return "GF(" + std::to_string(p_) + "^" + std::to_string(m_) + "; modulus=" + format_poly(modulus_) + ")";
}

bool Field::same_as(const Field &other) const {
    return this == &other || (p_ == other.p_ && m_ == other.m_ && modulus_ == other.modulus_);
}

Field::Value Field::from_integer(std::int64_t k) const {
    std::int64_t p = p_;
    return static_cast<Value>(((k % p) + p) % p);
}

Field::Value Field::add(Value a, Value b) const {
    if (m_ == 1) {
        std::uint64_t s = std::uint64_t{a} + b;
        return static_cast<Value>(s >= p_ ? s - p_ : s);
    }
    if (p_ == 2) {
        return a ^ b;
    }
    if (!succ_.empty()) {
        if (a == 0 || b == 0) {
            return a | b;
        }
        // a + b = a (1 + b/a).
        Value s = succ_[exp_[log_[b] + (q_ - 1) - log_[a]]];
        return s == 0 ? 0 : exp_[log_[a] + log_[s]];
    }
    Value out = 0;
    std::uint64_t weight = 1;
    for (unsigned k = 0; k < m_; k++) {
        std::uint32_t da = a % p_, db = b % p_;
        a /= p_;
        b /= p_;
        std::uint32_t s = da + db;
        if (s >= p_) {
            s -= p_;
        }
        out += static_cast<Value>(s * weight);
        weight *= p_;
    }
    return out;
}

Field::Value Field::neg(Value a) const {
    if (m_ == 1) {
        return a == 0 ? 0 : p_ - a;
    }
    if (p_ == 2) {
        return a;
    }
    if (!exp_.empty()) {
        return a == 0 ? 0 : exp_[log_[a] + (q_ - 1) / 2];
    }
    Value out = 0;
    std::uint64_t weight = 1;
    for (unsigned k = 0; k < m_; k++) {
        std::uint32_t d = a % p_;
        a /= p_;
        out += static_cast<Value>((d == 0 ? 0 : p_ - d) * weight);
        weight *= p_;
    }
    return out;
}

Field::Value Field::sub(Value a, Value b) const {
    if (m_ == 1) {
        return a >= b ? a - b : static_cast<Value>(std::uint64_t{a} + p_ - b);
    }
    return add(a, neg(b));
}

Field::Value Field::mul(Value a, Value b) const {
    if (m_ == 1) {
        return static_cast<Value>(std::uint64_t{a} * b % p_);
    }
    if (!exp_.empty()) {
        return a == 0 || b == 0 ? 0 : exp_[log_[a] + log_[b]];
    }
    if (p_ == 2) {
        return mul_binary(a, b);
    }
    return mul_extension(a, b);
}

Field::Value Field::mul_binary(Value a, Value b) const {
    std::uint64_t full = (std::uint64_t{1} << m_) | binary_modulus_bits_;
    std::uint64_t r = 0;
    for (unsigned i = m_; i-- > 0;) {
        r <<= 1;
        if ((r >> m_) & 1) {
            r ^= full;
        }
        if ((b >> i) & 1) {
            r ^= a;
        }
    }
    return static_cast<Value>(r);
}

Field::Value Field::mul_extension(Value a, Value b) const {
    std::array<std::uint64_t, 32> da{}, db{};
    std::array<std::uint64_t, 64> prod{};
    for (unsigned k = 0; k < m_; k++) {
        da[k] = a % p_;
        a /= p_;
        db[k] = b % p_;
        b /= p_;
    }
    for (unsigned i = 0; i < m_; i++) {
        if (da[i] == 0) {
            continue;
        }
        for (unsigned j = 0; j < m_; j++) {
            prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
        }
    }
    // x^m = -(c_0 + ... + c_{m-1} x^{m-1}); fold from the top down.
    for (unsigned top = 2 * m_ - 2; top >= m_; top--) {
        std::uint64_t c = prod[top];
        if (c != 0) {
            unsigned base = top - m_;
            for (unsigned k = 0; k < m_; k++) {
                prod[base + k] = (prod[base + k] + c * reduction_[k]) % p_;
            }
        }
    }
    Value out = 0;
    for (unsigned k = m_; k-- > 0;) {
        out = static_cast<Value>(out * p_ + prod[k]);
    }
    return out;
}

Field::Value Field::inv(Value a) const {
    if (a == 0) {
        throw Error(ErrorKind::DivisionByZero, "inverse of zero in " + to_string());
    }
    if (m_ == 1) {
        return static_cast<Value>(*inverse_mod(a, p_));
    }
    if (!exp_.empty()) {
        return exp_[(q_ - 1) - log_[a]];
    }
    return inv_extension(a);
}

Field::Value Field::inv_extension(Value a) const {
    // Extended Euclid on (modulus, a): track s with s * a = r (mod modulus).
    std::uint64_t p = p_;
    Poly f(modulus_.begin(), modulus_.end());
    auto digits = coefficients(a);
    Poly r0 = f, r1(digits.begin(), digits.end());
    trim(r1);
    Poly s0{}, s1{1};
    while (r1.size() > 1) {
        auto [quotient, remainder] = poly_divmod(r0, r1, p);
        Poly s2 = poly_sub(s0, poly_mul(quotient, s1, p), p);
        r0 = std::move(r1);
        r1 = std::move(remainder);
        s0 = std::move(s1);
        s1 = std::move(s2);
    }
    // r1 is a nonzero constant.
    std::uint64_t scale = *inverse_mod(r1[0], p);
    std::vector<std::uint32_t> out(m_, 0);
    for (std::size_t k = 0; k < s1.size() && k < m_; k++) {
        out[k] = static_cast<std::uint32_t>(mul_mod(s1[k], scale, p));
    }
    return from_coefficients(out);
}

Field::Value Field::div(Value a, Value b) const {
    return mul(a, inv(b));
}

Field::Value Field::pow(Value a, std::uint64_t exponent) const {
    Value result = 1;
    while (exponent) {
        if (exponent & 1) {
            result = mul(result, a);
        }
        exponent >>= 1;
        if (exponent) {
            a = mul(a, a);
        }
    }
    return result;
}

std::vector<std::uint32_t> Field::coefficients(Value a) const {
    std::vector<std::uint32_t> out(m_, 0);
    for (unsigned k = 0; k < m_; k++) {
        out[k] = a % p_;
        a /= p_;
    }
    return out;
}

Field::Value Field::from_coefficients(std::span<const std::uint32_t> coefficients) const {
    if (coefficients.size() > m_) {
        throw Error(ErrorKind::InvalidArgument, "too many coefficients for " + to_string());
    }
    Value out = 0;
    for (std::size_t k = coefficients.size(); k-- > 0;) {
        out = static_cast<Value>(out * p_ + coefficients[k] % p_);
    }
    return out;
}

std::string Field::format(Value a) const {
    if (m_ == 1) {
        return std::to_string(a);
    }
    auto c = coefficients(a);
    return format_poly(c);
}

Field::Value Field::parse_element(std::string_view text) const {
    std::vector<std::uint32_t> out(m_, 0);
    std::int64_t p = p_;
    for (auto [degree, c] : parse_poly_terms(text)) {
        if (degree >= m_) {
            throw Error(ErrorKind::ParseError, "element term degree exceeds field degree");
        }
        out[degree] = static_cast<std::uint32_t>((((out[degree] + c % p) % p) + p) % p);
    }
    return from_coefficients(out);
}

std::uint64_t Field::canonical_rank(Value a) const {
    if (m_ == 1) {
        return a;
    }
    std::uint64_t rank = 0;
    for (unsigned k = 0; k < m_; k++) {
        rank = rank * p_ + a % p_;
        a /= p_;
    }
    return rank;
}

Field::Value Field::from_canonical_rank(std::uint64_t rank) const {
    if (m_ == 1) {
        return static_cast<Value>(rank);
    }
    // The digits of rank, most significant first, are c_0, c_1, ...
    Value out = 0;
    for (unsigned k = 0; k < m_; k++) {
        out = static_cast<Value>(out * p_ + rank % p_);
        rank /= p_;
    }
    return out;
}

std::uint64_t Field::element_order(Value a) const {
    if (a == 0) {
        throw Error(ErrorKind::ZeroElement, "zero has no multiplicative order");
    }
    std::uint64_t order = q_ - 1;
    for (auto [r, e] : group_factors_) {
        for (unsigned i = 0; i < e; i++) {
            if (pow(a, order / r) != 1) {
                break;
            }
            order /= r;
        }
    }
    return order;
}

Field::Value Field::primitive_element() const {
    for (std::uint64_t rank = 1; rank < q_; rank++) {
        Value v = from_canonical_rank(rank);
        if (element_order(v) == q_ - 1) {
            return v;
        }
    }
    throw Error(ErrorKind::NoSuchRoot, "no primitive element found");
}

Field::Value Field::primitive_root_of_unity(std::uint64_t n) const {
    if (n == 0 || (q_ - 1) % n != 0) {
        throw Error(
            ErrorKind::NoSuchRoot,
            "no primitive " + std::to_string(n) + "-th root of unity in " + to_string() + " (" + std::to_string(n) +
                " does not divide " + std::to_string(q_ - 1) + ")");
    }
    if (n == 1) {
        return 1;
    }
    auto n_factors = factorize(n);
    if (n > (std::uint64_t{1} << 20)) {
        // Large n: elements of order n are dense enough to scan directly.
        for (std::uint64_t rank = 1; rank < q_; rank++) {
            Value v = from_canonical_rank(rank);
            if (pow(v, n) != 1) {
                continue;
            }
            bool exact = std::all_of(n_factors.begin(), n_factors.end(), [&](const auto &f) {
                return pow(v, n / f.first) != 1;
            });
            if (exact) {
                return v;
            }
        }
    }
    // Order-n elements are exactly the powers w^j, gcd(j, n) = 1, of w = beta^((q-1)/n).
    Value w = pow(primitive_element(), (q_ - 1) / n);
    Value current = 1;
    Value best = 0;
    std::uint64_t best_rank = UINT64_MAX;
    for (std::uint64_t j = 1; j <= n; j++) {
        current = mul(current, w);
        if (std::gcd(j, n) != 1) {
            continue;
        }
        std::uint64_t rank = canonical_rank(current);
        if (rank < best_rank) {
            best_rank = rank;
            best = current;
        }
    }
    return best;
}

FieldElement Field::element(Value a) const {
    if (!is_valid(a)) {
        throw Error(ErrorKind::InvalidArgument, "value out of range for " + to_string());
    }
    return FieldElement(shared_from_this(), a);
}

FieldElement Field::element_from_integer(std::int64_t k) const {
    return FieldElement(shared_from_this(), from_integer(k));
}

FieldElement::FieldElement(FieldPtr field, Field::Value value) : field_(std::move(field)), value_(value) {
}

void FieldElement::require_same_field(const FieldElement &other) const {
    if (!field_->same_as(*other.field_)) {
        throw Error(
            ErrorKind::FieldMismatch, "elements of " + field_->to_string() + " and " + other.field_->to_string());
    }
}

FieldElement FieldElement::operator+(const FieldElement &other) const {
    require_same_field(other);
    return {field_, field_->add(value_, other.value_)};
}

FieldElement FieldElement::operator-(const FieldElement &other) const {
    require_same_field(other);
    return {field_, field_->sub(value_, other.value_)};
}

FieldElement FieldElement::operator*(const FieldElement &other) const {
    require_same_field(other);
    return {field_, field_->mul(value_, other.value_)};
}

FieldElement FieldElement::operator/(const FieldElement &other) const {
    require_same_field(other);
    return {field_, field_->div(value_, other.value_)};
}

FieldElement FieldElement::operator-() const {
    return {field_, field_->neg(value_)};
}

bool FieldElement::operator==(const FieldElement &other) const {
    require_same_field(other);
    return value_ == other.value_;
}

FieldElement FieldElement::inverse() const {
    return {field_, field_->inv(value_)};
}

FieldElement FieldElement::pow(std::uint64_t exponent) const {
    return {field_, field_->pow(value_, exponent)};
}

std::string FieldElement::to_string() const {
    return field_->format(value_);
}

FieldPtr field_create(std::uint64_t p, unsigned m, std::uint64_t max_order) {
    return Field::create(p, m, max_order);
}

FieldElement add(const FieldElement &a, const FieldElement &b) {
    return a + b;
}

FieldElement sub(const FieldElement &a, const FieldElement &b) {
    return a - b;
}

FieldElement mul(const FieldElement &a, const FieldElement &b) {
    return a * b;
}

FieldElement inv(const FieldElement &a) {
    return a.inverse();
}

FieldElement pow(const FieldElement &a, std::uint64_t exponent) {
    return a.pow(exponent);
}

std::uint64_t element_order(const FieldElement &a) {
    return a.field()->element_order(a.value());
}

FieldElement find_primitive_root_of_unity(const FieldPtr &field, std::uint64_t n) {
    return field->element(field->primitive_root_of_unity(n));
}

FieldElement frobenius_power(const FieldElement &a, std::uint64_t l) {
    return a.pow(l);
}

}  // namespace qmds
