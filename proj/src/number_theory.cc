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

#include "qmds/number_theory.h"

#include <algorithm>
#include <numeric>
#include <string>

#include "qmds/error.h"

namespace qmds {

bool is_prime(std::uint64_t x) {
    if (x < 2) {
        return false;
    }
    if (x < 4) {
        return true;
    }
    if (x % 2 == 0 || x % 3 == 0) {
        return false;
    }
    for (std::uint64_t d = 5; d <= x / d; d += 6) {
        if (x % d == 0 || x % (d + 2) == 0) {
            return false;
        }
    }
    return true;
}

std::uint64_t next_prime(std::uint64_t x) {
    std::uint64_t c = x + 1;
    while (!is_prime(c)) {
        c++;
    }
    return c;
}

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t x) {
    std::vector<std::pair<std::uint64_t, unsigned>> out;
    for (std::uint64_t d = 2; d <= x / d; d += (d == 2 ? 1 : 2)) {
        unsigned e = 0;
        while (x % d == 0) {
            x /= d;
            e++;
        }
        if (e) {
            out.emplace_back(d, e);
        }
    }
    if (x > 1) {
        out.emplace_back(x, 1);
    }
    return out;
}

std::uint64_t euler_phi(std::uint64_t x) {
    std::uint64_t result = x;
    for (auto [p, e] : factorize(x)) {
        result = result / p * (p - 1);
    }
    return result;
}

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
    return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m) {
    std::uint64_t result = 1 % m;
    base %= m;
    while (exponent) {
        if (exponent & 1) {
            result = mul_mod(result, base, m);
        }
        base = mul_mod(base, base, m);
        exponent >>= 1;
    }
    return result;
}

std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t m) {
    std::int64_t old_r = static_cast<std::int64_t>(a % m), r = static_cast<std::int64_t>(m);
    std::int64_t old_s = 1, s = 0;
    while (r != 0) {
        std::int64_t quotient = old_r / r;
        std::int64_t t = old_r - quotient * r;
        old_r = r;
        r = t;
        t = old_s - quotient * s;
        old_s = s;
        s = t;
    }
    if (old_r != 1) {
        if (m == 1) {
            return 0;
        }
        return std::nullopt;
    }
    std::int64_t mm = static_cast<std::int64_t>(m);
    return static_cast<std::uint64_t>(((old_s % mm) + mm) % mm);
}

std::uint64_t order_mod(std::uint64_t t, std::uint64_t v) {
    if (v < 2) {
        throw Error(ErrorKind::InvalidArgument, "order_mod requires modulus >= 2, got " + std::to_string(v));
    }
    if (std::gcd(t, v) != 1) {
        throw Error(
            ErrorKind::NotCoprime, std::to_string(t) + " and " + std::to_string(v) + " are not coprime");
    }
    // The order divides phi(v); strip prime factors while the power stays 1.
    std::uint64_t order = euler_phi(v);
    for (auto [p, e] : factorize(order)) {
        for (unsigned i = 0; i < e; i++) {
            if (pow_mod(t, order / p, v) != 1) {
                break;
            }
            order /= p;
        }
    }
    return order;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t limit) {
    std::uint64_t result = 1;
    for (std::uint64_t i = 0; i < exponent; i++) {
        if (base != 0 && result > limit / base) {
            return std::nullopt;
        }
        result *= base;
    }
    if (result > limit) {
        return std::nullopt;
    }
    return result;
}

std::uint64_t binomial_saturated(std::uint64_t n, std::uint64_t k, std::uint64_t limit) {
    if (k > n) {
        return 0;
    }
    k = std::min(k, n - k);
    unsigned __int128 result = 1;
    for (std::uint64_t i = 1; i <= k; i++) {
        result = result * (n - k + i) / i;
        if (result > limit) {
            return limit;
        }
    }
    return static_cast<std::uint64_t>(result);
}

}  // namespace qmds
