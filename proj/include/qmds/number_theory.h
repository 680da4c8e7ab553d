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

#ifndef QMDS_NUMBER_THEORY_H
#define QMDS_NUMBER_THEORY_H

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace qmds {

// Deterministic trial division.
bool is_prime(std::uint64_t x);

// Smallest prime strictly greater than x.
std::uint64_t next_prime(std::uint64_t x);

// Prime factorization as (prime, exponent) pairs in increasing prime order.
std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t x);

std::uint64_t euler_phi(std::uint64_t x);

std::uint64_t mul_mod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t pow_mod(std::uint64_t base, std::uint64_t exponent, std::uint64_t m);

// Inverse of a modulo m via extended Euclid, or nullopt when gcd(a, m) != 1.
std::optional<std::uint64_t> inverse_mod(std::uint64_t a, std::uint64_t m);

// Multiplicative order of t modulo v (the smallest e >= 1 with t^e = 1 mod v).
// Throws NotCoprime when gcd(t, v) != 1 and InvalidArgument when v < 2.
std::uint64_t order_mod(std::uint64_t t, std::uint64_t v);

// base^exponent, or nullopt when the result exceeds limit.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exponent, std::uint64_t limit);

// Binomial coefficient saturated at limit.
std::uint64_t binomial_saturated(std::uint64_t n, std::uint64_t k, std::uint64_t limit);

}  // namespace qmds

#endif
