// Copyright 2026 The qudicke Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/**
 * @file
 * Exact integer combinatorics and composition enumeration.
 */
#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cstdint>
#include <numeric>
#include <span>
#include <vector>

#include "core.hpp"

namespace qudicke {

using BigInt = boost::multiprecision::cpp_int;
using BigRational = boost::multiprecision::cpp_rational;

/// C(a, b); zero when b < 0 or b > a.
inline BigInt binomial(std::int64_t a, std::int64_t b) {
    detail::require(a >= 0, "binomial: a must be nonnegative");
    if (b < 0 || b > a) {
        return 0;
    }
    b = std::min(b, a - b);
    BigInt r = 1;
    for (std::int64_t i = 1; i <= b; ++i) {
        r *= a - b + i;
        r /= i;
    }
    return r;
}

inline BigInt factorial(std::size_t n) {
    BigInt r = 1;
    for (std::size_t i = 2; i <= n; ++i) {
        r *= i;
    }
    return r;
}

/// n! / prod k_i!
inline BigInt multinomial(std::size_t n, std::span<const std::size_t> kvec) {
    const auto total = std::accumulate(kvec.begin(), kvec.end(), std::size_t{0});
    detail::require(total == n, "multinomial: occupations sum to " +
                                    std::to_string(total) + ", expected " +
                                    std::to_string(n));
    BigInt r = 1;
    std::size_t placed = 0;
    for (auto k : kvec) {
        placed += k;
        r *= binomial(static_cast<std::int64_t>(placed),
                      static_cast<std::int64_t>(k));
    }
    return r;
}

inline double to_double(const BigRational &q) {
    return q.convert_to<double>();
}

inline BigRational ratio(const BigInt &num, const BigInt &den) {
    return BigRational(num, den);
}

/// All length-d vectors of nonnegative integers summing to n, lexicographic.
inline std::vector<std::vector<std::size_t>> compositions(std::size_t n,
                                                          std::size_t d) {
    std::vector<std::vector<std::size_t>> out;
    if (d == 0) {
        return out;
    }
    std::vector<std::size_t> cur(d, 0);
    auto rec = [&](auto &&self, std::size_t pos, std::size_t left) -> void {
        if (pos + 1 == d) {
            cur[pos] = left;
            out.push_back(cur);
            return;
        }
        for (std::size_t v = 0; v <= left; ++v) {
            cur[pos] = v;
            self(self, pos + 1, left - v);
        }
    };
    rec(rec, 0, n);
    return out;
}

/// ceil(log2(x)) for x >= 1.
inline std::size_t ceil_log2(std::size_t x) {
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < x) {
        ++bits;
    }
    return bits;
}

} // namespace qudicke
