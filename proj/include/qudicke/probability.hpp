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
 * Optimal product-state parameters and postselection success probabilities.
 */
#pragma once

#include <cmath>
#include <numeric>
#include <optional>
#include <vector>

#include "combinatorics.hpp"
#include "dicke.hpp"
#include "level_sets.hpp"

namespace qudicke {

struct ProbabilityReport {
    /// p for spin-s (one entry), xi for SU(d) (d entries).
    std::vector<double> optimal_parameter;
    double probability = 0.0;
    double expected_repetitions = 0.0;
    /// Absent where the Stirling form is singular (k = 0 or k = 2sn).
    std::optional<double> stirling;
};

namespace detail {
inline double log_binomial(double a, double b) {
    return std::lgamma(a + 1.0) - std::lgamma(b + 1.0) - std::lgamma(a - b + 1.0);
}

/// c * log(x) with 0 * log(0) = 0.
inline double xlogy(double c, double x) {
    if (c == 0.0) {
        return 0.0;
    }
    return c * std::log(x);
}

/// x^x as an exact integer, with 0^0 = 1.
inline BigInt self_power(std::size_t x) {
    BigInt r = 1;
    for (std::size_t i = 0; i < x; ++i) {
        r *= x;
    }
    return r;
}
} // namespace detail

/// P(k; p) = C(2sn, k) p^k (1-p)^(2sn-k), evaluated in log space.
inline double acceptance_probability_spin_s(std::size_t n, std::size_t twice_s,
                                            std::size_t k, double p) {
    DickeSpecSpinS{n, twice_s, k}.validate();
    detail::require(p >= 0.0 && p <= 1.0, "p must lie in [0, 1]");
    const double total = static_cast<double>(twice_s * n);
    const double kk = static_cast<double>(k);
    if ((p == 0.0 && k > 0) || (p == 1.0 && k < twice_s * n)) {
        return 0.0;
    }
    return std::exp(detail::log_binomial(total, kk) + detail::xlogy(kk, p) +
                    detail::xlogy(total - kk, 1.0 - p));
}

/// p* = k / 2sn with exact P(k) = (2sn)!/(2sn)^(2sn) k^k/k! (2sn-k)^(2sn-k)/(2sn-k)!.
inline ProbabilityReport probability_spin_s(std::size_t n, std::size_t twice_s,
                                            std::size_t k) {
    DickeSpecSpinS{n, twice_s, k}.validate();
    const std::size_t total = twice_s * n;
    ProbabilityReport r;
    r.optimal_parameter = {static_cast<double>(k) / static_cast<double>(total)};
    const BigInt num = binomial(static_cast<std::int64_t>(total),
                                static_cast<std::int64_t>(k)) *
                       detail::self_power(k) * detail::self_power(total - k);
    r.probability = to_double(ratio(num, detail::self_power(total)));
    r.expected_repetitions = 1.0 / r.probability;
    if (k != 0 && k != total) {
        const double t = static_cast<double>(total);
        const double kk = static_cast<double>(k);
        r.stirling = std::sqrt(t / (2.0 * kPi * kk * (t - kk)));
    }
    return r;
}

/// P(k; xi) = prod xi_i^(2 k_i) multinom(n, k) / (xi . xi)^n, in log space.
inline double acceptance_probability_sud(std::size_t n, const Occupation &kvec,
                                         const std::vector<double> &xi) {
    DickeSpecSUD{n, kvec}.validate();
    detail::require(xi.size() == kvec.size(), "xi has wrong length");
    double norm2 = 0.0;
    for (auto x : xi) {
        detail::require(x >= 0.0, "xi entries must be nonnegative");
        norm2 += x * x;
    }
    detail::require(norm2 > 0.0, "xi must be nonzero");
    double lg = std::lgamma(static_cast<double>(n) + 1.0) -
                static_cast<double>(n) * std::log(norm2);
    for (std::size_t i = 0; i < kvec.size(); ++i) {
        if (kvec[i] == 0) {
            continue;
        }
        if (xi[i] == 0.0) {
            return 0.0;
        }
        const double ki = static_cast<double>(kvec[i]);
        lg += 2.0 * ki * std::log(xi[i]) - std::lgamma(ki + 1.0);
    }
    return std::exp(lg);
}

/// xi_i = sqrt(k_i / n), P = n!/n^n prod k_i^k_i / k_i!.
inline ProbabilityReport probability_sud(std::size_t n, const Occupation &kvec) {
    DickeSpecSUD{n, kvec}.validate();
    ProbabilityReport r;
    BigInt num = factorial(n);
    BigInt den = detail::self_power(n);
    double stirling_den = std::pow(2.0 * kPi, static_cast<double>(kvec.size() - 1));
    for (auto k : kvec) {
        r.optimal_parameter.push_back(
            std::sqrt(static_cast<double>(k) / static_cast<double>(n)));
        num *= detail::self_power(k);
        den *= factorial(k);
        if (k != 0) {
            stirling_den *= static_cast<double>(k);
        }
    }
    r.probability = to_double(ratio(num, den));
    r.expected_repetitions = 1.0 / r.probability;
    r.stirling = std::sqrt(static_cast<double>(n) / stirling_den);
    return r;
}

} // namespace qudicke
