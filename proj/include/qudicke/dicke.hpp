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
 * Problem descriptors and closed-form Dicke states.
 */
#pragma once

#include <cmath>
#include <numeric>
#include <string>
#include <utility>
#include <vector>

#include "combinatorics.hpp"
#include "state.hpp"

namespace qudicke {

/// Spin-s Dicke target on n qudits of dimension 2s+1, charge k.
struct DickeSpecSpinS {
    std::size_t n = 1;
    std::size_t twice_s = 1; ///< 2s, so s = 1/2 is stored as 1
    std::size_t k = 0;

    [[nodiscard]] std::size_t qudit_dim() const { return twice_s + 1; }
    [[nodiscard]] std::size_t max_charge() const { return twice_s * n; }
    [[nodiscard]] double s() const { return static_cast<double>(twice_s) / 2.0; }

    void validate() const {
        detail::require(n >= 1, "spin-s spec: n must be >= 1");
        detail::require(twice_s >= 1, "spin-s spec: s must be >= 1/2");
        detail::require(k <= max_charge(),
                        "spin-s spec: k=" + std::to_string(k) +
                            " exceeds 2sn=" + std::to_string(max_charge()));
    }
};

/// SU(d) Dicke target with occupation vector kvec (sum n).
struct DickeSpecSUD {
    std::size_t n = 1;
    std::vector<std::size_t> kvec;

    [[nodiscard]] std::size_t d() const { return kvec.size(); }

    void validate() const {
        detail::require(n >= 1, "SU(d) spec: n must be >= 1");
        detail::require(kvec.size() >= 2, "SU(d) spec: need d >= 2 levels");
        const auto total = std::accumulate(kvec.begin(), kvec.end(), std::size_t{0});
        detail::require(total == n, "SU(d) spec: kvec sums to " +
                                        std::to_string(total) + ", expected n=" +
                                        std::to_string(n));
    }
};

inline QuditRegister uniform_register(std::size_t n, std::size_t dim,
                                      const std::string &prefix = "sys") {
    std::vector<Wire> wires;
    wires.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        wires.push_back({dim, prefix + std::to_string(i + 1)});
    }
    return QuditRegister(std::move(wires));
}

namespace detail {

/// Calls f(index, digits, digit_sum) for every basis string of the register.
template <class F> void for_each_basis(const QuditRegister &reg, F &&f) {
    Digits digits(reg.size(), 0);
    const index_t total = reg.total_dimension();
    std::size_t sum = 0;
    for (index_t idx = 0; idx < total; ++idx) {
        f(idx, digits, sum);
        for (std::size_t w = 0; w < digits.size(); ++w) {
            if (++digits[w] < reg.dim(w)) {
                ++sum;
                break;
            }
            sum -= digits[w] - 1;
            digits[w] = 0;
        }
    }
}

} // namespace detail

/**
 * sqrt(prod_i C(2s, m_i) / C(2sn, k)) on every digit string m with sum k.
 * Ratios are formed exactly before conversion to double.
 */
inline StateVector spin_s_dicke(const DickeSpecSpinS &spec) {
    spec.validate();
    const auto reg = uniform_register(spec.n, spec.qudit_dim());
    StateVector out(reg);
    std::vector<BigInt> row(spec.qudit_dim());
    for (std::size_t m = 0; m <= spec.twice_s; ++m) {
        row[m] = binomial(static_cast<std::int64_t>(spec.twice_s),
                          static_cast<std::int64_t>(m));
    }
    const BigInt den = binomial(static_cast<std::int64_t>(spec.max_charge()),
                                static_cast<std::int64_t>(spec.k));
    detail::for_each_basis(reg, [&](index_t idx, const Digits &d, std::size_t sum) {
        if (sum != spec.k) {
            return;
        }
        BigInt num = 1;
        for (auto m : d) {
            num *= row[m];
        }
        out.set(idx, std::sqrt(to_double(ratio(num, den))));
    });
    return out;
}

/// Uniform superposition over all arrangements of the multiset of kvec.
inline StateVector sud_dicke(const DickeSpecSUD &spec) {
    spec.validate();
    const auto reg = uniform_register(spec.n, spec.d());
    StateVector out(reg);
    const double amp =
        1.0 / std::sqrt(to_double(BigRational(multinomial(spec.n, spec.kvec))));
    std::vector<std::size_t> counts(spec.d());
    detail::for_each_basis(reg, [&](index_t idx, const Digits &d, std::size_t) {
        std::fill(counts.begin(), counts.end(), 0);
        for (auto m : d) {
            ++counts[m];
        }
        if (counts == spec.kvec) {
            out.set(idx, amp);
        }
    });
    return out;
}

/// Applies the digit reversal m -> 2s - m on every wire.
template <AmplitudeState S> S apply_charge_conjugation(const S &state, std::size_t twice_s) {
    const auto &reg = state.reg();
    for (std::size_t w = 0; w < reg.size(); ++w) {
        detail::require(reg.dim(w) == twice_s + 1,
                        "charge conjugation: wire '" + reg.label(w) +
                            "' has dimension " + std::to_string(reg.dim(w)) +
                            ", expected 2s+1=" + std::to_string(twice_s + 1));
    }
    S out = state.empty_like();
    state.for_each([&](index_t idx, cplx a) {
        auto d = reg.unflatten(idx);
        for (auto &m : d) {
            m = twice_s - m;
        }
        out.set(reg.flatten(d), a);
    });
    return out;
}

struct Moments {
    double mean;
    double variance;
};

namespace detail {
template <AmplitudeState S, class Charge>
Moments charge_moments(const S &state, Charge &&charge) {
    const auto &reg = state.reg();
    auto total_charge = [&](index_t idx) {
        double c = 0.0;
        for (std::size_t q = 0; q < reg.size(); ++q) {
            c += charge(reg.digit(idx, q));
        }
        return c;
    };
    double p = 0.0, mean = 0.0;
    state.for_each([&](index_t idx, cplx a) {
        p += std::norm(a);
        mean += std::norm(a) * total_charge(idx);
    });
    mean /= p;
    double var = 0.0;
    state.for_each([&](index_t idx, cplx a) {
        const double dev = total_charge(idx) - mean;
        var += std::norm(a) * dev * dev;
    });
    return {mean, var / p};
}
} // namespace detail

/// Mean and variance of K = sum of digits.
template <AmplitudeState S>
Moments charge_moments_spin_s(const S &state, std::size_t twice_s) {
    for (std::size_t w = 0; w < state.reg().size(); ++w) {
        detail::require(state.reg().dim(w) == twice_s + 1,
                        "charge moments: wire dimension is not 2s+1");
    }
    return detail::charge_moments(
        state, [](std::size_t m) { return static_cast<double>(m); });
}

/// Mean and variance of K^(level) = number of qudits in `level`.
template <AmplitudeState S>
Moments charge_moments_sud(const S &state, std::size_t d, std::size_t level) {
    for (std::size_t w = 0; w < state.reg().size(); ++w) {
        detail::require(state.reg().dim(w) == d,
                        "charge moments: wire dimension is not d");
    }
    detail::require(level >= 1 && level < d, "charge moments: level out of 1..d-1");
    return detail::charge_moments(
        state, [level](std::size_t m) { return m == level ? 1.0 : 0.0; });
}

} // namespace qudicke
