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
 * Canonical MPS coefficients for both Dicke families, and contraction of the
 * site matrices into a full statevector.
 */
#pragma once

#include <cmath>
#include <cstdint>
#include <vector>

#include "combinatorics.hpp"
#include "dicke.hpp"
#include "level_sets.hpp"

namespace qudicke {

/**
 * gamma^{(i)}_{j,m} = sqrt(C(2s(n-i), k-j-m) C(2s, m) / C(2s(n-i+1), k-j)),
 * zero whenever the denominator vanishes.
 */
inline double gamma_spin_s(std::size_t n, std::size_t twice_s, std::size_t k,
                           std::size_t i, std::size_t j, std::size_t m) {
    detail::require(i >= 1 && i <= n, "gamma_spin_s: site out of 1..n");
    detail::require(j <= k, "gamma_spin_s: ancilla value exceeds k");
    detail::require(m <= twice_s, "gamma_spin_s: digit exceeds 2s");
    const auto s2 = static_cast<std::int64_t>(twice_s);
    const auto rest = static_cast<std::int64_t>(n - i);
    const auto kj = static_cast<std::int64_t>(k) - static_cast<std::int64_t>(j);
    const BigInt den = binomial(s2 * (rest + 1), kj);
    if (den == 0) {
        return 0.0;
    }
    const BigInt num = binomial(s2 * rest, kj - static_cast<std::int64_t>(m)) *
                       binomial(s2, static_cast<std::int64_t>(m));
    return std::sqrt(to_double(ratio(num, den)));
}

/**
 * gamma^{(i)}_{J(a),m} = sqrt(multinom(n-i, k-a-e_m) / multinom(n-i+1, k-a))
 * for a in A^{i-1}(k); zero unless a + e_m is in A^i(k).
 */
inline double gamma_sud(std::size_t n, const Occupation &kvec, std::size_t i,
                        const Occupation &a, std::size_t m) {
    detail::require(i >= 1 && i <= n, "gamma_sud: site out of 1..n");
    detail::require(a.size() == kvec.size(), "gamma_sud: a has wrong length");
    detail::require(m < kvec.size(), "gamma_sud: level out of range");
    std::size_t sum = 0;
    for (std::size_t j = 0; j < a.size(); ++j) {
        detail::require(a[j] <= kvec[j], "gamma_sud: a exceeds kvec");
        sum += a[j];
    }
    detail::require(sum + 1 == i, "gamma_sud: a is not in level set i-1");
    if (a[m] + 1 > kvec[m]) {
        return 0.0;
    }
    Occupation rem(kvec.size());
    for (std::size_t j = 0; j < kvec.size(); ++j) {
        rem[j] = kvec[j] - a[j];
    }
    const BigInt den = multinomial(n - i + 1, rem);
    --rem[m];
    const BigInt num = multinomial(n - i, rem);
    return std::sqrt(to_double(ratio(num, den)));
}

/// <k| A_n^{m_n} ... A_1^{m_1} |0> for every digit string, by explicit
/// (k+1)x(k+1) matrix-vector products.
inline StateVector contract_mps_spin_s(const DickeSpecSpinS &spec) {
    spec.validate();
    const std::size_t chi = spec.k + 1;
    const auto reg = uniform_register(spec.n, spec.qudit_dim());
    StateVector out(reg);
    // A[i-1][m] as dense chi x chi, row j' column j
    std::vector<std::vector<std::vector<double>>> sites(spec.n);
    for (std::size_t i = 1; i <= spec.n; ++i) {
        auto &site = sites[i - 1];
        site.assign(spec.qudit_dim(), std::vector<double>(chi * chi, 0.0));
        for (std::size_t m = 0; m <= spec.twice_s; ++m) {
            for (std::size_t j = 0; j < chi; ++j) {
                if (j + m < chi) {
                    site[m][(j + m) * chi + j] =
                        gamma_spin_s(spec.n, spec.twice_s, spec.k, i, j, m);
                }
            }
        }
    }
    detail::for_each_basis(reg, [&](index_t idx, const Digits &d, std::size_t) {
        std::vector<double> v(chi, 0.0), w(chi);
        v[0] = 1.0;
        for (std::size_t i = 0; i < spec.n; ++i) {
            const auto &a = sites[i][d[i]];
            for (std::size_t r = 0; r < chi; ++r) {
                double acc = 0.0;
                for (std::size_t c = 0; c < chi; ++c) {
                    acc += a[r * chi + c] * v[c];
                }
                w[r] = acc;
            }
            std::swap(v, w);
        }
        if (v[spec.k] != 0.0) {
            out.set(idx, v[spec.k]);
        }
    });
    return out;
}

/// <0| A_n^{m_n} ... A_1^{m_1} |0> with A_i^m mapping labels of A^{i-1} to
/// labels of A^i.
inline StateVector contract_mps_sud(const DickeSpecSUD &spec) {
    spec.validate();
    const LevelSetIndex levels(spec.kvec);
    const auto reg = uniform_register(spec.n, spec.d());
    StateVector out(reg);
    const std::size_t d = spec.d();
    // sites[i-1][m] is D^i x D^{i-1}
    std::vector<std::vector<std::vector<double>>> sites(spec.n);
    for (std::size_t i = 1; i <= spec.n; ++i) {
        const auto rows = levels.cardinality(i);
        const auto cols = levels.cardinality(i - 1);
        auto &site = sites[i - 1];
        site.assign(d, std::vector<double>(rows * cols, 0.0));
        for (const auto &a : levels.level(i - 1)) {
            const auto col = levels.label(i - 1, a);
            for (std::size_t m = 0; m < d; ++m) {
                Occupation next = a;
                ++next[m];
                if (!levels.contains(i, next)) {
                    continue;
                }
                site[m][levels.label(i, next) * cols + col] =
                    gamma_sud(spec.n, spec.kvec, i, a, m);
            }
        }
    }
    detail::for_each_basis(reg, [&](index_t idx, const Digits &digits, std::size_t) {
        std::vector<double> v{1.0};
        for (std::size_t i = 1; i <= spec.n; ++i) {
            const auto rows = levels.cardinality(i);
            const auto cols = levels.cardinality(i - 1);
            const auto &a = sites[i - 1][digits[i - 1]];
            std::vector<double> w(rows, 0.0);
            for (std::size_t r = 0; r < rows; ++r) {
                for (std::size_t c = 0; c < cols; ++c) {
                    w[r] += a[r * cols + c] * v[c];
                }
            }
            v = std::move(w);
        }
        if (v[0] != 0.0) {
            out.set(idx, v[0]);
        }
    });
    return out;
}

} // namespace qudicke
