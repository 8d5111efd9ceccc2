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
 * Deterministic sequential preparation from canonical MPS representations.
 *
 * Spin-s register: wires [0, n) are the system qudits (site i on wire i-1),
 * wire n is the MPS ancilla of dimension k+1. SU(d) register: wires [0, n)
 * are the system, wire n the MPS ancilla (dimension max_i D^i(k)), wire n+1
 * the flag qubit.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <utility>
#include <vector>

#include "circuit.hpp"
#include "dicke.hpp"
#include "level_sets.hpp"
#include "mps.hpp"

namespace qudicke {

/**
 * Angles theta_m = 2 acos(gamma_m / prod_{p<m} sin(theta_p / 2)) so that
 * Rot(0, theta_0), Rot(1, theta_1), ... applied in that order to |0> yields
 * sum_m gamma_m |m>. For a normalized gamma the last amplitude is implied
 * and one fewer angle is returned. Evaluated as 2 atan2(|gamma_{>m}|, gamma_m).
 */
inline std::vector<double> rotation_cascade_angles(const std::vector<double> &gammas) {
    double sum2 = 0.0;
    for (auto g : gammas) {
        detail::require(g >= 0.0, "rotation cascade: amplitudes must be nonnegative");
        sum2 += g * g;
    }
    detail::require(sum2 <= 1.0 + 1e-9,
                    "rotation cascade: sum of squares exceeds 1");
    const bool normalized = std::abs(sum2 - 1.0) <= 1e-9;
    std::vector<double> g(gammas);
    if (!normalized) {
        // the remainder lands on the level after the last one given
        g.push_back(std::sqrt(std::max(0.0, 1.0 - sum2)));
    }
    const std::size_t count = g.empty() ? 0 : g.size() - 1;
    // tail[m] = |(g_m, g_{m+1}, ...)|
    std::vector<double> tail(g.size() + 1, 0.0);
    for (std::size_t m = g.size(); m-- > 0;) {
        tail[m] = std::hypot(tail[m + 1], g[m]);
    }
    std::vector<double> angles(count, 0.0);
    for (std::size_t m = 0; m < count; ++m) {
        angles[m] = 2.0 * std::atan2(tail[m + 1], g[m]);
    }
    return angles;
}

/// Rot gates preparing sum_m amplitudes[m] |m> from |0> on `wire`.
inline std::vector<GateOp> rotation_cascade(std::size_t wire,
                                            const std::vector<double> &amplitudes) {
    std::vector<GateOp> out;
    const auto angles = rotation_cascade_angles(amplitudes);
    for (std::size_t m = 0; m < angles.size(); ++m) {
        out.push_back(gate::rot(wire, m, angles[m]));
    }
    return out;
}

// ---------------------------------------------------------------- spin-s

struct SpinSWires {
    std::size_t system;
    std::size_t ancilla;
};

/// [lo, hi) range of l for which I^{(i)}_l is emitted in U_i.
inline std::pair<std::size_t, std::size_t>
spin_s_active_range(std::size_t n, std::size_t twice_s, std::size_t k, std::size_t i) {
    const auto lo_signed = static_cast<std::int64_t>(twice_s) *
                               (static_cast<std::int64_t>(i) -
                                static_cast<std::int64_t>(n) - 1) +
                           static_cast<std::int64_t>(k);
    const std::size_t lo = lo_signed > 0 ? static_cast<std::size_t>(lo_signed) : 0;
    const std::size_t hi = std::min(twice_s * i, k);
    return {lo, std::max(lo, hi)};
}

/// Number of I-operators in the pruned spin-s sequential circuit.
inline std::size_t spin_s_iop_count(std::size_t n, std::size_t twice_s, std::size_t k) {
    std::size_t total = 0;
    for (std::size_t i = 1; i <= n; ++i) {
        const auto [lo, hi] = spin_s_active_range(n, twice_s, k, i);
        total += hi - lo;
    }
    return total;
}

/**
 * I^{(i)}_l: X on the ancilla, SUM^dagger from the system, 2s rotations on
 * the system controlled on ancilla value l+1 (mod k+1), SUM, X^dagger.
 * Empty when the gamma row for (i, l) vanishes.
 */
inline std::vector<GateOp> build_I_spin_s(std::size_t n, std::size_t twice_s,
                                          std::size_t k, std::size_t i,
                                          std::size_t l, SpinSWires wires) {
    detail::require(k >= 1, "build_I_spin_s: k must be >= 1");
    detail::require(i >= 1 && i <= n, "build_I_spin_s: site out of 1..n");
    detail::require(l <= k, "build_I_spin_s: l=" + std::to_string(l) +
                                " out of range 0..k=" + std::to_string(k));
    std::vector<double> row(twice_s + 1);
    bool any = false;
    for (std::size_t m = 0; m <= twice_s; ++m) {
        row[m] = gamma_spin_s(n, twice_s, k, i, l, m);
        any = any || row[m] != 0.0;
    }
    if (!any) {
        return {};
    }
    const std::size_t chi = k + 1;
    const std::size_t ctrl = (l + 1) % chi;
    std::vector<GateOp> out;
    out.push_back(gate::xd(wires.ancilla));
    out.push_back(gate::sum_dag(wires.ancilla, wires.system));
    for (auto &r : rotation_cascade(wires.system, row)) {
        out.push_back(gate::controlled(std::move(r), wires.ancilla, ctrl));
    }
    out.push_back(gate::sum(wires.ancilla, wires.system));
    out.push_back(gate::xd_dag(wires.ancilla));
    return out;
}

struct SequentialOptions {
    /// Emit only I-operators in the active l-range (otherwise l = 0..k-1).
    bool prune_active_range = true;
    /// For k > sn, prepare 2sn-k and apply charge conjugation afterwards.
    bool duality_for_upper_half = false;
};

inline DenseMatrix charge_conjugation_matrix(std::size_t twice_s) {
    const std::size_t dim = twice_s + 1;
    DenseMatrix m{dim, std::vector<cplx>(dim * dim)};
    for (std::size_t x = 0; x < dim; ++x) {
        m.entries[(twice_s - x) * dim + x] = 1.0;
    }
    return m;
}

/**
 * U_n ... U_1 |0>|0...0> = |k>|D^{(s)}_{n,k}>. The accept rule asserts the
 * final ancilla value, which holds with probability one.
 */
inline Circuit build_sequential_spin_s(const DickeSpecSpinS &spec,
                                       SequentialOptions opts = {}) {
    spec.validate();
    const std::size_t total = spec.max_charge();
    const bool conjugate = opts.duality_for_upper_half && 2 * spec.k > total &&
                           spec.k != total;
    const std::size_t k = conjugate ? total - spec.k : spec.k;

    auto wires = uniform_register(spec.n, spec.qudit_dim()).wires();
    wires.push_back({std::max<std::size_t>(2, k + 1), "mps"});
    Circuit c{QuditRegister(std::move(wires)), {}, std::nullopt, spec.n};
    const std::size_t anc = spec.n;

    if (k == total) {
        // |2s ... 2s>, ancilla |2sn>
        for (std::size_t w = 0; w < spec.n; ++w) {
            c.append(gate::xd_dag(w));
        }
        c.append(gate::xd_dag(anc));
    } else if (k > 0) {
        for (std::size_t i = 1; i <= spec.n; ++i) {
            auto [lo, hi] = spin_s_active_range(spec.n, spec.twice_s, k, i);
            if (!opts.prune_active_range) {
                lo = 0;
                hi = k;
            }
            for (std::size_t l = lo; l < hi; ++l) {
                c.append(build_I_spin_s(spec.n, spec.twice_s, k, i, l, {i - 1, anc}));
            }
        }
    }
    if (conjugate) {
        for (std::size_t w = 0; w < spec.n; ++w) {
            c.append(gate::dense({w}, charge_conjugation_matrix(spec.twice_s)));
        }
    }
    c.set_accept_rule({{anc}, {k}});
    return c;
}

// ----------------------------------------------------------------- SU(d)

struct SudWires {
    std::size_t system;
    std::size_t ancilla;
    std::size_t flag;
};

/**
 * I^{(i)}_{J^{i-1}(a)}, always 3d gates:
 *   1. flag ^= [system = 0 and ancilla = J^{i-1}(a)]
 *   2. d-1 rotations on the system, controlled on flag = 1
 *   3. for each m: ancilla J^{i-1}(a) <-> J^i(a+e_m), controlled on system = m
 *      and flag = 1
 *   4. for each m: flag ^= [system = m and ancilla = J^i(a+e_m)]
 * Steps 3 and 4 emit an Id placeholder when a+e_m leaves the level set or
 * the swap would be trivial.
 */
inline std::vector<GateOp> build_I_sud(std::size_t n, const Occupation &kvec,
                                       std::size_t i, const Occupation &a,
                                       const LevelSetIndex &levels, SudWires wires) {
    detail::require(i >= 1 && i <= n, "build_I_sud: site out of 1..n");
    detail::require(levels.kvec() == kvec, "build_I_sud: level sets for another kvec");
    const std::size_t d = kvec.size();
    const std::size_t p = levels.label(i - 1, a);

    std::vector<double> row(d);
    std::vector<std::optional<std::size_t>> next_label(d);
    for (std::size_t m = 0; m < d; ++m) {
        row[m] = gamma_sud(n, kvec, i, a, m);
        Occupation next = a;
        ++next[m];
        if (levels.contains(i, next)) {
            next_label[m] = levels.label(i, next);
        }
    }
    const auto angles = rotation_cascade_angles(row);

    std::vector<GateOp> out;
    out.push_back(gate::controlled(gate::xd(wires.flag), {wires.system, 0},
                                   {wires.ancilla, p}));
    for (std::size_t m = 0; m + 1 < d; ++m) {
        const double theta = m < angles.size() ? angles[m] : 0.0;
        out.push_back(gate::controlled(gate::rot(wires.system, m, theta), wires.flag, 1));
    }
    for (std::size_t m = 0; m < d; ++m) {
        if (next_label[m] && *next_label[m] != p) {
            out.push_back(gate::controlled(gate::xswap(wires.ancilla, p, *next_label[m]),
                                           {wires.system, m}, {wires.flag, 1}));
        } else {
            out.push_back(gate::id(wires.ancilla));
        }
    }
    for (std::size_t m = 0; m < d; ++m) {
        if (next_label[m]) {
            out.push_back(gate::controlled(gate::xd(wires.flag), {wires.system, m},
                                           {wires.ancilla, *next_label[m]}));
        } else {
            out.push_back(gate::id(wires.flag));
        }
    }
    return out;
}

/// U_n ... U_1 |0>|0...0>|0> = |0>|D^n(k)>|0>; accept rule asserts the
/// ancilla and flag return to zero.
inline Circuit build_sequential_sud(const DickeSpecSUD &spec) {
    spec.validate();
    const LevelSetIndex levels(spec.kvec);
    auto wires = uniform_register(spec.n, spec.d()).wires();
    wires.push_back({std::max<std::size_t>(2, levels.max_cardinality()), "mps"});
    wires.push_back({2, "flag"});
    Circuit c{QuditRegister(std::move(wires)), {}, std::nullopt, spec.n};
    const SudWires base{0, spec.n, spec.n + 1};
    for (std::size_t i = 1; i <= spec.n; ++i) {
        for (const auto &a : levels.level(i - 1)) {
            c.append(build_I_sud(spec.n, spec.kvec, i, a, levels,
                                 {i - 1, base.ancilla, base.flag}));
        }
    }
    c.set_accept_rule({{base.ancilla, base.flag}, {0, 0}});
    return c;
}

/// 3d * sum_{i=1..n} D^{i-1}(k).
inline std::size_t sud_sequential_gate_count(const Occupation &kvec) {
    const LevelSetIndex levels(kvec);
    std::size_t total = 0;
    for (std::size_t i = 1; i <= levels.n(); ++i) {
        total += levels.cardinality(i - 1);
    }
    return 3 * kvec.size() * total;
}

} // namespace qudicke
