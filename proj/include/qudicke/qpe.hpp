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
 * Probabilistic preparation by charge postselection: QPE with a qubit bank,
 * qudit Hadamard test, and the constant-depth fan-out scheme, for both the
 * spin-s and SU(d) families.
 *
 * Every builder puts the system on wires [0, n) prepared in the optimal
 * product state (or an explicit override) and records the postselection in
 * the accept rule.
 */
#pragma once

#include <cmath>
#include <optional>
#include <string>
#include <vector>

#include "circuit.hpp"
#include "combinatorics.hpp"
#include "dicke.hpp"
#include "sequential.hpp"

namespace qudicke {

struct ProductPreparation {
    StateVector state;
    std::vector<GateOp> gates;
};

namespace detail {

inline StateVector product_state(std::size_t n, const std::vector<double> &single) {
    const auto reg = uniform_register(n, single.size());
    StateVector out(reg);
    for_each_basis(reg, [&](index_t idx, const Digits &d, std::size_t) {
        double a = 1.0;
        for (auto m : d) {
            a *= single[m];
        }
        if (a != 0.0) {
            out.set(idx, a);
        }
    });
    return out;
}

inline std::vector<GateOp> product_gates(std::size_t n, const std::vector<double> &single) {
    std::vector<GateOp> out;
    for (std::size_t w = 0; w < n; ++w) {
        auto seq = rotation_cascade(w, single);
        out.insert(out.end(), seq.begin(), seq.end());
    }
    return out;
}

} // namespace detail

/// Single-qudit amplitudes sqrt(C(2s,m) p^m (1-p)^(2s-m)).
inline std::vector<double> spin_s_product_amplitudes(std::size_t twice_s, double p) {
    detail::require(p >= 0.0 && p <= 1.0, "p must lie in [0, 1]");
    std::vector<double> c(twice_s + 1);
    for (std::size_t m = 0; m <= twice_s; ++m) {
        const double b = to_double(BigRational(binomial(static_cast<std::int64_t>(twice_s),
                                                        static_cast<std::int64_t>(m))));
        const double pm = m == 0 ? 1.0 : std::pow(p, static_cast<double>(m));
        const double qm =
            m == twice_s ? 1.0 : std::pow(1.0 - p, static_cast<double>(twice_s - m));
        c[m] = std::sqrt(b * pm * qm);
    }
    return c;
}

/// xi / |xi|.
inline std::vector<double> sud_product_amplitudes(const std::vector<double> &xi) {
    double norm2 = 0.0;
    for (auto x : xi) {
        detail::require(x >= 0.0, "xi entries must be nonnegative");
        norm2 += x * x;
    }
    detail::require(norm2 > 0.0, "xi must be nonzero");
    std::vector<double> out(xi);
    for (auto &x : out) {
        x /= std::sqrt(norm2);
    }
    return out;
}

inline ProductPreparation product_state_spin_s(std::size_t n, std::size_t twice_s,
                                               double p) {
    const auto c = spin_s_product_amplitudes(twice_s, p);
    return {detail::product_state(n, c), detail::product_gates(n, c)};
}

inline ProductPreparation product_state_sud(std::size_t n, const std::vector<double> &xi) {
    const auto c = sud_product_amplitudes(xi);
    return {detail::product_state(n, c), detail::product_gates(n, c)};
}

namespace detail {

inline double resolve_p(const DickeSpecSpinS &spec, std::optional<double> p) {
    spec.validate();
    return p ? *p
             : static_cast<double>(spec.k) / static_cast<double>(spec.max_charge());
}

inline std::vector<double> resolve_xi(const DickeSpecSUD &spec,
                                      const std::optional<std::vector<double>> &xi) {
    spec.validate();
    if (xi) {
        require(xi->size() == spec.d(), "xi must have d=" + std::to_string(spec.d()) +
                                            " entries");
        return *xi;
    }
    std::vector<double> out;
    for (auto k : spec.kvec) {
        out.push_back(std::sqrt(static_cast<double>(k) / static_cast<double>(spec.n)));
    }
    return out;
}

inline Digits binary_digits(std::size_t value, std::size_t bits) {
    Digits out(bits);
    for (std::size_t x = 0; x < bits; ++x) {
        out[x] = (value >> x) & 1U;
    }
    return out;
}

inline std::vector<Wire> system_wires(std::size_t n, std::size_t dim) {
    return uniform_register(n, dim).wires();
}

/// Appends wires to `wires` and returns the index of the first new one.
inline std::size_t add_wires(std::vector<Wire> &wires, std::size_t count, std::size_t dim,
                             const std::string &prefix) {
    const std::size_t first = wires.size();
    for (std::size_t j = 0; j < count; ++j) {
        wires.push_back({dim, prefix + std::to_string(j)});
    }
    return first;
}

/// Phase exp(2 pi i (K - k) / 2^x) on a block of n wires, controlled on a
/// flag; the -k offset rides on the block's first wire.
inline std::vector<GateOp> fanout_phase_block(std::size_t first, std::size_t n,
                                              std::size_t flag, std::size_t x,
                                              std::size_t k,
                                              std::optional<std::size_t> level,
                                              std::uint32_t group) {
    std::vector<GateOp> out;
    const auto den = static_cast<std::int64_t>(std::size_t{1} << x);
    for (std::size_t j = 0; j < n; ++j) {
        PhaseParams pp{1, den, j == 0 ? static_cast<std::int64_t>(k) : 0, level};
        out.push_back(
            gate::grouped(gate::controlled(gate::phase_k(first + j, pp), flag, 1), group));
    }
    return out;
}

} // namespace detail

// ---------------------------------------------------------------- spin-s

/// Wires: system [0,n), QPE bank [n, n+l) with wire n+x carrying bit 2^x.
inline Circuit build_qpe_log_spin_s(const DickeSpecSpinS &spec,
                                    std::optional<double> p = std::nullopt) {
    const double pp = detail::resolve_p(spec, p);
    const std::size_t n = spec.n;
    const std::size_t bits = ceil_log2(spec.max_charge() + 1);
    auto wires = detail::system_wires(n, spec.qudit_dim());
    const auto bank = detail::add_wires(wires, bits, 2, "qpe");
    Circuit c{QuditRegister(std::move(wires)), {}, std::nullopt, n};
    c.append(product_state_spin_s(n, spec.twice_s, pp).gates);
    std::vector<std::size_t> bank_wires;
    for (std::size_t x = 0; x < bits; ++x) {
        c.append(gate::hd(bank + x));
        bank_wires.push_back(bank + x);
    }
    const auto den = static_cast<std::int64_t>(std::size_t{1} << bits);
    std::uint32_t group = 1;
    for (std::size_t x = 0; x < bits; ++x, ++group) {
        for (std::size_t j = 0; j < n; ++j) {
            PhaseParams ph{static_cast<std::int64_t>(std::size_t{1} << x), den, 0, {}};
            c.append(gate::grouped(gate::controlled(gate::phase_k(j, ph), bank + x, 1),
                                   group));
        }
    }
    c.append(gate::dense(bank_wires, inverse_qft_matrix(bits)));
    c.set_accept_rule({bank_wires, detail::binary_digits(spec.k, bits)});
    return c;
}

/// Wires: system [0,n), one ancilla of dimension 2sn+1 at wire n.
inline Circuit build_hadamard_test_spin_s(const DickeSpecSpinS &spec,
                                          std::optional<double> p = std::nullopt) {
    const double pp = detail::resolve_p(spec, p);
    const std::size_t n = spec.n;
    const std::size_t mod = spec.max_charge() + 1;
    auto wires = detail::system_wires(n, spec.qudit_dim());
    wires.push_back({mod, "had"});
    Circuit c{QuditRegister(std::move(wires)), {}, std::nullopt, n};
    const std::size_t anc = n;
    c.append(product_state_spin_s(n, spec.twice_s, pp).gates);
    c.append(gate::hd(anc));
    for (std::size_t j = 0; j < n; ++j) {
        PhaseParams ph{1, static_cast<std::int64_t>(mod), 0, {}};
        c.append(gate::grouped(gate::phase_k(j, anc, ph), 1));
    }
    c.append(gate::hd_dag(anc));
    c.set_accept_rule({{anc}, {spec.k}});
    return c;
}

/**
 * Wires: block 1 is the system [0,n); block b >= 2 occupies
 * [n + (b-2)n, n + (b-1)n); flag x (1-based) follows all copies.
 */
inline Circuit build_fanout_const_spin_s(const DickeSpecSpinS &spec,
                                         std::optional<double> p = std::nullopt) {
    const double pp = detail::resolve_p(spec, p);
    const std::size_t n = spec.n;
    const std::size_t bits = ceil_log2(spec.max_charge() + 1);
    auto wires = detail::system_wires(n, spec.qudit_dim());
    for (std::size_t b = 2; b <= bits; ++b) {
        detail::add_wires(wires, n, spec.qudit_dim(), "copy" + std::to_string(b) + "_");
    }
    const auto flags = detail::add_wires(wires, bits, 2, "flag");
    Circuit c{QuditRegister(std::move(wires)), {}, std::nullopt, n};
    auto block = [&](std::size_t b) { return b == 1 ? 0 : n + (b - 2) * n; };

    c.append(product_state_spin_s(n, spec.twice_s, pp).gates);
    std::uint32_t group = 1;
    for (std::size_t b = 2; b <= bits; ++b) {
        for (std::size_t j = 0; j < n; ++j) {
            c.append(gate::grouped(gate::sum(block(b) + j, j), group));
        }
    }
    ++group;
    std::vector<std::size_t> flag_wires;
    for (std::size_t x = 1; x <= bits; ++x) {
        c.append(gate::hd(flags + x - 1));
        flag_wires.push_back(flags + x - 1);
    }
    for (std::size_t x = 1; x <= bits; ++x, ++group) {
        c.append(detail::fanout_phase_block(block(x), n, flags + x - 1, x, spec.k,
                                            std::nullopt, group));
    }
    for (std::size_t b = 2; b <= bits; ++b) {
        for (std::size_t j = 0; j < n; ++j) {
            c.append(gate::grouped(gate::sum_dag(block(b) + j, j), group));
        }
    }
    for (auto f : flag_wires) {
        c.append(gate::hd(f));
    }
    c.set_accept_rule({flag_wires, Digits(bits, 0)});
    return c;
}

// ----------------------------------------------------------------- SU(d)

/// Wires: system [0,n), bank i (1..d-1) at [n + (i-1)l, n + il), bit x on the
/// x-th wire of its bank.
inline Circuit build_qpe_log_sud(const DickeSpecSUD &spec,
                                 const std::optional<std::vector<double>> &xi = std::nullopt) {
    const auto x_vec = detail::resolve_xi(spec, xi);
    const std::size_t n = spec.n;
    const std::size_t d = spec.d();
    const std::size_t bits = ceil_log2(n + 1);
    auto wires = detail::system_wires(n, d);
    const auto first = wires.size();
    for (std::size_t i = 1; i < d; ++i) {
        detail::add_wires(wires, bits, 2, "qpe" + std::to_string(i) + "_");
    }
    Circuit c{QuditRegister(std::move(wires)), {}, std::nullopt, n};
    auto bank = [&](std::size_t i) { return first + (i - 1) * bits; };
    c.append(product_state_sud(n, x_vec).gates);
    for (std::size_t w = first; w < c.reg.size(); ++w) {
        c.append(gate::hd(w));
    }
    const auto den = static_cast<std::int64_t>(std::size_t{1} << bits);
    std::uint32_t group = 1;
    for (std::size_t i = 1; i < d; ++i) {
        for (std::size_t x = 0; x < bits; ++x, ++group) {
            for (std::size_t j = 0; j < n; ++j) {
                PhaseParams ph{static_cast<std::int64_t>(std::size_t{1} << x), den, 0, i};
                c.append(gate::grouped(
                    gate::controlled(gate::phase_k(j, ph), bank(i) + x, 1), group));
            }
        }
    }
    AcceptRule rule;
    for (std::size_t i = 1; i < d; ++i) {
        std::vector<std::size_t> bw;
        for (std::size_t x = 0; x < bits; ++x) {
            bw.push_back(bank(i) + x);
        }
        c.append(gate::dense(bw, inverse_qft_matrix(bits)));
        const auto digits = detail::binary_digits(spec.kvec[i], bits);
        rule.wires.insert(rule.wires.end(), bw.begin(), bw.end());
        rule.digits.insert(rule.digits.end(), digits.begin(), digits.end());
    }
    c.set_accept_rule(std::move(rule));
    return c;
}

/// Wires: system [0,n), ancilla for level i (1..d-1) of dimension n+1 at n+i-1.
inline Circuit build_hadamard_test_sud(const DickeSpecSUD &spec,
                                       const std::optional<std::vector<double>> &xi = std::nullopt) {
    const auto x_vec = detail::resolve_xi(spec, xi);
    const std::size_t n = spec.n;
    const std::size_t d = spec.d();
    auto wires = detail::system_wires(n, d);
    const auto first = detail::add_wires(wires, d - 1, n + 1, "had");
    Circuit c{QuditRegister(std::move(wires)), {}, std::nullopt, n};
    c.append(product_state_sud(n, x_vec).gates);
    AcceptRule rule;
    for (std::size_t i = 1; i < d; ++i) {
        const std::size_t anc = first + i - 1;
        c.append(gate::hd(anc));
        for (std::size_t j = 0; j < n; ++j) {
            PhaseParams ph{1, static_cast<std::int64_t>(n + 1), 0, i};
            c.append(gate::grouped(gate::phase_k(j, anc, ph), static_cast<std::uint32_t>(i)));
        }
        c.append(gate::hd_dag(anc));
        rule.wires.push_back(anc);
        rule.digits.push_back(spec.kvec[i]);
    }
    c.set_accept_rule(std::move(rule));
    return c;
}

/**
 * (d-1)l blocks of n qudits, block 1 being the system; flag (i, x) sits at
 * index (i-1)l + x - 1 among the flags and drives level i with modulus 2^x
 * on block (i-1)l + x.
 */
inline Circuit build_fanout_const_sud(const DickeSpecSUD &spec,
                                      const std::optional<std::vector<double>> &xi = std::nullopt) {
    const auto x_vec = detail::resolve_xi(spec, xi);
    const std::size_t n = spec.n;
    const std::size_t d = spec.d();
    const std::size_t bits = ceil_log2(n + 1);
    const std::size_t blocks = (d - 1) * bits;
    auto wires = detail::system_wires(n, d);
    for (std::size_t b = 2; b <= blocks; ++b) {
        detail::add_wires(wires, n, d, "copy" + std::to_string(b) + "_");
    }
    const auto flags = detail::add_wires(wires, blocks, 2, "flag");
    Circuit c{QuditRegister(std::move(wires)), {}, std::nullopt, n};
    auto block = [&](std::size_t b) { return b == 1 ? 0 : n + (b - 2) * n; };

    c.append(product_state_sud(n, x_vec).gates);
    std::uint32_t group = 1;
    for (std::size_t b = 2; b <= blocks; ++b) {
        for (std::size_t j = 0; j < n; ++j) {
            c.append(gate::grouped(gate::sum(block(b) + j, j), group));
        }
    }
    ++group;
    std::vector<std::size_t> flag_wires;
    for (std::size_t f = 0; f < blocks; ++f) {
        c.append(gate::hd(flags + f));
        flag_wires.push_back(flags + f);
    }
    for (std::size_t i = 1; i < d; ++i) {
        for (std::size_t x = 1; x <= bits; ++x, ++group) {
            const std::size_t b = (i - 1) * bits + x;
            c.append(detail::fanout_phase_block(block(b), n, flags + b - 1, x, spec.kvec[i],
                                                i, group));
        }
    }
    for (std::size_t b = 2; b <= blocks; ++b) {
        for (std::size_t j = 0; j < n; ++j) {
            c.append(gate::grouped(gate::sum_dag(block(b) + j, j), group));
        }
    }
    for (auto f : flag_wires) {
        c.append(gate::hd(f));
    }
    c.set_accept_rule({flag_wires, Digits(blocks, 0)});
    return c;
}

} // namespace qudicke
