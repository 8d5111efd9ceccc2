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
 * Circuits: an ordered gate list over a register, plus an optional
 * postselection pattern.
 */
#pragma once

#include <algorithm>
#include <optional>
#include <vector>

#include "core.hpp"
#include "gates.hpp"
#include "register.hpp"
#include <type_traits>

#include "state.hpp"

namespace qudicke {

struct AcceptRule {
    std::vector<std::size_t> wires;
    Digits digits;
    bool operator==(const AcceptRule &) const = default;
};

struct Circuit {
    QuditRegister reg;
    std::vector<GateOp> ops;
    std::optional<AcceptRule> accept_rule;
    /// The prepared state lives on wires [0, system_wires).
    std::size_t system_wires = 0;

    void append(GateOp op) {
        validate(op, reg);
        ops.push_back(std::move(op));
    }

    void append(const std::vector<GateOp> &seq) {
        for (const auto &op : seq) {
            append(op);
        }
    }

    void set_accept_rule(AcceptRule rule) {
        detail::require(rule.wires.size() == rule.digits.size(),
                        "accept rule: wire and digit counts differ");
        for (std::size_t i = 0; i < rule.wires.size(); ++i) {
            detail::require(rule.wires[i] < reg.size(),
                            "accept rule: wire not in register");
            detail::require(rule.digits[i] < reg.dim(rule.wires[i]),
                            "accept rule: digit out of range");
        }
        accept_rule = std::move(rule);
    }
};

/**
 * Greedy layering. Ops are scanned in order; a maximal run of consecutive ops
 * sharing a nonzero group tag forms one unit, every other op is its own unit.
 * A unit is placed one layer after the latest layer used by any wire it
 * touches (targets and controls). Depth is the highest layer placed.
 */
inline std::size_t logical_depth(const Circuit &c) {
    std::vector<std::size_t> wire_layer(c.reg.size(), 0);
    std::size_t depth = 0;
    std::size_t i = 0;
    while (i < c.ops.size()) {
        std::size_t j = i + 1;
        if (c.ops[i].group != 0) {
            while (j < c.ops.size() && c.ops[j].group == c.ops[i].group) {
                ++j;
            }
        }
        std::vector<std::size_t> wires;
        for (std::size_t q = i; q < j; ++q) {
            auto w = c.ops[q].wires();
            wires.insert(wires.end(), w.begin(), w.end());
        }
        std::size_t layer = 0;
        for (auto w : wires) {
            layer = std::max(layer, wire_layer[w]);
        }
        ++layer;
        for (auto w : wires) {
            wire_layer[w] = layer;
        }
        depth = std::max(depth, layer);
        i = j;
    }
    return depth;
}

/// Runs the circuit on |0...0> in the requested storage.
template <AmplitudeState S>
S simulate_as(const Circuit &c, std::size_t max_amplitudes = 0) {
    S state = basis_state_as<S>(c.reg, Digits(c.reg.size(), 0));
    for (const auto &op : c.ops) {
        apply_gate_inplace(state, op);
        if constexpr (std::is_same_v<S, SparseStateVector>) {
            if (max_amplitudes != 0 && state.support_size() > max_amplitudes) {
                throw CapacityError("sparse support exceeded " +
                                    std::to_string(max_amplitudes) +
                                    " amplitudes on register of " +
                                    std::to_string(c.reg.size()) + " wires");
            }
        }
    }
    return state;
}

inline StateVector simulate(const Circuit &c) { return simulate_as<StateVector>(c); }

} // namespace qudicke
