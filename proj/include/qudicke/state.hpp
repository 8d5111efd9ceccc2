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
 * Statevectors over mixed-radix registers and the operations on them.
 *
 * StateVector stores every amplitude. SparseStateVector stores only nonzero
 * amplitudes keyed by flattened index; it is used for registers whose total
 * dimension is too large to store densely but whose states stay sparse (for
 * example fan-out copies of a product state). Both expose the same
 * operations, and iteration is always in increasing index order so results
 * do not depend on the storage chosen.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <concepts>
#include <cstdint>
#include <map>
#include <random>
#include <span>
#include <utility>
#include <vector>

#include "core.hpp"
#include "gates.hpp"
#include "register.hpp"

namespace qudicke {

class StateVector {
  public:
    StateVector() = default;

    /// All-zero amplitudes (not normalized).
    explicit StateVector(QuditRegister reg)
        : reg_(std::move(reg)),
          amps_(static_cast<std::size_t>(reg_.total_dimension())) {}

    StateVector(QuditRegister reg, std::vector<cplx> amps)
        : reg_(std::move(reg)), amps_(std::move(amps)) {
        detail::require(amps_.size() == reg_.total_dimension(),
                        "amplitude count does not match register dimension");
    }

    [[nodiscard]] const QuditRegister &reg() const { return reg_; }
    [[nodiscard]] std::span<const cplx> amplitudes() const { return amps_; }
    [[nodiscard]] std::span<cplx> amplitudes() { return amps_; }
    [[nodiscard]] cplx amplitude(index_t idx) const { return amps_.at(idx); }
    [[nodiscard]] cplx amplitude(const Digits &d) const {
        return amps_.at(reg_.flatten(d));
    }
    void set(index_t idx, cplx a) { amps_.at(idx) = a; }
    void add(index_t idx, cplx a) { amps_.at(idx) += a; }
    [[nodiscard]] StateVector empty_like() const { return StateVector(reg_); }

    template <class F> void for_each(F &&f) const {
        for (index_t i = 0; i < amps_.size(); ++i) {
            if (amps_[i] != cplx{0.0, 0.0}) {
                f(i, amps_[i]);
            }
        }
    }

    void scale(double s) {
        for (auto &a : amps_) {
            a *= s;
        }
    }

  private:
    QuditRegister reg_;
    std::vector<cplx> amps_;
};

class SparseStateVector {
  public:
    SparseStateVector() = default;
    explicit SparseStateVector(QuditRegister reg) : reg_(std::move(reg)) {}

    [[nodiscard]] const QuditRegister &reg() const { return reg_; }
    [[nodiscard]] std::size_t support_size() const { return amps_.size(); }
    [[nodiscard]] cplx amplitude(index_t idx) const {
        auto it = amps_.find(idx);
        return it == amps_.end() ? cplx{0.0, 0.0} : it->second;
    }
    [[nodiscard]] cplx amplitude(const Digits &d) const {
        return amplitude(reg_.flatten(d));
    }
    void set(index_t idx, cplx a) {
        detail::require(idx < reg_.total_dimension(), "index out of range");
        if (std::norm(a) <= tol::prune) {
            amps_.erase(idx);
        } else {
            amps_[idx] = a;
        }
    }
    void add(index_t idx, cplx a) { set(idx, amplitude(idx) + a); }
    [[nodiscard]] SparseStateVector empty_like() const {
        return SparseStateVector(reg_);
    }

    template <class F> void for_each(F &&f) const {
        for (const auto &[i, a] : amps_) {
            f(i, a);
        }
    }

    void scale(double s) {
        for (auto &[i, a] : amps_) {
            a *= s;
        }
    }

    [[nodiscard]] const std::map<index_t, cplx> &entries() const { return amps_; }
    void assign(std::map<index_t, cplx> entries) { amps_ = std::move(entries); }

  private:
    QuditRegister reg_;
    std::map<index_t, cplx> amps_;
};

template <class S>
concept AmplitudeState = requires(const S &cs, S &s, index_t i, cplx a) {
    { cs.reg() } -> std::same_as<const QuditRegister &>;
    { cs.amplitude(i) } -> std::same_as<cplx>;
    { cs.empty_like() } -> std::same_as<S>;
    s.set(i, a);
    s.add(i, a);
    s.scale(1.0);
};

template <AmplitudeState S> S basis_state_as(QuditRegister reg, const Digits &digits) {
    S out(std::move(reg));
    out.set(out.reg().flatten(digits), cplx{1.0, 0.0});
    return out;
}

/// |digits>, with digit w on wire w.
inline StateVector new_basis_state(QuditRegister reg, const Digits &digits) {
    return basis_state_as<StateVector>(std::move(reg), digits);
}

inline SparseStateVector to_sparse(const StateVector &s) {
    SparseStateVector out(s.reg());
    s.for_each([&](index_t i, cplx a) { out.set(i, a); });
    return out;
}

inline StateVector to_dense(const SparseStateVector &s) {
    StateVector out(s.reg());
    s.for_each([&](index_t i, cplx a) { out.set(i, a); });
    return out;
}

template <AmplitudeState S> double norm_squared(const S &s) {
    double acc = 0.0;
    s.for_each([&](index_t, cplx a) { acc += std::norm(a); });
    return acc;
}

template <AmplitudeState S> double norm(const S &s) {
    return std::sqrt(norm_squared(s));
}

template <AmplitudeState S> void normalize(S &s) {
    const double n = norm(s);
    detail::require(n > 0.0, "cannot normalize the zero vector");
    s.scale(1.0 / n);
}

namespace detail {

struct GateLayout {
    LocalKernel kernel;
    std::vector<index_t> offsets; ///< flattened offset of each local index
    std::vector<std::pair<index_t, std::size_t>> target_axes; ///< (stride, dim)
    std::vector<std::pair<std::size_t, std::size_t>> controls;   ///< (wire, value)
};

inline GateLayout layout_for(const GateOp &op, const QuditRegister &reg) {
    validate(op, reg);
    GateLayout g;
    g.kernel = make_kernel(op, reg);
    g.offsets.assign(g.kernel.dim, 0);
    std::size_t block = 1;
    for (auto t : op.targets) {
        const std::size_t d = reg.dim(t);
        for (std::size_t l = 0; l < g.kernel.dim; ++l) {
            g.offsets[l] += ((l / block) % d) * reg.stride(t);
        }
        block *= d;
        g.target_axes.emplace_back(reg.stride(t), d);
    }
    for (const auto &c : op.controls) {
        g.controls.emplace_back(c.wire, c.value);
    }
    return g;
}

inline bool controls_hold(const GateLayout &g, const QuditRegister &reg,
                          index_t idx) {
    for (const auto &[w, v] : g.controls) {
        if (reg.digit(idx, w) != v) {
            return false;
        }
    }
    return true;
}

inline index_t block_base(const GateLayout &g, index_t idx) {
    index_t base = idx;
    for (const auto &[stride, d] : g.target_axes) {
        base -= ((idx / stride) % d) * stride;
    }
    return base;
}

} // namespace detail

inline void apply_gate_inplace(StateVector &state, const GateOp &op) {
    const auto &reg = state.reg();
    const auto g = detail::layout_for(op, reg);
    const std::size_t dim = g.kernel.dim;
    std::vector<cplx> in(dim), out(dim);
    auto amps = state.amplitudes();
    const index_t total = reg.total_dimension();
    for (index_t base = 0; base < total; ++base) {
        if (detail::block_base(g, base) != base ||
            !detail::controls_hold(g, reg, base)) {
            continue;
        }
        for (std::size_t l = 0; l < dim; ++l) {
            in[l] = amps[base + g.offsets[l]];
        }
        g.kernel.apply(in.data(), out.data());
        for (std::size_t l = 0; l < dim; ++l) {
            amps[base + g.offsets[l]] = out[l];
        }
    }
}

inline void apply_gate_inplace(SparseStateVector &state, const GateOp &op) {
    const auto &reg = state.reg();
    const auto g = detail::layout_for(op, reg);
    const std::size_t dim = g.kernel.dim;
    std::map<index_t, cplx> next;
    std::vector<index_t> bases;
    for (const auto &[idx, a] : state.entries()) {
        if (detail::controls_hold(g, reg, idx)) {
            bases.push_back(detail::block_base(g, idx));
        } else {
            next.emplace(idx, a);
        }
    }
    std::sort(bases.begin(), bases.end());
    bases.erase(std::unique(bases.begin(), bases.end()), bases.end());
    std::vector<cplx> in(dim), out(dim);
    for (auto base : bases) {
        for (std::size_t l = 0; l < dim; ++l) {
            in[l] = state.amplitude(base + g.offsets[l]);
        }
        g.kernel.apply(in.data(), out.data());
        for (std::size_t l = 0; l < dim; ++l) {
            if (std::norm(out[l]) > tol::prune) {
                next[base + g.offsets[l]] = out[l];
            }
        }
    }
    state.assign(std::move(next));
}

/// Returns the state after applying `op`; the input is left untouched.
template <AmplitudeState S> S apply_gate(S state, const GateOp &op) {
    apply_gate_inplace(state, op);
    return state;
}

/// |<a|b>|^2, clamped to [0, 1].
template <AmplitudeState S> double fidelity(const S &a, const S &b) {
    detail::require(a.reg().same_shape(b.reg()),
                    "fidelity: register shapes differ");
    cplx overlap{0.0, 0.0};
    a.for_each([&](index_t i, cplx x) { overlap += std::conj(x) * b.amplitude(i); });
    return std::clamp(std::norm(overlap), 0.0, 1.0);
}

/// Mixed-radix index of the digits on `wires` (first wire least significant).
inline index_t outcome_index(const QuditRegister &reg,
                             std::span<const std::size_t> wires, index_t idx) {
    index_t out = 0;
    index_t mult = 1;
    for (auto w : wires) {
        out += reg.digit(idx, w) * mult;
        mult *= reg.dim(w);
    }
    return out;
}

inline Digits outcome_digits(const QuditRegister &reg,
                             std::span<const std::size_t> wires, index_t outcome) {
    Digits d(wires.size());
    for (std::size_t i = 0; i < wires.size(); ++i) {
        d[i] = static_cast<std::size_t>(outcome % reg.dim(wires[i]));
        outcome /= reg.dim(wires[i]);
    }
    return d;
}

/// Marginal distribution of the digits on `wires`, keyed by outcome_index.
template <AmplitudeState S>
std::map<index_t, double> outcome_distribution(const S &s,
                                               std::span<const std::size_t> wires) {
    for (auto w : wires) {
        detail::require(w < s.reg().size(), "wire not in register");
    }
    std::map<index_t, double> dist;
    s.for_each([&](index_t i, cplx a) {
        dist[outcome_index(s.reg(), wires, i)] += std::norm(a);
    });
    return dist;
}

template <AmplitudeState S> struct Projection {
    double probability;
    S conditional;
};

/**
 * Exact projection on `digits` for `wires`. The measured wires stay in the
 * register, fixed at the measured values; the slice is renormalized.
 */
template <AmplitudeState S>
Projection<S> project_on_outcome(const S &s, std::span<const std::size_t> wires,
                                 const Digits &digits) {
    detail::require(wires.size() == digits.size(),
                    "project: wire and digit counts differ");
    const auto &reg = s.reg();
    for (std::size_t i = 0; i < wires.size(); ++i) {
        detail::require(wires[i] < reg.size(), "project: wire not in register");
        detail::require(digits[i] < reg.dim(wires[i]),
                        "project: digit out of range on wire '" +
                            reg.label(wires[i]) + "'");
    }
    S out = s.empty_like();
    double p = 0.0;
    s.for_each([&](index_t i, cplx a) {
        for (std::size_t w = 0; w < wires.size(); ++w) {
            if (reg.digit(i, wires[w]) != digits[w]) {
                return;
            }
        }
        out.set(i, a);
        p += std::norm(a);
    });
    if (p <= tol::impossible) {
        throw ImpossibleOutcome("outcome " + ket_string(digits) +
                                " has zero probability");
    }
    out.scale(1.0 / std::sqrt(p));
    return {p, std::move(out)};
}

/// Deterministic uniform draw in [0, 1) from a 64-bit engine.
inline double uniform_unit(std::mt19937_64 &rng) {
    return static_cast<double>(rng() >> 11) * 0x1.0p-53;
}

inline index_t draw_outcome(const std::map<index_t, double> &dist, double total,
                            std::mt19937_64 &rng) {
    const double u = uniform_unit(rng) * total;
    double acc = 0.0;
    index_t last = dist.begin()->first;
    for (const auto &[k, p] : dist) {
        acc += p;
        last = k;
        if (u < acc) {
            return k;
        }
    }
    return last;
}

template <AmplitudeState S> struct Measurement {
    Digits digits;
    S collapsed;
};

/// Draws one outcome on `wires` from the exact marginal and collapses.
template <AmplitudeState S>
Measurement<S> sample_measure(const S &s, std::span<const std::size_t> wires,
                              std::uint64_t seed) {
    const auto dist = outcome_distribution(s, wires);
    detail::require(!dist.empty(), "sample: zero state");
    double total = 0.0;
    for (const auto &[k, p] : dist) {
        total += p;
    }
    std::mt19937_64 rng(seed);
    const auto outcome = draw_outcome(dist, total, rng);
    auto digits = outcome_digits(s.reg(), wires, outcome);
    auto proj = project_on_outcome(s, wires, digits);
    return {std::move(digits), std::move(proj.conditional)};
}

/// Outcome counts over `shots` independent draws with one seeded engine.
template <AmplitudeState S>
std::map<index_t, std::uint64_t> sample_counts(const S &s,
                                               std::span<const std::size_t> wires,
                                               std::uint64_t shots,
                                               std::uint64_t seed) {
    const auto dist = outcome_distribution(s, wires);
    detail::require(!dist.empty(), "sample: zero state");
    double total = 0.0;
    for (const auto &[k, p] : dist) {
        total += p;
    }
    std::mt19937_64 rng(seed);
    std::map<index_t, std::uint64_t> counts;
    for (std::uint64_t i = 0; i < shots; ++i) {
        ++counts[draw_outcome(dist, total, rng)];
    }
    return counts;
}

} // namespace qudicke
