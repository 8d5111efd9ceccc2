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
 * Gate vocabulary for mixed-dimension qudit circuits.
 *
 * Target conventions per kind:
 *  - Xd, XdDag, Xswap, Hd, HdDag, Rot, Id: one target wire.
 *  - Sum, SumDag: targets {dest, source}; dest <- dest +/- source (mod dim(dest)).
 *  - PhaseK: targets {t} or {t, multiplier}; phase exp(2 pi i * num/den *
 *    x * (charge(t) - offset)) with x the multiplier digit (1 when absent)
 *    and charge(t) the digit of t, or [digit == level] when a level is set.
 *  - DenseUnitary: any targets; local index has the first target least
 *    significant.
 *
 * Controls are (wire, value) pairs; the gate acts only on the subspace where
 * every control wire holds its value. At most two controls are allowed.
 */
#pragma once

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "core.hpp"
#include "register.hpp"

namespace qudicke {

enum class GateKind {
    Xd,
    XdDag,
    Xswap,
    Sum,
    SumDag,
    Hd,
    HdDag,
    Rot,
    PhaseK,
    DenseUnitary,
    Id,
};

inline std::string_view to_string(GateKind kind) {
    switch (kind) {
    case GateKind::Xd:
        return "Xd";
    case GateKind::XdDag:
        return "XdDag";
    case GateKind::Xswap:
        return "Xswap";
    case GateKind::Sum:
        return "Sum";
    case GateKind::SumDag:
        return "SumDag";
    case GateKind::Hd:
        return "Hd";
    case GateKind::HdDag:
        return "HdDag";
    case GateKind::Rot:
        return "Rot";
    case GateKind::PhaseK:
        return "PhaseK";
    case GateKind::DenseUnitary:
        return "DenseUnitary";
    case GateKind::Id:
        return "Id";
    }
    return "?";
}

inline GateKind gate_kind_from_string(std::string_view name) {
    for (auto k : {GateKind::Xd, GateKind::XdDag, GateKind::Xswap,
                   GateKind::Sum, GateKind::SumDag, GateKind::Hd,
                   GateKind::HdDag, GateKind::Rot, GateKind::PhaseK,
                   GateKind::DenseUnitary, GateKind::Id}) {
        if (to_string(k) == name) {
            return k;
        }
    }
    throw DomainError("unknown gate kind '" + std::string(name) + "'");
}

struct Control {
    std::size_t wire;
    std::size_t value;
    bool operator==(const Control &) const = default;
};

struct SwapLevels {
    std::size_t a;
    std::size_t b;
    bool operator==(const SwapLevels &) const = default;
};

struct RotParams {
    std::size_t m;
    double theta;
    bool operator==(const RotParams &) const = default;
};

struct PhaseParams {
    std::int64_t num = 1;
    std::int64_t den = 1;
    std::int64_t offset = 0;
    std::optional<std::size_t> level;
    bool operator==(const PhaseParams &) const = default;
};

struct DenseMatrix {
    std::size_t dim = 0;
    std::vector<cplx> entries; ///< row-major dim x dim
    bool operator==(const DenseMatrix &) const = default;
};

using GateParams =
    std::variant<std::monostate, SwapLevels, RotParams, PhaseParams, DenseMatrix>;

struct GateOp {
    GateKind kind = GateKind::Id;
    std::vector<std::size_t> targets;
    std::vector<Control> controls;
    GateParams params;
    /// Nonzero tags a run of consecutive ops counted as one logical layer.
    std::uint32_t group = 0;

    bool operator==(const GateOp &) const = default;

    [[nodiscard]] std::vector<std::size_t> wires() const {
        std::vector<std::size_t> out = targets;
        for (const auto &c : controls) {
            out.push_back(c.wire);
        }
        return out;
    }
};

namespace detail {

inline bool is_unitary(const DenseMatrix &m, double eps) {
    const std::size_t n = m.dim;
    if (m.entries.size() != n * n) {
        return false;
    }
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            cplx acc{0.0, 0.0};
            for (std::size_t r = 0; r < n; ++r) {
                acc += std::conj(m.entries[r * n + i]) * m.entries[r * n + j];
            }
            const cplx expect = (i == j) ? cplx{1.0, 0.0} : cplx{0.0, 0.0};
            if (std::abs(acc - expect) > eps) {
                return false;
            }
        }
    }
    return true;
}

inline GateOp single(GateKind kind, std::size_t w, GateParams params = {}) {
    GateOp op;
    op.kind = kind;
    op.targets = {w};
    op.params = std::move(params);
    return op;
}

} // namespace detail

/// Factories. Structural checks that need the register happen in validate().
namespace gate {

inline GateOp xd(std::size_t w) { return detail::single(GateKind::Xd, w); }
inline GateOp xd_dag(std::size_t w) { return detail::single(GateKind::XdDag, w); }
inline GateOp id(std::size_t w) { return detail::single(GateKind::Id, w); }
inline GateOp hd(std::size_t w) { return detail::single(GateKind::Hd, w); }
inline GateOp hd_dag(std::size_t w) { return detail::single(GateKind::HdDag, w); }

inline GateOp xswap(std::size_t w, std::size_t a, std::size_t b) {
    detail::require(a != b, "Xswap levels must differ");
    return detail::single(GateKind::Xswap, w, SwapLevels{a, b});
}

inline GateOp rot(std::size_t w, std::size_t m, double theta) {
    return detail::single(GateKind::Rot, w, RotParams{m, theta});
}

inline GateOp sum(std::size_t dest, std::size_t source) {
    GateOp op;
    op.kind = GateKind::Sum;
    op.targets = {dest, source};
    return op;
}

inline GateOp sum_dag(std::size_t dest, std::size_t source) {
    GateOp op = sum(dest, source);
    op.kind = GateKind::SumDag;
    return op;
}

/// Diagonal phase exp(2 pi i * num/den * (charge - offset)) on one wire.
inline GateOp phase_k(std::size_t w, PhaseParams p) {
    detail::require(p.den > 0, "PhaseK denominator must be positive");
    return detail::single(GateKind::PhaseK, w, p);
}

/// Two-wire diagonal phase, scaled by the digit of `multiplier`.
inline GateOp phase_k(std::size_t w, std::size_t multiplier, PhaseParams p) {
    GateOp op = phase_k(w, p);
    op.targets.push_back(multiplier);
    return op;
}

inline GateOp dense(std::vector<std::size_t> targets, DenseMatrix m) {
    detail::require(detail::is_unitary(m, tol::unitarity),
                    "DenseUnitary matrix is not unitary");
    GateOp op;
    op.kind = GateKind::DenseUnitary;
    op.targets = std::move(targets);
    op.params = std::move(m);
    return op;
}

inline GateOp controlled(GateOp op, std::size_t wire, std::size_t value) {
    op.controls.push_back({wire, value});
    detail::require(op.controls.size() <= 2, "at most two controls per gate");
    return op;
}

inline GateOp controlled(GateOp op, Control a, Control b) {
    return controlled(controlled(std::move(op), a.wire, a.value), b.wire,
                      b.value);
}

inline GateOp grouped(GateOp op, std::uint32_t group) {
    op.group = group;
    return op;
}

} // namespace gate

/// Inverse QFT on a bank of qubits whose first wire carries the lowest bit.
inline DenseMatrix inverse_qft_matrix(std::size_t bits) {
    const std::size_t n = std::size_t{1} << bits;
    DenseMatrix m{n, std::vector<cplx>(n * n)};
    const double scale = 1.0 / std::sqrt(static_cast<double>(n));
    for (std::size_t y = 0; y < n; ++y) {
        for (std::size_t x = 0; x < n; ++x) {
            const auto e = (x * y) % n;
            m.entries[y * n + x] =
                std::polar(scale, -2.0 * kPi * static_cast<double>(e) /
                                      static_cast<double>(n));
        }
    }
    return m;
}

/// Checks an op against a register; throws DomainError naming the problem.
inline void validate(const GateOp &op, const QuditRegister &reg) {
    const auto name = std::string(to_string(op.kind));
    detail::require(!op.targets.empty(), name + ": no targets");
    auto wires = op.wires();
    for (auto w : wires) {
        detail::require(w < reg.size(), name + ": wire " + std::to_string(w) +
                                            " not in register");
    }
    std::sort(wires.begin(), wires.end());
    detail::require(std::adjacent_find(wires.begin(), wires.end()) == wires.end(),
                    name + ": repeated wire");
    detail::require(op.controls.size() <= 2, name + ": more than two controls");
    for (const auto &c : op.controls) {
        detail::require(c.value < reg.dim(c.wire),
                        name + ": control value " + std::to_string(c.value) +
                            " out of range on wire '" + reg.label(c.wire) + "'");
    }
    const std::size_t d0 = reg.dim(op.targets[0]);
    auto arity = [&](std::size_t expect) {
        detail::require(op.targets.size() == expect,
                        name + ": expected " + std::to_string(expect) +
                            " targets");
    };
    switch (op.kind) {
    case GateKind::Xd:
    case GateKind::XdDag:
    case GateKind::Hd:
    case GateKind::HdDag:
    case GateKind::Id:
        arity(1);
        break;
    case GateKind::Xswap: {
        arity(1);
        const auto &p = std::get<SwapLevels>(op.params);
        detail::require(p.a != p.b && p.a < d0 && p.b < d0,
                        "Xswap levels invalid for dimension " +
                            std::to_string(d0));
        break;
    }
    case GateKind::Rot: {
        arity(1);
        const auto &p = std::get<RotParams>(op.params);
        detail::require(p.m + 1 < d0, "Rot level " + std::to_string(p.m) +
                                          " needs m+1 < " + std::to_string(d0));
        break;
    }
    case GateKind::Sum:
    case GateKind::SumDag:
        arity(2);
        break;
    case GateKind::PhaseK: {
        detail::require(op.targets.size() == 1 || op.targets.size() == 2,
                        "PhaseK takes one or two targets");
        const auto &p = std::get<PhaseParams>(op.params);
        detail::require(p.den > 0, "PhaseK denominator must be positive");
        if (p.level) {
            detail::require(*p.level < d0, "PhaseK level out of range");
        }
        break;
    }
    case GateKind::DenseUnitary: {
        const auto &m = std::get<DenseMatrix>(op.params);
        std::size_t dim = 1;
        for (auto t : op.targets) {
            dim *= reg.dim(t);
        }
        detail::require(m.dim == dim,
                        "DenseUnitary matrix dimension does not match targets");
        break;
    }
    }
}

/// The inverse gate (same targets and controls).
inline GateOp adjoint(const GateOp &op) {
    GateOp out = op;
    switch (op.kind) {
    case GateKind::Xd:
        out.kind = GateKind::XdDag;
        break;
    case GateKind::XdDag:
        out.kind = GateKind::Xd;
        break;
    case GateKind::Sum:
        out.kind = GateKind::SumDag;
        break;
    case GateKind::SumDag:
        out.kind = GateKind::Sum;
        break;
    case GateKind::Hd:
        out.kind = GateKind::HdDag;
        break;
    case GateKind::HdDag:
        out.kind = GateKind::Hd;
        break;
    case GateKind::Rot:
        std::get<RotParams>(out.params).theta *= -1.0;
        break;
    case GateKind::PhaseK:
        std::get<PhaseParams>(out.params).num *= -1;
        break;
    case GateKind::DenseUnitary: {
        auto &m = std::get<DenseMatrix>(out.params);
        const auto &src = std::get<DenseMatrix>(op.params);
        for (std::size_t i = 0; i < m.dim; ++i) {
            for (std::size_t j = 0; j < m.dim; ++j) {
                m.entries[i * m.dim + j] = std::conj(src.entries[j * m.dim + i]);
            }
        }
        break;
    }
    case GateKind::Xswap:
    case GateKind::Id:
        break;
    }
    return out;
}

/**
 * Action of a gate on its target subspace, in one of three forms. Local
 * indices follow the target order with the first target least significant.
 */
struct LocalKernel {
    enum class Form { Permutation, Diagonal, Dense };
    Form form = Form::Permutation;
    std::size_t dim = 1;
    std::vector<std::size_t> perm; ///< perm[in] = out
    std::vector<cplx> diag;
    std::vector<cplx> dense; ///< row-major

    void apply(const cplx *in, cplx *out) const {
        switch (form) {
        case Form::Permutation:
            for (std::size_t l = 0; l < dim; ++l) {
                out[perm[l]] = in[l];
            }
            break;
        case Form::Diagonal:
            for (std::size_t l = 0; l < dim; ++l) {
                out[l] = diag[l] * in[l];
            }
            break;
        case Form::Dense:
            for (std::size_t r = 0; r < dim; ++r) {
                cplx acc{0.0, 0.0};
                const cplx *row = dense.data() + r * dim;
                for (std::size_t c = 0; c < dim; ++c) {
                    acc += row[c] * in[c];
                }
                out[r] = acc;
            }
            break;
        }
    }
};

inline LocalKernel make_kernel(const GateOp &op, const QuditRegister &reg) {
    LocalKernel k;
    const std::size_t d0 = reg.dim(op.targets[0]);
    auto identity_perm = [&](std::size_t n) {
        k.form = LocalKernel::Form::Permutation;
        k.dim = n;
        k.perm.resize(n);
        for (std::size_t i = 0; i < n; ++i) {
            k.perm[i] = i;
        }
    };
    auto hadamard = [&](double sign) {
        k.form = LocalKernel::Form::Dense;
        k.dim = d0;
        k.dense.resize(d0 * d0);
        const double scale = 1.0 / std::sqrt(static_cast<double>(d0));
        for (std::size_t y = 0; y < d0; ++y) {
            for (std::size_t x = 0; x < d0; ++x) {
                const auto e = (x * y) % d0;
                k.dense[y * d0 + x] =
                    std::polar(scale, sign * 2.0 * kPi *
                                          static_cast<double>(e) /
                                          static_cast<double>(d0));
            }
        }
    };
    switch (op.kind) {
    case GateKind::Id:
        identity_perm(d0);
        break;
    case GateKind::Xd:
        identity_perm(d0);
        for (std::size_t x = 0; x < d0; ++x) {
            k.perm[x] = (x + 1) % d0;
        }
        break;
    case GateKind::XdDag:
        identity_perm(d0);
        for (std::size_t x = 0; x < d0; ++x) {
            k.perm[x] = (x + d0 - 1) % d0;
        }
        break;
    case GateKind::Xswap: {
        identity_perm(d0);
        const auto &p = std::get<SwapLevels>(op.params);
        k.perm[p.a] = p.b;
        k.perm[p.b] = p.a;
        break;
    }
    case GateKind::Sum:
    case GateKind::SumDag: {
        const std::size_t ds = reg.dim(op.targets[1]);
        identity_perm(d0 * ds);
        for (std::size_t x = 0; x < ds; ++x) {
            for (std::size_t y = 0; y < d0; ++y) {
                const std::size_t shift = x % d0;
                const std::size_t y2 = op.kind == GateKind::Sum
                                           ? (y + shift) % d0
                                           : (y + d0 - shift) % d0;
                k.perm[y + d0 * x] = y2 + d0 * x;
            }
        }
        break;
    }
    case GateKind::Hd:
        hadamard(+1.0);
        break;
    case GateKind::HdDag:
        hadamard(-1.0);
        break;
    case GateKind::Rot: {
        const auto &p = std::get<RotParams>(op.params);
        k.form = LocalKernel::Form::Dense;
        k.dim = d0;
        k.dense.assign(d0 * d0, cplx{0.0, 0.0});
        for (std::size_t i = 0; i < d0; ++i) {
            k.dense[i * d0 + i] = 1.0;
        }
        const double c = std::cos(p.theta / 2.0);
        const double s = std::sin(p.theta / 2.0);
        const std::size_t m = p.m;
        // exp(-theta/2 (|m><m+1| - |m+1><m|)): |m> -> c|m> + s|m+1>
        k.dense[m * d0 + m] = c;
        k.dense[(m + 1) * d0 + m] = s;
        k.dense[m * d0 + (m + 1)] = -s;
        k.dense[(m + 1) * d0 + (m + 1)] = c;
        break;
    }
    case GateKind::PhaseK: {
        const auto &p = std::get<PhaseParams>(op.params);
        const std::size_t dm =
            op.targets.size() == 2 ? reg.dim(op.targets[1]) : 1;
        k.form = LocalKernel::Form::Diagonal;
        k.dim = d0 * dm;
        k.diag.resize(k.dim);
        for (std::size_t x = 0; x < dm; ++x) {
            const std::int64_t mult = op.targets.size() == 2
                                          ? static_cast<std::int64_t>(x)
                                          : 1;
            for (std::size_t t = 0; t < d0; ++t) {
                const std::int64_t charge =
                    p.level ? (t == *p.level ? 1 : 0)
                            : static_cast<std::int64_t>(t);
                // reduce exactly before converting to an angle
                std::int64_t e = (p.num % p.den) * ((mult * (charge - p.offset)) % p.den);
                e %= p.den;
                if (e < 0) {
                    e += p.den;
                }
                k.diag[t + d0 * x] =
                    std::polar(1.0, 2.0 * kPi * static_cast<double>(e) /
                                        static_cast<double>(p.den));
            }
        }
        break;
    }
    case GateKind::DenseUnitary: {
        const auto &m = std::get<DenseMatrix>(op.params);
        k.form = LocalKernel::Form::Dense;
        k.dim = m.dim;
        k.dense = m.entries;
        break;
    }
    }
    return k;
}

} // namespace qudicke
