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
// Simulator: gate semantics, projection, sampling, dense/sparse agreement and
// the exchange formats. Gate actions are checked against a brute-force
// reference that applies each kind's defining formula to basis digits.

#include <catch_amalgamated.hpp>

#include <cmath>
#include <random>
#include <sstream>

#include "qudicke/circuit.hpp"
#include "qudicke/exchange.hpp"
#include "qudicke/gates.hpp"
#include "qudicke/state.hpp"

using namespace qudicke;
using Catch::Matchers::WithinAbs;

namespace {

struct Term {
    Digits local;
    cplx coeff;
};

// Defining action of a gate on its target digits.
std::vector<Term> reference_action(const GateOp &op, const QuditRegister &reg,
                                   const Digits &t) {
    const std::size_t d = reg.dim(op.targets[0]);
    const double tau = 2.0 * kPi;
    switch (op.kind) {
    case GateKind::Id:
        return {{t, 1.0}};
    case GateKind::Xd:
        return {{{(t[0] + 1) % d}, 1.0}};
    case GateKind::XdDag:
        return {{{(t[0] + d - 1) % d}, 1.0}};
    case GateKind::Xswap: {
        const auto &p = std::get<SwapLevels>(op.params);
        std::size_t v = t[0] == p.a ? p.b : (t[0] == p.b ? p.a : t[0]);
        return {{{v}, 1.0}};
    }
    case GateKind::Sum:
        return {{{(t[0] + t[1]) % d, t[1]}, 1.0}};
    case GateKind::SumDag:
        return {{{(t[0] + d - t[1] % d) % d, t[1]}, 1.0}};
    case GateKind::Hd:
    case GateKind::HdDag: {
        const double sign = op.kind == GateKind::Hd ? 1.0 : -1.0;
        std::vector<Term> out;
        for (std::size_t y = 0; y < d; ++y) {
            out.push_back({{y}, std::polar(1.0 / std::sqrt(double(d)),
                                           sign * tau * double(t[0] * y) / double(d))});
        }
        return out;
    }
    case GateKind::Rot: {
        const auto &p = std::get<RotParams>(op.params);
        const double c = std::cos(p.theta / 2), s = std::sin(p.theta / 2);
        if (t[0] == p.m) {
            return {{{p.m}, c}, {{p.m + 1}, s}};
        }
        if (t[0] == p.m + 1) {
            return {{{p.m}, -s}, {{p.m + 1}, c}};
        }
        return {{t, 1.0}};
    }
    case GateKind::PhaseK: {
        const auto &p = std::get<PhaseParams>(op.params);
        const double x = op.targets.size() == 2 ? double(t[1]) : 1.0;
        const double charge = p.level ? (t[0] == *p.level ? 1.0 : 0.0) : double(t[0]);
        const double angle = tau * double(p.num) / double(p.den) * x * (charge - double(p.offset));
        return {{t, std::polar(1.0, angle)}};
    }
    case GateKind::DenseUnitary: {
        const auto &m = std::get<DenseMatrix>(op.params);
        std::size_t col = 0, mult = 1;
        for (std::size_t q = 0; q < t.size(); ++q) {
            col += t[q] * mult;
            mult *= reg.dim(op.targets[q]);
        }
        std::vector<Term> out;
        for (std::size_t row = 0; row < m.dim; ++row) {
            Digits loc(t.size());
            std::size_t r = row;
            for (std::size_t q = 0; q < t.size(); ++q) {
                loc[q] = r % reg.dim(op.targets[q]);
                r /= reg.dim(op.targets[q]);
            }
            out.push_back({loc, m.entries[row * m.dim + col]});
        }
        return out;
    }
    }
    return {};
}

StateVector reference_apply(const StateVector &in, const GateOp &op) {
    const auto &reg = in.reg();
    StateVector out(reg);
    for (index_t i = 0; i < reg.total_dimension(); ++i) {
        const cplx a = in.amplitude(i);
        if (a == cplx{}) {
            continue;
        }
        auto digits = reg.unflatten(i);
        bool active = true;
        for (const auto &c : op.controls) {
            active = active && digits[c.wire] == c.value;
        }
        if (!active) {
            out.add(i, a);
            continue;
        }
        Digits t;
        for (auto w : op.targets) {
            t.push_back(digits[w]);
        }
        for (const auto &term : reference_action(op, reg, t)) {
            auto od = digits;
            for (std::size_t q = 0; q < op.targets.size(); ++q) {
                od[op.targets[q]] = term.local[q];
            }
            out.add(reg.flatten(od), term.coeff * a);
        }
    }
    return out;
}

StateVector random_state(const QuditRegister &reg, std::mt19937_64 &rng) {
    std::normal_distribution<double> g;
    StateVector s(reg);
    for (index_t i = 0; i < reg.total_dimension(); ++i) {
        s.set(i, {g(rng), g(rng)});
    }
    normalize(s);
    return s;
}

std::size_t pick(std::mt19937_64 &rng, std::size_t lo, std::size_t hi) {
    return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

DenseMatrix random_unitary(std::size_t dim, std::mt19937_64 &rng) {
    // Gram-Schmidt on a random complex matrix
    std::normal_distribution<double> g;
    std::vector<std::vector<cplx>> cols(dim, std::vector<cplx>(dim));
    for (auto &c : cols) {
        for (auto &x : c) {
            x = {g(rng), g(rng)};
        }
    }
    for (std::size_t j = 0; j < dim; ++j) {
        for (std::size_t p = 0; p < j; ++p) {
            cplx dot{};
            for (std::size_t i = 0; i < dim; ++i) {
                dot += std::conj(cols[p][i]) * cols[j][i];
            }
            for (std::size_t i = 0; i < dim; ++i) {
                cols[j][i] -= dot * cols[p][i];
            }
        }
        double nrm = 0;
        for (auto &x : cols[j]) {
            nrm += std::norm(x);
        }
        for (auto &x : cols[j]) {
            x /= std::sqrt(nrm);
        }
    }
    DenseMatrix m{dim, std::vector<cplx>(dim * dim)};
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            m.entries[r * dim + c] = cols[c][r];
        }
    }
    return m;
}

// A random valid op of the given kind on a register of >= 3 wires.
GateOp random_op(GateKind kind, const QuditRegister &reg, std::mt19937_64 &rng) {
    std::vector<std::size_t> wires(reg.size());
    std::iota(wires.begin(), wires.end(), 0);
    std::shuffle(wires.begin(), wires.end(), rng);
    const std::size_t w0 = wires[0], w1 = wires[1];
    const std::size_t d0 = reg.dim(w0);
    GateOp op;
    switch (kind) {
    case GateKind::Xd: op = gate::xd(w0); break;
    case GateKind::XdDag: op = gate::xd_dag(w0); break;
    case GateKind::Id: op = gate::id(w0); break;
    case GateKind::Hd: op = gate::hd(w0); break;
    case GateKind::HdDag: op = gate::hd_dag(w0); break;
    case GateKind::Xswap: {
        const std::size_t a = pick(rng, 0, d0 - 1);
        op = gate::xswap(w0, a, (a + 1 + pick(rng, 0, d0 - 2)) % d0);
        break;
    }
    case GateKind::Rot:
        op = gate::rot(w0, pick(rng, 0, d0 - 2),
                       std::uniform_real_distribution<double>(-7, 7)(rng));
        break;
    case GateKind::Sum: op = gate::sum(w0, w1); break;
    case GateKind::SumDag: op = gate::sum_dag(w0, w1); break;
    case GateKind::PhaseK: {
        PhaseParams p{static_cast<std::int64_t>(pick(rng, 0, 9)) - 4,
                      static_cast<std::int64_t>(pick(rng, 1, 8)),
                      static_cast<std::int64_t>(pick(rng, 0, 6)) - 3, std::nullopt};
        if (pick(rng, 0, 1) == 1) {
            p.level = pick(rng, 0, d0 - 1);
        }
        op = pick(rng, 0, 1) == 1 ? gate::phase_k(w0, w1, p) : gate::phase_k(w0, p);
        break;
    }
    case GateKind::DenseUnitary:
        op = gate::dense({w0, w1}, random_unitary(d0 * reg.dim(w1), rng));
        break;
    }
    const std::size_t nctl = pick(rng, 0, 2);
    std::size_t next = op.targets.size();
    for (std::size_t c = 0; c < nctl && next < wires.size(); ++c, ++next) {
        op = gate::controlled(op, wires[next], pick(rng, 0, reg.dim(wires[next]) - 1));
    }
    return op;
}

const GateKind kAllKinds[] = {GateKind::Xd,     GateKind::XdDag, GateKind::Xswap,
                              GateKind::Sum,    GateKind::SumDag, GateKind::Hd,
                              GateKind::HdDag,  GateKind::Rot,   GateKind::PhaseK,
                              GateKind::DenseUnitary, GateKind::Id};

QuditRegister random_register(std::mt19937_64 &rng) {
    std::vector<std::size_t> dims(pick(rng, 3, 4));
    for (auto &d : dims) {
        d = pick(rng, 2, 4);
    }
    return QuditRegister(dims);
}

double max_diff(const StateVector &a, const StateVector &b) {
    double m = 0;
    for (index_t i = 0; i < a.reg().total_dimension(); ++i) {
        m = std::max(m, std::abs(a.amplitude(i) - b.amplitude(i)));
    }
    return m;
}

} // namespace

TEST_CASE("basis states follow the site-1-least-significant convention") {
    auto s = new_basis_state(QuditRegister({3, 3, 3}), {0, 0, 2});
    CHECK(s.amplitude(18) == cplx{1.0, 0.0});
    CHECK(norm_squared(s) == 1.0);

    auto q = new_basis_state(QuditRegister({2}), {1});
    CHECK(q.amplitude(0) == cplx{});
    CHECK(q.amplitude(1) == cplx{1.0, 0.0});

    const QuditRegister mixed({4, 2});
    CHECK(mixed.flatten(Digits{3, 1}) == 7);
    CHECK(new_basis_state(mixed, {3, 1}).amplitude(7) == cplx{1.0, 0.0});

    CHECK_THROWS_AS(new_basis_state(QuditRegister({3}), {3}), DomainError);
}

TEST_CASE("register invariants") {
    CHECK_THROWS_AS(QuditRegister(std::vector<std::size_t>{3, 1}), DomainError);
    CHECK(ket_string({1, 0, 2}) == "2_0_1");
    std::mt19937_64 rng(7);
    for (int rep = 0; rep < 50; ++rep) {
        const auto reg = random_register(rng);
        const index_t i = pick(rng, 0, reg.total_dimension() - 1);
        CHECK(reg.flatten(reg.unflatten(i)) == i);
    }
    // Oversized registers exist for inspection but refuse indexing.
    const QuditRegister huge(std::vector<std::size_t>(70, 2));
    CHECK_FALSE(huge.indexable());
    CHECK(huge.size() == 70);
    CHECK_THROWS_AS(huge.total_dimension(), CapacityError);
}

TEST_CASE("gate action examples") {
    const QuditRegister q3({3});
    CHECK(apply_gate(new_basis_state(q3, {2}), gate::xd(0)).amplitude(0) == cplx{1.0, 0.0});

    const QuditRegister q44({4, 4});
    auto s = apply_gate(new_basis_state(q44, {1, 2}), gate::sum(0, 1));
    CHECK(std::abs(s.amplitude(Digits{3, 2}) - 1.0) < 1e-15);

    // |m> -> cos(theta/2)|m> + sin(theta/2)|m+1>
    auto r = apply_gate(new_basis_state(QuditRegister({2}), {0}), gate::rot(0, 0, kPi / 2));
    CHECK_THAT(r.amplitude(0).real(), WithinAbs(std::sqrt(0.5), 1e-15));
    CHECK_THAT(r.amplitude(1).real(), WithinAbs(std::sqrt(0.5), 1e-15));

    auto h = apply_gate(new_basis_state(QuditRegister({3}), {1}), gate::hd(0));
    for (std::size_t y = 0; y < 3; ++y) {
        const cplx want = std::polar(1 / std::sqrt(3.0), 2 * kPi * double(y) / 3);
        CHECK(std::abs(h.amplitude(y) - want) < 1e-15);
    }
}

TEST_CASE("gate validation rejects malformed ops") {
    Circuit c{QuditRegister({3, 2}), {}, std::nullopt, 1};
    CHECK_THROWS_AS(c.append(gate::rot(0, 2, 0.1)), DomainError);
    CHECK_THROWS_AS(c.append(gate::xswap(0, 0, 3)), DomainError);
    CHECK_THROWS_AS(gate::xswap(0, 1, 1), DomainError);
    CHECK_THROWS_AS(c.append(gate::controlled(gate::xd(0), 1, 2)), DomainError);
    CHECK_THROWS_AS(c.append(gate::xd(5)), DomainError);
    CHECK_THROWS_AS(c.append(gate::controlled(gate::xd(0), 0, 1)), DomainError);
    DenseMatrix bad{2, {1.0, 1.0, 0.0, 1.0}};
    CHECK_THROWS_AS(gate::dense({1}, bad), DomainError);
    CHECK_THROWS_AS(gate::controlled(gate::controlled(gate::controlled(gate::xd(0), 1, 0), 2, 0), 3, 0),
                    DomainError);
}

TEST_CASE("every gate kind matches its defining action, preserves norm and inverts") {
    std::mt19937_64 rng(20260516);
    for (auto kind : kAllKinds) {
        CAPTURE(to_string(kind));
        for (int rep = 0; rep < 12; ++rep) {
            const auto reg = random_register(rng);
            const auto op = random_op(kind, reg, rng);
            const auto x = random_state(reg, rng);
            const auto y = apply_gate(x, op);
            CHECK(max_diff(y, reference_apply(x, op)) < 1e-10);
            CHECK_THAT(norm(y), WithinAbs(1.0, 1e-12));
            CHECK(max_diff(apply_gate(y, adjoint(op)), x) < 1e-10);
            // sparse engine agrees
            CHECK(max_diff(to_dense(apply_gate(to_sparse(x), op)), y) < 1e-12);
        }
    }
}

TEST_CASE("controlled ops are the identity off their control value") {
    std::mt19937_64 rng(11);
    for (auto kind : kAllKinds) {
        const auto reg = QuditRegister({3, 3, 3, 2});
        auto op = random_op(kind, reg, rng);
        op.controls.clear();
        std::size_t ctl = 0;
        while (std::find(op.targets.begin(), op.targets.end(), ctl) != op.targets.end()) {
            ++ctl;
        }
        op = gate::controlled(op, ctl, 1);
        for (index_t i = 0; i < reg.total_dimension(); ++i) {
            if (reg.digit(i, ctl) == 1) {
                continue;
            }
            const auto in = new_basis_state(reg, reg.unflatten(i));
            CHECK(max_diff(apply_gate(in, op), in) < 1e-15);
        }
    }
}

TEST_CASE("fidelity") {
    std::mt19937_64 rng(3);
    const QuditRegister reg({3, 2});
    const auto x = random_state(reg, rng);
    CHECK_THAT(fidelity(x, x), WithinAbs(1.0, 1e-12));
    auto y = x;
    for (index_t i = 0; i < reg.total_dimension(); ++i) {
        y.set(i, y.amplitude(i) * std::polar(1.0, 0.731));
    }
    CHECK_THAT(fidelity(x, y), WithinAbs(1.0, 1e-12));
    CHECK(fidelity(new_basis_state(QuditRegister({2}), {0}),
                   new_basis_state(QuditRegister({2}), {1})) == 0.0);
    CHECK_THROWS_AS(fidelity(x, new_basis_state(QuditRegister({2, 3}), {0, 0})), DomainError);
}

TEST_CASE("exact projection") {
    const QuditRegister q({2});
    auto plus = apply_gate(new_basis_state(q, {0}), gate::hd(0));
    const std::vector<std::size_t> w0{0};
    auto pr = project_on_outcome(plus, w0, {0});
    CHECK_THAT(pr.probability, WithinAbs(0.5, 1e-15));
    CHECK_THAT(std::abs(pr.conditional.amplitude(0)), WithinAbs(1.0, 1e-15));

    const QuditRegister reg({3, 4});
    const auto b = new_basis_state(reg, {2, 3});
    const std::vector<std::size_t> both{0, 1};
    auto pb = project_on_outcome(b, both, {2, 3});
    CHECK(pb.probability == 1.0);
    CHECK(max_diff(pb.conditional, b) == 0.0);

    CHECK_THROWS_AS(project_on_outcome(b, both, {1, 3}), ImpossibleOutcome);
    CHECK_THROWS_AS(project_on_outcome(b, both, {3, 3}), DomainError);

    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 20; ++rep) {
        const auto r = random_register(rng);
        const auto x = random_state(r, rng);
        const std::vector<std::size_t> ws{0, r.size() - 1};
        double total = 0.0;
        for (const auto &[o, p] : outcome_distribution(x, ws)) {
            total += project_on_outcome(x, ws, outcome_digits(r, ws, o)).probability;
        }
        CHECK_THAT(total, WithinAbs(1.0, 1e-10));
    }
}

TEST_CASE("seeded sampling") {
    const QuditRegister reg({3, 3});
    const auto b = new_basis_state(reg, {1, 2});
    const std::vector<std::size_t> ws{0, 1};
    CHECK(sample_measure(b, ws, 99).digits == Digits{1, 2});

    std::mt19937_64 rng(8);
    const auto x = random_state(reg, rng);
    const auto m1 = sample_measure(x, ws, 1234);
    const auto m2 = sample_measure(x, ws, 1234);
    CHECK(m1.digits == m2.digits);
    CHECK(max_diff(m1.collapsed, m2.collapsed) == 0.0);

    const auto plus = apply_gate(new_basis_state(QuditRegister({2}), {0}), gate::hd(0));
    const std::vector<std::size_t> w0{0};
    const auto counts = sample_counts(plus, w0, 100000, 42);
    const double f0 = double(counts.at(0)) / 1e5;
    CHECK_THAT(f0, WithinAbs(0.5, 0.01));
    CHECK(counts == sample_counts(plus, w0, 100000, 42));
}

TEST_CASE("logical depth layers grouped runs as one unit") {
    Circuit c{QuditRegister({2, 2, 2, 2}), {}, std::nullopt, 2};
    CHECK(logical_depth(c) == 0);
    c.append(gate::xd(0));
    c.append(gate::xd(1));
    CHECK(logical_depth(c) == 1);
    c.append(gate::grouped(gate::sum(2, 0), 7));
    c.append(gate::grouped(gate::sum(3, 0), 7));
    CHECK(logical_depth(c) == 2);
    c.append(gate::sum(2, 0));
    c.append(gate::sum(3, 0));
    CHECK(logical_depth(c) == 4);
}

TEST_CASE("dense and sparse simulation agree on random circuits") {
    std::mt19937_64 rng(17);
    for (int rep = 0; rep < 10; ++rep) {
        const auto reg = random_register(rng);
        Circuit c{reg, {}, std::nullopt, reg.size()};
        for (int g = 0; g < 25; ++g) {
            c.append(random_op(kAllKinds[pick(rng, 0, std::size(kAllKinds) - 1)], reg, rng));
        }
        const auto dense = simulate(c);
        const auto sparse = simulate_as<SparseStateVector>(c);
        CHECK(max_diff(dense, to_dense(sparse)) < 1e-12);
        CHECK_THAT(norm(dense), WithinAbs(1.0, 1e-12));
    }
}

TEST_CASE("sparse amplitude cap") {
    Circuit c{QuditRegister({4, 4}), {}, std::nullopt, 2};
    c.append(gate::hd(0));
    c.append(gate::hd(1));
    CHECK_NOTHROW(simulate_as<SparseStateVector>(c, 16));
    CHECK_THROWS_AS(simulate_as<SparseStateVector>(c, 15), CapacityError);
}

TEST_CASE("circuit exchange JSON round-trips") {
    std::mt19937_64 rng(23);
    const auto reg = QuditRegister({3, 2, 4, 2});
    Circuit c{reg, {}, std::nullopt, 2};
    for (auto kind : kAllKinds) {
        c.append(gate::grouped(random_op(kind, reg, rng), kind == GateKind::Sum ? 3 : 0));
    }
    c.set_accept_rule({{2, 3}, {1, 0}});
    const auto text = circuit_to_json(c).dump();
    const auto back = circuit_from_json(nlohmann::json::parse(text));
    CHECK(back.ops == c.ops);
    CHECK(back.accept_rule == c.accept_rule);
    CHECK(back.system_wires == c.system_wires);
    CHECK(back.reg.dims() == c.reg.dims());
    CHECK(back.reg.label(3) == c.reg.label(3));
    CHECK(max_diff(simulate(back), simulate(c)) == 0.0);

    const auto j = circuit_to_json(c);
    for (const char *field : {"register", "ops", "accept_rule"}) {
        CHECK(j.contains(field));
    }
    CHECK(j["register"] == nlohmann::json({3, 2, 4, 2}));
    for (const auto &op : j["ops"]) {
        for (const char *field : {"kind", "params", "targets", "controls"}) {
            CHECK(op.contains(field));
        }
    }

    auto bad = j;
    bad["ops"][0]["targets"] = {9};
    CHECK_THROWS_AS(circuit_from_json(bad), DomainError);
    bad = j;
    bad["ops"][0]["kind"] = "Toffoli";
    CHECK_THROWS_AS(circuit_from_json(bad), DomainError);
    CHECK_THROWS_AS(circuit_from_json(nlohmann::json::object()), DomainError);
}

TEST_CASE("amplitude CSV") {
    const QuditRegister reg({3, 2});
    std::mt19937_64 rng(29);
    const auto x = random_state(reg, rng);
    std::stringstream ss;
    write_amplitudes_csv(ss, x);
    const std::string text = ss.str();
    CHECK(text.rfind("index,digits,re,im\n", 0) == 0);
    // index 5 = digits (2, 1), printed site n first
    CHECK(text.find("\n5,1_2,") != std::string::npos);
    const auto back = read_amplitudes_csv(ss, reg);
    CHECK(max_diff(back, x) == 0.0);

    std::stringstream broken("index,digits,re,im\n5,2_1,0.5,0\n");
    CHECK_THROWS_AS(read_amplitudes_csv(broken, reg), DomainError);
}

TEST_CASE("inverse QFT block is the inverse of the forward transform") {
    const auto m = inverse_qft_matrix(3);
    CHECK(m.dim == 8);
    const QuditRegister reg({2, 2, 2});
    for (std::size_t k = 0; k < 8; ++k) {
        // forward-transformed |k> with wire 0 the lowest bit
        StateVector s(reg);
        for (std::size_t y = 0; y < 8; ++y) {
            s.set(y, std::polar(1 / std::sqrt(8.0), 2 * kPi * double(k * y) / 8));
        }
        const auto out = apply_gate(s, gate::dense({0, 1, 2}, m));
        CHECK_THAT(std::norm(out.amplitude(k)), WithinAbs(1.0, 1e-12));
    }
}
