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
 * Circuit exchange format (JSON), amplitude CSV and level-set JSON.
 *
 * Circuit JSON:
 *   {"register": [3, 3, 3, 4], "labels": ["sys1", ...],
 *    "ops": [{"kind": "Rot", "targets": [0], "controls": [{"wire": 3, "value": 1}],
 *             "params": {"m": 0, "theta": 1.23}}, ...],
 *    "accept_rule": {"wires": [...], "digits": [...]} | null,
 *    "system_wires": n}
 * "labels" and "system_wires" are optional on input; a nonzero layer group
 * rides in params as "group".
 */
#pragma once

#include <cstdio>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <type_traits>
#include <variant>
#include <vector>

#include <json.hpp>

#include "circuit.hpp"
#include "level_sets.hpp"

namespace qudicke {

namespace detail {

inline nlohmann::json params_to_json(const GateOp &op) {
    nlohmann::json p = nlohmann::json::object();
    std::visit(
        [&](const auto &v) {
            using T = std::decay_t<decltype(v)>;
            if constexpr (std::is_same_v<T, SwapLevels>) {
                p["a"] = v.a;
                p["b"] = v.b;
            } else if constexpr (std::is_same_v<T, RotParams>) {
                p["m"] = v.m;
                p["theta"] = v.theta;
            } else if constexpr (std::is_same_v<T, PhaseParams>) {
                p["num"] = v.num;
                p["den"] = v.den;
                p["offset"] = v.offset;
                if (v.level) {
                    p["level"] = *v.level;
                }
            } else if constexpr (std::is_same_v<T, DenseMatrix>) {
                p["dim"] = v.dim;
                std::vector<double> re;
                std::vector<double> im;
                for (const auto &e : v.entries) {
                    re.push_back(e.real());
                    im.push_back(e.imag());
                }
                p["re"] = re;
                p["im"] = im;
            }
        },
        op.params);
    if (op.group != 0) {
        p["group"] = op.group;
    }
    return p;
}

inline GateParams params_from_json(GateKind kind, const nlohmann::json &p) {
    switch (kind) {
    case GateKind::Xswap:
        return SwapLevels{p.at("a").get<std::size_t>(), p.at("b").get<std::size_t>()};
    case GateKind::Rot:
        return RotParams{p.at("m").get<std::size_t>(), p.at("theta").get<double>()};
    case GateKind::PhaseK: {
        PhaseParams pp{p.at("num").get<std::int64_t>(), p.at("den").get<std::int64_t>(),
                       p.value("offset", std::int64_t{0}), std::nullopt};
        if (p.contains("level")) {
            pp.level = p["level"].get<std::size_t>();
        }
        return pp;
    }
    case GateKind::DenseUnitary: {
        DenseMatrix m;
        m.dim = p.at("dim").get<std::size_t>();
        const auto re = p.at("re").get<std::vector<double>>();
        const auto im = p.at("im").get<std::vector<double>>();
        require(re.size() == m.dim * m.dim && im.size() == re.size(),
                "DenseUnitary: entry count does not match dim");
        for (std::size_t i = 0; i < re.size(); ++i) {
            m.entries.emplace_back(re[i], im[i]);
        }
        return m;
    }
    default:
        return std::monostate{};
    }
}

} // namespace detail

inline nlohmann::json gate_to_json(const GateOp &op) {
    nlohmann::json j;
    j["kind"] = to_string(op.kind);
    j["targets"] = op.targets;
    j["controls"] = nlohmann::json::array();
    for (const auto &c : op.controls) {
        j["controls"].push_back({{"wire", c.wire}, {"value", c.value}});
    }
    j["params"] = detail::params_to_json(op);
    return j;
}

inline GateOp gate_from_json(const nlohmann::json &j) {
    GateOp op;
    op.kind = gate_kind_from_string(j.at("kind").get<std::string>());
    op.targets = j.at("targets").get<std::vector<std::size_t>>();
    if (j.contains("controls")) {
        for (const auto &c : j["controls"]) {
            op.controls.push_back({c.at("wire").get<std::size_t>(),
                                   c.at("value").get<std::size_t>()});
        }
    }
    const auto params = j.value("params", nlohmann::json::object());
    op.params = detail::params_from_json(op.kind, params);
    op.group = params.value("group", std::uint32_t{0});
    return op;
}

inline nlohmann::json circuit_to_json(const Circuit &c) {
    nlohmann::json j;
    j["register"] = c.reg.dims();
    j["labels"] = nlohmann::json::array();
    for (const auto &w : c.reg.wires()) {
        j["labels"].push_back(w.label);
    }
    j["ops"] = nlohmann::json::array();
    for (const auto &op : c.ops) {
        j["ops"].push_back(gate_to_json(op));
    }
    if (c.accept_rule) {
        j["accept_rule"] = {{"wires", c.accept_rule->wires},
                            {"digits", c.accept_rule->digits}};
    } else {
        j["accept_rule"] = nullptr;
    }
    j["system_wires"] = c.system_wires;
    return j;
}

/// Rebuilds and validates a circuit; malformed input raises DomainError.
inline Circuit circuit_from_json(const nlohmann::json &j) {
    try {
        const auto dims = j.at("register").get<std::vector<std::size_t>>();
        const auto labels = j.value("labels", std::vector<std::string>{});
        detail::require(labels.empty() || labels.size() == dims.size(),
                        "labels and register differ in length");
        std::vector<Wire> wires;
        for (std::size_t w = 0; w < dims.size(); ++w) {
            wires.push_back({dims[w], labels.empty() ? "q" + std::to_string(w) : labels[w]});
        }
        Circuit c{QuditRegister(std::move(wires)), {}, std::nullopt,
                  j.value("system_wires", std::size_t{0})};
        detail::require(c.system_wires <= c.reg.size(), "system_wires exceeds register size");
        for (const auto &op : j.at("ops")) {
            c.append(gate_from_json(op));
        }
        if (j.contains("accept_rule") && !j["accept_rule"].is_null()) {
            c.set_accept_rule({j["accept_rule"].at("wires").get<std::vector<std::size_t>>(),
                               j["accept_rule"].at("digits").get<Digits>()});
        }
        return c;
    } catch (const nlohmann::json::exception &e) {
        throw DomainError(std::string("circuit JSON: ") + e.what());
    }
}

// ---------------------------------------------------------- amplitude CSV

/// Columns index,digits,re,im; digits underscore-joined, highest wire first.
template <AmplitudeState S> void write_amplitudes_csv(std::ostream &out, const S &state) {
    out << "index,digits,re,im\n";
    char buf[64];
    state.for_each([&](index_t i, cplx a) {
        out << i << ',' << ket_string(state.reg().unflatten(i)) << ',';
        std::snprintf(buf, sizeof buf, "%.17g", a.real());
        out << buf << ',';
        std::snprintf(buf, sizeof buf, "%.17g", a.imag());
        out << buf << '\n';
    });
}

/// Reads write_amplitudes_csv output back onto `reg`; digits must agree
/// with the index.
inline StateVector read_amplitudes_csv(std::istream &in, const QuditRegister &reg) {
    StateVector out(reg);
    std::string line;
    detail::require(static_cast<bool>(std::getline(in, line)) && line == "index,digits,re,im",
                    "amplitude CSV: missing header");
    while (std::getline(in, line)) {
        if (line.empty()) {
            continue;
        }
        std::stringstream ss(line);
        std::string idx, digits, re, im;
        detail::require(std::getline(ss, idx, ',') && std::getline(ss, digits, ',') &&
                            std::getline(ss, re, ',') && std::getline(ss, im, ','),
                        "amplitude CSV: malformed row '" + line + "'");
        const index_t i = std::stoull(idx);
        detail::require(i < reg.total_dimension(), "amplitude CSV: index out of range");
        detail::require(ket_string(reg.unflatten(i)) == digits,
                        "amplitude CSV: digits do not match index " + idx);
        out.set(i, cplx{std::stod(re), std::stod(im)});
    }
    return out;
}

// ------------------------------------------------------------ level sets

/// {"kvec": [...], "chi": D^{n/2}, "levels": [{"i", "elements", "labels"}]}
inline nlohmann::json level_sets_to_json(const LevelSetIndex &idx) {
    nlohmann::json j;
    j["kvec"] = idx.kvec();
    j["chi"] = idx.chi();
    j["levels"] = nlohmann::json::array();
    for (std::size_t i = 0; i <= idx.n(); ++i) {
        std::vector<std::size_t> labels;
        for (const auto &a : idx.level(i)) {
            labels.push_back(idx.label(i, a));
        }
        j["levels"].push_back({{"i", i}, {"elements", idx.level(i)}, {"labels", labels}});
    }
    return j;
}

} // namespace qudicke
