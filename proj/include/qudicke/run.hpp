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
 * Problem specs, dispatch to builders and oracles, postselected runs and the
 * RunReport record with its JSON form.
 */
#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <limits>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include <json.hpp>

#include "circuit.hpp"
#include "dicke.hpp"
#include "probability.hpp"
#include "qpe.hpp"
#include "sequential.hpp"

namespace qudicke {

enum class Family { SpinS, SUD };
enum class Method { Sequential, QpeLog, Hadamard, Fanout };

inline std::string_view to_string(Family f) {
    return f == Family::SpinS ? "spin-s" : "sud";
}

inline std::string_view to_string(Method m) {
    switch (m) {
    case Method::Sequential:
        return "sequential";
    case Method::QpeLog:
        return "qpe-log";
    case Method::Hadamard:
        return "hadamard";
    case Method::Fanout:
        return "fanout";
    }
    return "?";
}

inline Family family_from_string(std::string_view s) {
    if (s == "spin-s") {
        return Family::SpinS;
    }
    if (s == "sud") {
        return Family::SUD;
    }
    throw DomainError("unknown family '" + std::string(s) + "' (spin-s|sud)");
}

inline Method method_from_string(std::string_view s) {
    for (auto m : {Method::Sequential, Method::QpeLog, Method::Hadamard, Method::Fanout}) {
        if (to_string(m) == s) {
            return m;
        }
    }
    throw DomainError("unknown method '" + std::string(s) +
                      "' (sequential|qpe-log|hadamard|fanout)");
}

inline constexpr Method kProbabilisticMethods[] = {Method::QpeLog, Method::Hadamard,
                                                   Method::Fanout};

/// One preparation task. `parameter` overrides p (spin-s, one entry) or xi.
struct ProblemSpec {
    Family family = Family::SpinS;
    std::size_t n = 1;
    std::size_t twice_s = 1;
    std::size_t k = 0;
    Occupation kvec;
    Method method = Method::Sequential;
    std::optional<std::vector<double>> parameter;

    [[nodiscard]] DickeSpecSpinS spin_s() const { return {n, twice_s, k}; }
    [[nodiscard]] DickeSpecSUD sud() const { return {n, kvec}; }

    void validate() const {
        if (family == Family::SpinS) {
            spin_s().validate();
            if (parameter) {
                detail::require(parameter->size() == 1, "spin-s takes a single p");
                const double p = parameter->front();
                detail::require(p >= 0.0 && p <= 1.0, "p must lie in [0, 1]");
            }
        } else {
            sud().validate();
            if (parameter) {
                detail::require(parameter->size() == kvec.size(),
                                "xi must have d=" + std::to_string(kvec.size()) +
                                    " entries");
            }
        }
        detail::require(!(parameter && method == Method::Sequential),
                        "sequential preparation takes no parameter");
    }

    bool operator==(const ProblemSpec &) const = default;
};

inline Circuit build_circuit(const ProblemSpec &spec) {
    spec.validate();
    if (spec.family == Family::SpinS) {
        const auto s = spec.spin_s();
        std::optional<double> p;
        if (spec.parameter) {
            p = spec.parameter->front();
        }
        switch (spec.method) {
        case Method::Sequential:
            return build_sequential_spin_s(s);
        case Method::QpeLog:
            return build_qpe_log_spin_s(s, p);
        case Method::Hadamard:
            return build_hadamard_test_spin_s(s, p);
        case Method::Fanout:
            return build_fanout_const_spin_s(s, p);
        }
    }
    const auto s = spec.sud();
    switch (spec.method) {
    case Method::Sequential:
        return build_sequential_sud(s);
    case Method::QpeLog:
        return build_qpe_log_sud(s, spec.parameter);
    case Method::Hadamard:
        return build_hadamard_test_sud(s, spec.parameter);
    case Method::Fanout:
        return build_fanout_const_sud(s, spec.parameter);
    }
    throw DomainError("unreachable method");
}

inline StateVector oracle_state(const ProblemSpec &spec) {
    spec.validate();
    return spec.family == Family::SpinS ? spin_s_dicke(spec.spin_s()) : sud_dicke(spec.sud());
}

/// Product-state parameter the builder uses (override or optimum).
inline std::vector<double> effective_parameter(const ProblemSpec &spec) {
    if (spec.parameter) {
        return *spec.parameter;
    }
    return spec.family == Family::SpinS
               ? probability_spin_s(spec.n, spec.twice_s, spec.k).optimal_parameter
               : probability_sud(spec.n, spec.kvec).optimal_parameter;
}

/// Closed-form acceptance probability of `spec` (1 for sequential).
inline double expected_acceptance(const ProblemSpec &spec) {
    if (spec.method == Method::Sequential) {
        return 1.0;
    }
    const auto param = effective_parameter(spec);
    return spec.family == Family::SpinS
               ? acceptance_probability_spin_s(spec.n, spec.twice_s, spec.k, param.front())
               : acceptance_probability_sud(spec.n, spec.kvec, param);
}

// ------------------------------------------------------------- resources

struct AncillaCount {
    std::size_t dimension;
    std::size_t count;
    bool operator==(const AncillaCount &) const = default;
};

struct ResourceCount {
    std::size_t gate_count = 0;
    std::size_t logical_depth = 0;
    std::vector<AncillaCount> ancilla_census;
};

/// Gate count, grouped greedy depth, and non-system wires by dimension.
inline ResourceCount count_resources(const Circuit &c) {
    ResourceCount r;
    r.gate_count = c.ops.size();
    r.logical_depth = logical_depth(c);
    std::map<std::size_t, std::size_t> census;
    for (std::size_t w = c.system_wires; w < c.reg.size(); ++w) {
        ++census[c.reg.dim(w)];
    }
    for (const auto &[dim, count] : census) {
        r.ancilla_census.push_back({dim, count});
    }
    return r;
}

// ---------------------------------------------------------------- reports

struct RunReport {
    ProblemSpec spec;
    double acceptance_probability = 0.0;
    double conditional_fidelity = 0.0;
    double expected_repetitions = std::numeric_limits<double>::infinity();
    std::size_t gate_count = 0;
    std::size_t logical_depth = 0;
    std::vector<AncillaCount> ancilla_census;
    std::vector<double> optimal_parameter;
    std::optional<std::uint64_t> seed;
    std::int64_t wallclock_ms = 0;

    /// Probability that non-system, non-postselected wires end in zero.
    double clean_probability = 1.0;
    std::optional<double> expected_probability;
    std::optional<std::uint64_t> shots;
    std::optional<double> sampled_frequency;
    bool passed = false;
    std::string message;

    bool operator==(const RunReport &) const = default;
};

enum class Backend { Auto, Dense, Sparse };

struct RunOptions {
    /// Largest number of stored amplitudes; 0 disables the guard.
    std::size_t max_amplitudes = 1'000'000;
    Backend backend = Backend::Auto;
    std::optional<std::uint64_t> seed;
    std::uint64_t shots = 0;
};

/// Registers up to this size run dense under Backend::Auto.
inline constexpr index_t kDenseAutoLimit = index_t{1} << 16;

namespace detail {

/// "[label:dim, ...]" in wire order.
inline std::string describe(const QuditRegister &reg) {
    std::string out = "[";
    for (std::size_t w = 0; w < reg.size(); ++w) {
        out += (w ? ", " : "") + reg.label(w) + ":" + std::to_string(reg.dim(w));
    }
    return out + "]";
}

inline void check_dense_capacity(const Circuit &c, std::size_t cap) {
    const index_t dim = c.reg.total_dimension();
    if (cap != 0 && dim > cap) {
        throw CapacityError("register " + describe(c.reg) + " needs " +
                            std::to_string(dim) + " amplitudes, cap is " +
                            std::to_string(cap));
    }
}

template <AmplitudeState S>
void fill_outcome(RunReport &r, const Circuit &c, const StateVector &oracle, const S &state,
                  const RunOptions &opts, StateVector *system_out) {
    const auto &reg = c.reg;
    detail::require(c.system_wires == oracle.reg().size() &&
                        std::equal(oracle.reg().wires().begin(), oracle.reg().wires().end(),
                                   reg.wires().begin(),
                                   [](const Wire &a, const Wire &b) { return a.dim == b.dim; }),
                    "oracle register does not match the circuit's system wires");
    const index_t sys_dim = oracle.reg().total_dimension();
    std::vector<bool> checked(reg.size(), false);
    for (std::size_t w = 0; w < c.system_wires; ++w) {
        checked[w] = true;
    }
    std::optional<Projection<S>> proj;
    if (c.accept_rule) {
        for (auto w : c.accept_rule->wires) {
            checked[w] = true;
        }
        try {
            proj.emplace(project_on_outcome(state, c.accept_rule->wires, c.accept_rule->digits));
        } catch (const ImpossibleOutcome &e) {
            r.acceptance_probability = 0.0;
            r.conditional_fidelity = 0.0;
            r.clean_probability = 0.0;
            r.message = e.what();
        }
    }
    if (c.accept_rule && !proj) {
        return;
    }
    const S &cond = proj ? proj->conditional : state;
    if (system_out != nullptr) {
        *system_out = oracle.empty_like();
    }
    r.acceptance_probability = proj ? proj->probability : norm_squared(state);
    cplx overlap{0.0, 0.0};
    double clean = 0.0;
    cond.for_each([&](index_t i, cplx a) {
        for (std::size_t w = 0; w < reg.size(); ++w) {
            if (!checked[w] && reg.digit(i, w) != 0) {
                return;
            }
        }
        clean += std::norm(a);
        overlap += std::conj(oracle.amplitude(i % sys_dim)) * a;
        if (system_out != nullptr) {
            system_out->set(i % sys_dim, a);
        }
    });
    r.clean_probability = std::min(clean, 1.0);
    r.conditional_fidelity = std::clamp(std::norm(overlap), 0.0, 1.0);

    if (opts.shots > 0 && c.accept_rule) {
        const auto seed = opts.seed.value_or(0);
        r.seed = seed;
        r.shots = opts.shots;
        const auto counts = sample_counts(state, c.accept_rule->wires, opts.shots, seed);
        index_t target = 0;
        index_t mult = 1;
        for (std::size_t q = 0; q < c.accept_rule->wires.size(); ++q) {
            target += c.accept_rule->digits[q] * mult;
            mult *= reg.dim(c.accept_rule->wires[q]);
        }
        const auto it = counts.find(target);
        r.sampled_frequency = it == counts.end()
                                  ? 0.0
                                  : static_cast<double>(it->second) /
                                        static_cast<double>(opts.shots);
    }
}

} // namespace detail

/**
 * Simulates from all-zeros, projects exactly on the accept rule (if any) and
 * scores the conditional state against oracle (x) |accept digits> (x) |0...0>.
 * Auto backend: dense up to kDenseAutoLimit amplitudes, sparse beyond.
 * If `system_out` is given it receives the conditional system amplitudes on
 * the branch where all other wires are clean (unnormalized if not clean).
 */
inline RunReport run_postselected(const Circuit &c, const StateVector &oracle,
                                  const RunOptions &opts = {},
                                  StateVector *system_out = nullptr) {
    const auto start = std::chrono::steady_clock::now();
    RunReport r;
    const auto res = count_resources(c);
    r.gate_count = res.gate_count;
    r.logical_depth = res.logical_depth;
    r.ancilla_census = res.ancilla_census;

    const index_t total = c.reg.total_dimension();
    Backend backend = opts.backend;
    if (backend == Backend::Auto) {
        backend = total <= kDenseAutoLimit ? Backend::Dense : Backend::Sparse;
    }
    if (backend == Backend::Dense) {
        detail::check_dense_capacity(c, opts.max_amplitudes);
        detail::fill_outcome(r, c, oracle, simulate_as<StateVector>(c), opts,
                             system_out);
    } else {
        try {
            detail::fill_outcome(
                r, c, oracle, simulate_as<SparseStateVector>(c, opts.max_amplitudes), opts,
                system_out);
        } catch (const CapacityError &e) {
            throw CapacityError(std::string(e.what()) + " in register " +
                                detail::describe(c.reg));
        }
    }
    r.expected_repetitions = r.acceptance_probability > 0.0
                                 ? 1.0 / r.acceptance_probability
                                 : std::numeric_limits<double>::infinity();
    r.passed = r.acceptance_probability > 0.0 &&
               r.conditional_fidelity >= 1.0 - tol::fidelity &&
               r.clean_probability >= 1.0 - tol::unitarity;
    r.wallclock_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return r;
}

/// As run_postselected, additionally failing unless the accept rule holds
/// with probability one.
inline RunReport verify_sequential(const Circuit &c, const StateVector &oracle,
                                   const RunOptions &opts = {},
                                   StateVector *system_out = nullptr) {
    auto r = run_postselected(c, oracle, opts, system_out);
    r.expected_probability = 1.0;
    if (r.acceptance_probability < 1.0 - tol::unitarity) {
        r.passed = false;
        if (r.message.empty()) {
            r.message = "ancillas not in their final digits with probability one";
        }
    }
    return r;
}

/// Builds, simulates and checks one spec against its oracle and the
/// closed-form acceptance probability.
inline RunReport run_problem(const ProblemSpec &spec, const RunOptions &opts = {},
                             StateVector *system_out = nullptr) {
    const auto circuit = build_circuit(spec);
    const auto oracle = oracle_state(spec);
    RunReport r = spec.method == Method::Sequential
                      ? verify_sequential(circuit, oracle, opts, system_out)
                      : run_postselected(circuit, oracle, opts, system_out);
    r.spec = spec;
    if (spec.method != Method::Sequential) {
        r.optimal_parameter = effective_parameter(spec);
        r.expected_probability = expected_acceptance(spec);
        if (std::abs(r.acceptance_probability - *r.expected_probability) > tol::fidelity) {
            r.passed = false;
            r.message = "acceptance probability differs from the closed form";
        }
    }
    return r;
}

// ------------------------------------------------------------------ JSON

namespace detail {

inline nlohmann::json finite_or_null(double x) {
    return std::isfinite(x) ? nlohmann::json(x) : nlohmann::json(nullptr);
}

inline double number_or_inf(const nlohmann::json &j) {
    return j.is_null() ? std::numeric_limits<double>::infinity() : j.get<double>();
}

} // namespace detail

inline nlohmann::json to_json(const ProblemSpec &s) {
    nlohmann::json j;
    j["family"] = to_string(s.family);
    j["n"] = s.n;
    if (s.family == Family::SpinS) {
        j["s"] = static_cast<double>(s.twice_s) / 2.0;
        j["k"] = s.k;
    } else {
        j["kvec"] = s.kvec;
    }
    j["method"] = to_string(s.method);
    if (s.parameter) {
        j["parameter"] = *s.parameter;
    }
    return j;
}

/// Parses s as a half-integer (0.5, 1, 1.5, ...).
inline std::size_t twice_spin(double s) {
    const double t = 2.0 * s;
    detail::require(t >= 1.0 && std::abs(t - std::round(t)) < 1e-9,
                    "s must be a positive half-integer");
    return static_cast<std::size_t>(std::llround(t));
}

inline ProblemSpec problem_spec_from_json(const nlohmann::json &j) {
    ProblemSpec s;
    s.family = family_from_string(j.at("family").get<std::string>());
    s.n = j.at("n").get<std::size_t>();
    if (s.family == Family::SpinS) {
        s.twice_s = twice_spin(j.at("s").get<double>());
        s.k = j.at("k").get<std::size_t>();
    } else {
        s.kvec = j.at("kvec").get<Occupation>();
    }
    s.method = method_from_string(j.at("method").get<std::string>());
    if (j.contains("parameter")) {
        s.parameter = j["parameter"].get<std::vector<double>>();
    }
    return s;
}

inline nlohmann::json to_json(const RunReport &r) {
    nlohmann::json j;
    j["spec"] = to_json(r.spec);
    j["acceptance_probability"] = r.acceptance_probability;
    j["conditional_fidelity"] = r.conditional_fidelity;
    j["expected_repetitions"] = detail::finite_or_null(r.expected_repetitions);
    j["gate_count"] = r.gate_count;
    j["logical_depth"] = r.logical_depth;
    j["ancilla_census"] = nlohmann::json::array();
    for (const auto &a : r.ancilla_census) {
        j["ancilla_census"].push_back({{"dimension", a.dimension}, {"count", a.count}});
    }
    j["optimal_parameter"] = r.optimal_parameter;
    j["seed"] = r.seed ? nlohmann::json(*r.seed) : nlohmann::json(nullptr);
    j["wallclock_ms"] = r.wallclock_ms;
    j["clean_probability"] = r.clean_probability;
    j["expected_probability"] =
        r.expected_probability ? nlohmann::json(*r.expected_probability) : nlohmann::json(nullptr);
    j["shots"] = r.shots ? nlohmann::json(*r.shots) : nlohmann::json(nullptr);
    j["sampled_frequency"] =
        r.sampled_frequency ? nlohmann::json(*r.sampled_frequency) : nlohmann::json(nullptr);
    j["passed"] = r.passed;
    j["message"] = r.message;
    return j;
}

inline RunReport run_report_from_json(const nlohmann::json &j) {
    RunReport r;
    r.spec = problem_spec_from_json(j.at("spec"));
    r.acceptance_probability = j.at("acceptance_probability").get<double>();
    r.conditional_fidelity = j.at("conditional_fidelity").get<double>();
    r.expected_repetitions = detail::number_or_inf(j.at("expected_repetitions"));
    r.gate_count = j.at("gate_count").get<std::size_t>();
    r.logical_depth = j.at("logical_depth").get<std::size_t>();
    for (const auto &a : j.at("ancilla_census")) {
        r.ancilla_census.push_back(
            {a.at("dimension").get<std::size_t>(), a.at("count").get<std::size_t>()});
    }
    r.optimal_parameter = j.at("optimal_parameter").get<std::vector<double>>();
    if (!j.at("seed").is_null()) {
        r.seed = j["seed"].get<std::uint64_t>();
    }
    r.wallclock_ms = j.at("wallclock_ms").get<std::int64_t>();
    r.clean_probability = j.value("clean_probability", 1.0);
    if (j.contains("expected_probability") && !j["expected_probability"].is_null()) {
        r.expected_probability = j["expected_probability"].get<double>();
    }
    if (j.contains("shots") && !j["shots"].is_null()) {
        r.shots = j["shots"].get<std::uint64_t>();
    }
    if (j.contains("sampled_frequency") && !j["sampled_frequency"].is_null()) {
        r.sampled_frequency = j["sampled_frequency"].get<double>();
    }
    r.passed = j.value("passed", false);
    r.message = j.value("message", std::string{});
    return r;
}

} // namespace qudicke
