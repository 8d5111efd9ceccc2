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
 * Command-line front end: prepare, verify, sweep, levelsets, export-circuit.
 * Exit codes: 0 success, 1 verification failure, 2 usage error.
 */
#pragma once

#include <algorithm>
#include <cstdint>
#include <cstdio>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "exchange.hpp"
#include "level_sets.hpp"
#include "run.hpp"
#include "suites.hpp"

namespace qudicke {

inline constexpr int kExitOk = 0;
inline constexpr int kExitFailed = 1;
inline constexpr int kExitUsage = 2;

namespace cli {

/// Accepts "1", "0.5", "3/2".
inline std::size_t parse_twice_spin(const std::string &text) {
    const auto slash = text.find('/');
    double s = 0.0;
    try {
        if (slash == std::string::npos) {
            s = std::stod(text);
        } else {
            s = std::stod(text.substr(0, slash)) / std::stod(text.substr(slash + 1));
        }
    } catch (const std::exception &) {
        throw DomainError("cannot parse s='" + text + "'");
    }
    return twice_spin(s);
}

struct SpecFlags {
    std::string family;
    std::size_t n = 0;
    std::string s = "1/2";
    std::optional<std::size_t> k;
    std::vector<std::size_t> kvec;
    std::string method = "sequential";
    std::optional<double> p;
    std::vector<double> xi;

    void attach(CLI::App *app, bool with_method = true) {
        app->add_option("--family", family, "spin-s or sud")
            ->required()
            ->check(CLI::IsMember({"spin-s", "sud"}));
        app->add_option("--n", n, "number of system qudits")->required();
        app->add_option("--s", s, "spin (0.5, 1, 3/2, ...)");
        app->add_option("--k", k, "spin-s charge");
        app->add_option("--kvec", kvec, "SU(d) occupations, comma separated")
            ->delimiter(',');
        if (with_method) {
            app->add_option("--method", method, "sequential|qpe-log|hadamard|fanout")
                ->check(CLI::IsMember({"sequential", "qpe-log", "hadamard", "fanout"}));
        }
        app->add_option("--p", p, "override product-state parameter p (spin-s)");
        app->add_option("--xi", xi, "override product-state vector xi (sud)")->delimiter(',');
    }

    [[nodiscard]] ProblemSpec to_spec() const {
        ProblemSpec spec;
        spec.family = family_from_string(family);
        spec.n = n;
        spec.method = method_from_string(method);
        if (spec.family == Family::SpinS) {
            spec.twice_s = parse_twice_spin(s);
            detail::require(k.has_value(), "spin-s needs --k");
            detail::require(kvec.empty() && xi.empty(), "--kvec/--xi apply to sud only");
            spec.k = *k;
            if (p) {
                spec.parameter = std::vector<double>{*p};
            }
        } else {
            detail::require(!kvec.empty(), "sud needs --kvec");
            detail::require(!k && !p, "--k/--p apply to spin-s only");
            spec.kvec = kvec;
            if (!xi.empty()) {
                spec.parameter = xi;
            }
        }
        spec.validate();
        return spec;
    }
};

/// Writes to --out if given, otherwise to `out`.
inline void emit(const std::string &path, std::ostream &out, const std::string &text) {
    if (path.empty()) {
        out << text;
        return;
    }
    std::ofstream f(path);
    detail::require(static_cast<bool>(f), "cannot open '" + path + "' for writing");
    f << text;
}

inline std::optional<std::uint64_t> env_seed() {
    if (const char *s = std::getenv("DICKE_SEED")) {
        try {
            return std::stoull(s);
        } catch (const std::exception &) {
            throw DomainError("DICKE_SEED is not an unsigned integer");
        }
    }
    return std::nullopt;
}

inline std::string fmt17(double x) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", x);
    return buf;
}

} // namespace cli

/**
 * Runs the tool on `args` (program name excluded). Output goes to `out`,
 * diagnostics to `err`.
 */
inline int cli_main(std::vector<std::string> args, std::ostream &out, std::ostream &err) {
    CLI::App app{"Dicke-state preparation circuits on qudits", "qudicke"};
    app.require_subcommand(1);

    cli::SpecFlags prep_flags;
    std::optional<std::uint64_t> prep_seed;
    std::uint64_t prep_shots = 0;
    std::string prep_out;
    std::string prep_format = "json";
    std::size_t prep_cap = 1'000'000;
    auto *prepare = app.add_subcommand("prepare", "build, simulate and verify one spec");
    prep_flags.attach(prepare);
    prepare->add_option("--seed", prep_seed, "sampling seed (default $DICKE_SEED)");
    prepare->add_option("--shots", prep_shots, "sampled repetitions of the postselection");
    prepare->add_option("--out", prep_out, "output file");
    prepare->add_option("--format", prep_format, "json report or csv amplitudes")
        ->check(CLI::IsMember({"json", "csv"}));
    prepare->add_option("--max-amplitudes", prep_cap, "cap on stored amplitudes");

    std::size_t ver_cap = 1'000'000;
    std::optional<std::uint64_t> ver_seed;
    std::uint64_t ver_shots = 10'000;
    std::vector<int> ver_only;
    std::string ver_out;
    auto *verify = app.add_subcommand("verify", "run the acceptance suites");
    verify->add_option("--max-amplitudes", ver_cap, "cap on stored amplitudes");
    verify->add_option("--seed", ver_seed, "suite seed (default $DICKE_SEED)");
    verify->add_option("--shots", ver_shots, "shots per sampled circuit");
    verify->add_option("--only", ver_only, "criterion ids to run")->delimiter(',');
    verify->add_option("--out", ver_out, "write results as JSON");

    cli::SpecFlags sw_flags;
    std::string sw_over = "p";
    double sw_from = 0.0;
    double sw_to = 1.0;
    std::size_t sw_steps = 101;
    std::size_t sw_n_max = 0;
    std::size_t sw_cap = 1'000'000;
    std::string sw_out;
    auto *sweep = app.add_subcommand("sweep", "grid over p or n, CSV output");
    sw_flags.attach(sweep);
    sweep->add_option("--over", sw_over, "p or n")->check(CLI::IsMember({"p", "n"}));
    sweep->add_option("--from", sw_from, "first p");
    sweep->add_option("--to", sw_to, "last p");
    sweep->add_option("--steps", sw_steps, "number of p values")->check(CLI::Range(2, 100001));
    sweep->add_option("--n-max", sw_n_max, "last n when sweeping n (from --n)");
    sweep->add_option("--max-amplitudes", sw_cap, "cap on stored amplitudes");
    sweep->add_option("--out", sw_out, "output file");

    std::vector<std::size_t> ls_kvec;
    bool ls_check = false;
    auto *levelsets = app.add_subcommand("levelsets", "print the level-set index");
    levelsets->add_option("--kvec", ls_kvec, "occupations, comma separated")
        ->required()
        ->delimiter(',');
    levelsets->add_flag("--check", ls_check, "also verify the label monotonicity");

    cli::SpecFlags ex_flags;
    std::string ex_out;
    auto *exportc = app.add_subcommand("export-circuit", "emit the circuit exchange JSON");
    ex_flags.attach(exportc);
    exportc->add_option("--out", ex_out, "output file");

    std::reverse(args.begin(), args.end());
    try {
        app.parse(args);
    } catch (const CLI::ParseError &e) {
        const int code = app.exit(e, out, err);
        return code == 0 ? kExitOk : kExitUsage;
    }

    try {
        if (prepare->parsed()) {
            const auto spec = prep_flags.to_spec();
            RunOptions ro;
            ro.max_amplitudes = prep_cap;
            ro.seed = prep_seed ? prep_seed : cli::env_seed();
            ro.shots = prep_shots;
            StateVector system;
            const auto rep = run_problem(spec, ro, &system);
            if (prep_format == "json") {
                cli::emit(prep_out, out, to_json(rep).dump(2) + "\n");
            } else {
                std::ostringstream csv;
                write_amplitudes_csv(csv, system);
                cli::emit(prep_out, out, csv.str());
            }
            if (!rep.passed) {
                err << "verification failed: " << rep.message << '\n';
            }
            return rep.passed ? kExitOk : kExitFailed;
        }
        if (verify->parsed()) {
            SuiteOptions so;
            so.max_amplitudes = ver_cap;
            so.shots = ver_shots;
            if (auto s = ver_seed ? ver_seed : cli::env_seed()) {
                so.seed = *s;
            }
            using Fn = CriterionResult (*)(const SuiteOptions &);
            const Fn all[] = {suites::criterion1, suites::criterion2, suites::criterion3,
                              suites::criterion4, suites::criterion5, suites::criterion6,
                              suites::criterion7, suites::criterion8, suites::criterion9};
            for (int id : ver_only) {
                detail::require(id >= 1 && id <= 9, "--only ids must lie in 1..9");
            }
            bool ok = true;
            nlohmann::json results = nlohmann::json::array();
            for (int id = 1; id <= 9; ++id) {
                if (!ver_only.empty() &&
                    std::find(ver_only.begin(), ver_only.end(), id) == ver_only.end()) {
                    continue;
                }
                const auto r = all[id - 1](so);
                out << suites::summary_line(r) << std::endl;
                ok = ok && r.passed;
                results.push_back({{"id", r.id}, {"title", r.title}, {"passed", r.passed},
                                   {"cases", r.cases}, {"detail", r.detail},
                                   {"seconds", r.seconds}});
            }
            if (!ver_out.empty()) {
                cli::emit(ver_out, out, results.dump(2) + "\n");
            }
            return ok ? kExitOk : kExitFailed;
        }
        if (sweep->parsed()) {
            auto base = sw_flags.to_spec();
            std::ostringstream csv;
            RunOptions ro;
            ro.max_amplitudes = sw_cap;
            bool ok = true;
            csv << (sw_over == "p" ? "p" : "n")
                << ",acceptance_probability,expected_probability,conditional_fidelity,"
                   "gate_count,logical_depth\n";
            auto row = [&](const std::string &key, const ProblemSpec &spec) {
                const auto r = run_problem(spec, ro);
                ok = ok && r.passed;
                csv << key << ',' << cli::fmt17(r.acceptance_probability) << ','
                    << cli::fmt17(r.expected_probability.value_or(1.0)) << ','
                    << cli::fmt17(r.conditional_fidelity) << ',' << r.gate_count << ','
                    << r.logical_depth << '\n';
            };
            if (sw_over == "p") {
                detail::require(base.method != Method::Sequential,
                                "sweeping p needs a probabilistic method");
                detail::require(base.family == Family::SpinS,
                                "sweeping p applies to spin-s; use --xi for sud");
                detail::require(sw_from >= 0.0 && sw_to <= 1.0 && sw_from <= sw_to,
                                "need 0 <= --from <= --to <= 1");
                for (std::size_t i = 0; i < sw_steps; ++i) {
                    const double p = sw_from + (sw_to - sw_from) * static_cast<double>(i) /
                                                   static_cast<double>(sw_steps - 1);
                    auto spec = base;
                    spec.parameter = std::vector<double>{p};
                    // zero-probability grid ends are reported, not failures
                    const auto r = run_problem(spec, ro);
                    ok = ok && (r.passed || r.acceptance_probability == 0.0);
                    csv << cli::fmt17(p) << ',' << cli::fmt17(r.acceptance_probability) << ','
                        << cli::fmt17(r.expected_probability.value_or(1.0)) << ','
                        << cli::fmt17(r.conditional_fidelity) << ',' << r.gate_count << ','
                        << r.logical_depth << '\n';
                }
            } else {
                detail::require(base.family == Family::SpinS,
                                "sweeping n applies to spin-s (k fixed)");
                const std::size_t last = std::max(sw_n_max, base.n);
                for (std::size_t n = base.n; n <= last; ++n) {
                    auto spec = base;
                    spec.n = n;
                    row(std::to_string(n), spec);
                }
            }
            cli::emit(sw_out, out, csv.str());
            return ok ? kExitOk : kExitFailed;
        }
        if (levelsets->parsed()) {
            detail::require(!ls_kvec.empty(), "--kvec is empty");
            auto j = level_sets_to_json(LevelSetIndex(ls_kvec));
            if (ls_check) {
                const auto chk = verify_level_set_proposition(ls_kvec);
                j["check"] = {{"holds", chk.holds},
                              {"pairs_checked", chk.pairs_checked},
                              {"equality_cases", chk.equality_cases},
                              {"strict_cases", chk.strict_cases}};
                out << j.dump(2) << '\n';
                return chk.holds ? kExitOk : kExitFailed;
            }
            out << j.dump(2) << '\n';
            return kExitOk;
        }
        if (exportc->parsed()) {
            const auto spec = ex_flags.to_spec();
            cli::emit(ex_out, out, circuit_to_json(build_circuit(spec)).dump(2) + "\n");
            return kExitOk;
        }
    } catch (const DomainError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    } catch (const CapacityError &e) {
        err << "error: " << e.what() << '\n';
        return kExitUsage;
    }
    return kExitUsage;
}

inline int cli_main(int argc, char **argv) {
    std::vector<std::string> args(argv + 1, argv + argc);
    return cli_main(std::move(args), std::cout, std::cerr);
}

} // namespace qudicke
