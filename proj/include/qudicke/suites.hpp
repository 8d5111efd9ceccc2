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
 * End-to-end verification suites, one per acceptance criterion. Each suite
 * returns a CriterionResult with a one-line summary.
 */
#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <functional>
#include <random>
#include <string>
#include <vector>

#include "combinatorics.hpp"
#include "dicke.hpp"
#include "level_sets.hpp"
#include "mps.hpp"
#include "probability.hpp"
#include "run.hpp"

namespace qudicke {

struct CriterionResult {
    int id = 0;
    std::string title;
    bool passed = false;
    std::size_t cases = 0;
    std::string detail;
    double seconds = 0.0;
};

struct SuiteOptions {
    std::size_t max_amplitudes = 1'000'000;
    std::uint64_t seed = 20260516;
    std::uint64_t shots = 10'000;
};

namespace suites {

namespace detail {

inline std::string fmt(const char *f, double x) {
    char buf[64];
    std::snprintf(buf, sizeof buf, f, x);
    return buf;
}

inline std::string sci(double x) { return fmt("%.3g", x); }

inline CriterionResult timed(int id, std::string title,
                             const std::function<void(CriterionResult &)> &body) {
    CriterionResult r;
    r.id = id;
    r.title = std::move(title);
    const auto t0 = std::chrono::steady_clock::now();
    try {
        r.passed = true;
        body(r);
    } catch (const std::exception &e) {
        r.passed = false;
        r.detail += std::string(r.detail.empty() ? "" : "; ") + "exception: " + e.what();
    }
    r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    return r;
}

inline std::string spec_label(const ProblemSpec &s) {
    std::string out = std::string(to_string(s.family)) + " n=" + std::to_string(s.n);
    if (s.family == Family::SpinS) {
        out += " 2s=" + std::to_string(s.twice_s) + " k=" + std::to_string(s.k);
    } else {
        out += " kvec=";
        for (std::size_t i = 0; i < s.kvec.size(); ++i) {
            out += (i ? "," : "") + std::to_string(s.kvec[i]);
        }
    }
    return out + " " + std::string(to_string(s.method));
}

inline void fail(CriterionResult &r, const std::string &why) {
    if (r.passed) {
        r.detail = "first failure: " + why + (r.detail.empty() ? "" : "; " + r.detail);
    }
    r.passed = false;
}

} // namespace detail

/// Spin-s specs with 2s in 1..3 and n <= n_max, every k.
inline std::vector<ProblemSpec> spin_s_grid(std::size_t n_max, Method method) {
    std::vector<ProblemSpec> out;
    for (std::size_t ts = 1; ts <= 3; ++ts) {
        for (std::size_t n = 1; n <= n_max; ++n) {
            for (std::size_t k = 0; k <= ts * n; ++k) {
                out.push_back({Family::SpinS, n, ts, k, {}, method, std::nullopt});
            }
        }
    }
    return out;
}

/// SU(d) specs with 2 <= d <= d_max, n <= n_max, every composition.
inline std::vector<ProblemSpec> sud_grid(std::size_t d_max, std::size_t n_max, Method method) {
    std::vector<ProblemSpec> out;
    for (std::size_t d = 2; d <= d_max; ++d) {
        for (std::size_t n = 1; n <= n_max; ++n) {
            for (auto &kv : compositions(n, d)) {
                out.push_back({Family::SUD, n, 1, 0, kv, method, std::nullopt});
            }
        }
    }
    return out;
}

inline CriterionResult sequential_exactness(int id, std::string title,
                                            const std::vector<ProblemSpec> &specs,
                                            const SuiteOptions &opts) {
    return detail::timed(id, std::move(title), [&](CriterionResult &r) {
        double worst_f = 1.0;
        double worst_p = 1.0;
        RunOptions ro;
        ro.max_amplitudes = opts.max_amplitudes;
        for (const auto &spec : specs) {
            const auto c = build_circuit(spec);
            if (c.reg.total_dimension() > opts.max_amplitudes) {
                continue;
            }
            const auto rep = verify_sequential(c, oracle_state(spec), ro);
            ++r.cases;
            worst_f = std::min(worst_f, rep.conditional_fidelity);
            worst_p = std::min(worst_p, rep.acceptance_probability);
            if (rep.conditional_fidelity < 1.0 - tol::fidelity ||
                rep.acceptance_probability < 1.0 - tol::unitarity || !rep.passed) {
                detail::fail(r, detail::spec_label(spec) + ": fidelity " +
                                    detail::fmt("%.17g", rep.conditional_fidelity) +
                                    ", ancilla probability " +
                                    detail::fmt("%.17g", rep.acceptance_probability));
            }
        }
        r.detail += (r.detail.empty() ? "" : "; ") + std::string("min fidelity 1-") +
                    detail::sci(1.0 - worst_f) + ", min ancilla probability 1-" +
                    detail::sci(1.0 - worst_p);
    });
}

/// 1. Sequential spin-s exactness.
inline CriterionResult criterion1(const SuiteOptions &opts = {}) {
    return sequential_exactness(1, "sequential spin-s exactness (2s<=3, n<=5, all k)",
                                spin_s_grid(5, Method::Sequential), opts);
}

/// 2. Sequential SU(d) exactness.
inline CriterionResult criterion2(const SuiteOptions &opts = {}) {
    return sequential_exactness(2, "sequential SU(d) exactness (d<=4, n<=5, all kvec)",
                                sud_grid(4, 5, Method::Sequential), opts);
}

/// Specs covered by the probabilistic suites (criteria 3 and 9).
inline std::vector<ProblemSpec> probabilistic_grid() {
    std::vector<ProblemSpec> out;
    for (auto m : kProbabilisticMethods) {
        auto a = spin_s_grid(4, m);
        auto b = sud_grid(3, 4, m);
        out.insert(out.end(), a.begin(), a.end());
        out.insert(out.end(), b.begin(), b.end());
    }
    return out;
}

/// 3. Postselection probabilities and conditional fidelity of all six builders.
inline CriterionResult criterion3(const SuiteOptions &opts = {}) {
    return detail::timed(
        3, "postselected builders match P(k), P(kvec) (2s<=3 / d<=3, n<=4)",
        [&](CriterionResult &r) {
            RunOptions ro;
            ro.max_amplitudes = opts.max_amplitudes;
            double worst_dp = 0.0;
            double worst_f = 1.0;
            for (const auto &spec : probabilistic_grid()) {
                const auto rep = run_problem(spec, ro);
                ++r.cases;
                worst_dp = std::max(worst_dp, std::abs(rep.acceptance_probability -
                                                       *rep.expected_probability));
                worst_f = std::min(worst_f, rep.conditional_fidelity);
                if (!rep.passed) {
                    detail::fail(r, detail::spec_label(spec) + ": P=" +
                                        detail::fmt("%.12g", rep.acceptance_probability) +
                                        " vs " + detail::fmt("%.12g", *rep.expected_probability) +
                                        ", fidelity " +
                                        detail::fmt("%.12g", rep.conditional_fidelity) + " " +
                                        rep.message);
                }
            }
            double spot = 0.0;
            for (auto m : kProbabilisticMethods) {
                const auto rep = run_problem({Family::SUD, 3, 1, 0, {1, 1, 1}, m, std::nullopt}, ro);
                spot = std::max(spot, std::abs(rep.acceptance_probability - 2.0 / 9.0));
            }
            if (spot > tol::fidelity) {
                detail::fail(r, "n=3 kvec=1,1,1 spot value off by " + detail::sci(spot));
            }
            r.detail += (r.detail.empty() ? "" : "; ") + std::string("max |P-P_exact| ") +
                        detail::sci(worst_dp) + ", min fidelity 1-" +
                        detail::sci(1.0 - worst_f) + ", |P(1,1,1)-2/9| " + detail::sci(spot);
        });
}

namespace detail {

/// Acceptance probability of the Hadamard-test circuit at a parameter.
inline double circuit_acceptance(ProblemSpec spec, std::vector<double> param) {
    spec.method = Method::Hadamard;
    spec.parameter = std::move(param);
    const auto c = build_circuit(spec);
    const auto st = simulate(c);
    const auto dist = outcome_distribution(st, c.accept_rule->wires);
    index_t target = 0;
    index_t mult = 1;
    for (std::size_t q = 0; q < c.accept_rule->wires.size(); ++q) {
        target += c.accept_rule->digits[q] * mult;
        mult *= c.reg.dim(c.accept_rule->wires[q]);
    }
    const auto it = dist.find(target);
    return it == dist.end() ? 0.0 : it->second;
}

/// True if some grid point nearest to `opt` attains the grid maximum.
inline bool argmax_at_nearest(const std::vector<double> &values, double opt,
                              std::size_t &argmax) {
    const double top = *std::max_element(values.begin(), values.end());
    argmax = static_cast<std::size_t>(
        std::max_element(values.begin(), values.end()) - values.begin());
    const double pos = opt * static_cast<double>(values.size() - 1);
    const auto lo = static_cast<std::size_t>(std::floor(pos));
    const auto hi = static_cast<std::size_t>(std::ceil(pos));
    std::vector<std::size_t> nearest;
    const double dlo = pos - static_cast<double>(lo);
    const double dhi = static_cast<double>(hi) - pos;
    if (dlo <= dhi + 1e-12) {
        nearest.push_back(lo);
    }
    if (dhi <= dlo + 1e-12) {
        nearest.push_back(hi);
    }
    for (auto i : nearest) {
        if (values[i] >= top * (1.0 - 1e-12)) {
            return true;
        }
    }
    return false;
}

} // namespace detail

/// 4. Grid search over p (spin-s) and one-component xi slices (SU(d)).
inline CriterionResult criterion4(const SuiteOptions &opts = {}) {
    return detail::timed(4, "optimal p* and xi* on a 101-point grid (10 random specs)",
                         [&](CriterionResult &r) {
        std::mt19937_64 rng(opts.seed);
        auto pick = [&](std::size_t lo, std::size_t hi) {
            return lo + static_cast<std::size_t>(uniform_unit(rng) *
                                                 static_cast<double>(hi - lo + 1));
        };
        constexpr std::size_t kGrid = 101;
        std::size_t slices = 0;
        for (int t = 0; t < 5; ++t) {
            const std::size_t ts = pick(1, 3);
            const std::size_t n = pick(1, 4);
            const std::size_t k = pick(0, ts * n);
            const ProblemSpec spec{Family::SpinS, n, ts, k, {}, Method::Hadamard, std::nullopt};
            std::vector<double> vals;
            for (std::size_t g = 0; g < kGrid; ++g) {
                vals.push_back(detail::circuit_acceptance(
                    spec, {static_cast<double>(g) / static_cast<double>(kGrid - 1)}));
            }
            const double opt = static_cast<double>(k) / static_cast<double>(ts * n);
            std::size_t am = 0;
            ++slices;
            ++r.cases;
            if (!detail::argmax_at_nearest(vals, opt, am)) {
                detail::fail(r, detail::spec_label(spec) + ": argmax p=" +
                                    detail::fmt("%.2f", static_cast<double>(am) / 100.0) +
                                    ", p*=" + detail::fmt("%.4f", opt));
            }
        }
        for (int t = 0; t < 5; ++t) {
            const std::size_t d = pick(2, 3);
            const std::size_t n = pick(1, 4);
            const auto comps = compositions(n, d);
            const auto kv = comps[pick(0, comps.size() - 1)];
            const ProblemSpec spec{Family::SUD, n, 1, 0, kv, Method::Hadamard, std::nullopt};
            const auto xi_opt = probability_sud(n, kv).optimal_parameter;
            ++r.cases;
            for (std::size_t comp = 0; comp < d; ++comp) {
                std::vector<double> vals;
                for (std::size_t g = 0; g < kGrid; ++g) {
                    auto xi = xi_opt;
                    xi[comp] = static_cast<double>(g) / static_cast<double>(kGrid - 1);
                    bool zero = std::all_of(xi.begin(), xi.end(), [](double x) { return x == 0.0; });
                    vals.push_back(zero ? 0.0 : detail::circuit_acceptance(spec, xi));
                }
                std::size_t am = 0;
                ++slices;
                if (!detail::argmax_at_nearest(vals, xi_opt[comp], am)) {
                    detail::fail(r, detail::spec_label(spec) + " component " +
                                        std::to_string(comp) + ": argmax " +
                                        detail::fmt("%.2f", static_cast<double>(am) / 100.0) +
                                        ", xi*=" + detail::fmt("%.4f", xi_opt[comp]));
                }
            }
        }
        r.detail += (r.detail.empty() ? "" : "; ") + std::to_string(slices) +
                    " slices, seed " + std::to_string(opts.seed);
    });
}

/// 5. Exhaustive level-set labeling check, d <= 5, n <= 8.
inline CriterionResult criterion5(const SuiteOptions & = {}) {
    return detail::timed(5, "level-set label monotonicity (d<=5, n<=8)", [&](CriterionResult &r) {
        std::size_t pairs = 0;
        std::size_t eq = 0;
        std::size_t strict = 0;
        std::size_t bad = 0;
        for (std::size_t d = 1; d <= 5; ++d) {
            for (std::size_t n = 1; n <= 8; ++n) {
                for (const auto &kv : compositions(n, d)) {
                    const auto chk = verify_level_set_proposition(kv);
                    ++r.cases;
                    pairs += chk.pairs_checked;
                    eq += chk.equality_cases;
                    strict += chk.strict_cases;
                    if (!chk.holds) {
                        ++bad;
                        detail::fail(r, "counterexample for kvec of n=" + std::to_string(n));
                    }
                }
            }
        }
        if (eq == 0 || strict == 0) {
            detail::fail(r, "one regime was never exercised");
        }
        r.detail += (r.detail.empty() ? "" : "; ") + std::to_string(pairs) + " pairs, " +
                    std::to_string(eq) + " equality, " + std::to_string(strict) +
                    " strict, " + std::to_string(bad) + " counterexamples";
    });
}

/// 6. Charge conjugation duality and charge eigenvalue checks on oracles.
inline CriterionResult criterion6(const SuiteOptions & = {}) {
    return detail::timed(6, "duality and charge invariants on oracle states",
                         [&](CriterionResult &r) {
        double worst_f = 1.0;
        double worst_var = 0.0;
        for (const auto &spec : spin_s_grid(5, Method::Sequential)) {
            const auto s = spec.spin_s();
            const auto st = spin_s_dicke(s);
            const auto dual = spin_s_dicke({s.n, s.twice_s, s.max_charge() - s.k});
            const double f = fidelity(apply_charge_conjugation(st, s.twice_s), dual);
            const auto mom = charge_moments_spin_s(st, s.twice_s);
            ++r.cases;
            worst_f = std::min(worst_f, f);
            worst_var = std::max(worst_var, mom.variance);
            if (f < 1.0 - 1e-10 || mom.variance > 1e-10 ||
                std::abs(mom.mean - static_cast<double>(s.k)) > 1e-10) {
                detail::fail(r, detail::spec_label(spec));
            }
        }
        for (const auto &spec : sud_grid(4, 5, Method::Sequential)) {
            const auto st = sud_dicke(spec.sud());
            const std::size_t d = spec.kvec.size();
            ++r.cases;
            const auto total = charge_moments_spin_s(st, d - 1);
            worst_var = std::max(worst_var, total.variance);
            bool ok = total.variance <= 1e-10;
            for (std::size_t level = 1; level < d; ++level) {
                const auto mom = charge_moments_sud(st, d, level);
                worst_var = std::max(worst_var, mom.variance);
                ok = ok && mom.variance <= 1e-10 &&
                     std::abs(mom.mean - static_cast<double>(spec.kvec[level])) <= 1e-10;
            }
            if (!ok) {
                detail::fail(r, detail::spec_label(spec));
            }
        }
        r.detail += (r.detail.empty() ? "" : "; ") + std::string("min duality fidelity 1-") +
                    detail::sci(1.0 - worst_f) + ", max charge variance " +
                    detail::sci(worst_var);
    });
}

/// 7. gamma-row completeness and MPS contraction against closed forms.
inline CriterionResult criterion7(const SuiteOptions & = {}) {
    return detail::timed(7, "MPS rows normalized and contraction equals closed form (n<=5)",
                         [&](CriterionResult &r) {
        double worst_row = 0.0;
        double worst_amp = 0.0;
        auto amp_diff = [](const StateVector &a, const StateVector &b) {
            double m = 0.0;
            for (index_t i = 0; i < a.reg().total_dimension(); ++i) {
                m = std::max(m, std::abs(a.amplitude(i) - b.amplitude(i)));
            }
            return m;
        };
        for (const auto &spec : spin_s_grid(5, Method::Sequential)) {
            const auto s = spec.spin_s();
            ++r.cases;
            for (std::size_t i = 1; i <= s.n && s.k > 0; ++i) {
                for (std::size_t l = 0; l <= s.k; ++l) {
                    double sum2 = 0.0;
                    for (std::size_t m = 0; m <= s.twice_s; ++m) {
                        const double g = gamma_spin_s(s.n, s.twice_s, s.k, i, l, m);
                        sum2 += g * g;
                    }
                    if (sum2 != 0.0) {
                        worst_row = std::max(worst_row, std::abs(sum2 - 1.0));
                    }
                }
            }
            worst_amp = std::max(worst_amp, amp_diff(contract_mps_spin_s(s), spin_s_dicke(s)));
        }
        for (const auto &spec : sud_grid(4, 5, Method::Sequential)) {
            const auto s = spec.sud();
            const LevelSetIndex levels(s.kvec);
            ++r.cases;
            for (std::size_t i = 1; i <= s.n; ++i) {
                for (const auto &a : levels.level(i - 1)) {
                    double sum2 = 0.0;
                    for (std::size_t m = 0; m < s.d(); ++m) {
                        const double g = gamma_sud(s.n, s.kvec, i, a, m);
                        sum2 += g * g;
                    }
                    if (sum2 != 0.0) {
                        worst_row = std::max(worst_row, std::abs(sum2 - 1.0));
                    }
                }
            }
            worst_amp = std::max(worst_amp, amp_diff(contract_mps_sud(s), sud_dicke(s)));
        }
        if (worst_row > 1e-10) {
            detail::fail(r, "row norm deviates by " + detail::sci(worst_row));
        }
        if (worst_amp > 1e-10) {
            detail::fail(r, "contraction deviates by " + detail::sci(worst_amp));
        }
        r.detail += (r.detail.empty() ? "" : "; ") + std::string("max row deviation ") +
                    detail::sci(worst_row) + ", max amplitude deviation " +
                    detail::sci(worst_amp);
    });
}

/// Least-squares slope of log y against log x.
inline double loglog_slope(const std::vector<double> &x, const std::vector<double> &y) {
    const auto n = static_cast<double>(x.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (std::size_t i = 0; i < x.size(); ++i) {
        const double lx = std::log(x[i]);
        const double ly = std::log(y[i]);
        sx += lx;
        sy += ly;
        sxx += lx * lx;
        sxy += lx * ly;
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

/**
 * Accepted band for the fitted exponent of gate count against s*k*n over
 * n = 3..8, s = 1/2, k = n/2. The count is 5k(n-k+1) there, whose lower-order
 * term keeps the small-n exponent near 0.8; the bound of interest is the
 * upper one.
 */
inline constexpr double kGrowthSlopeMin = 0.5;
inline constexpr double kGrowthSlopeMax = 1.1;

/// 8. Gate-count formulas, growth against s*k*n, constant fan-out depth.
inline CriterionResult criterion8(const SuiteOptions & = {}) {
    return detail::timed(8, "resource counts, O(skn) growth, constant fan-out depth",
                         [&](CriterionResult &r) {
        for (const auto &spec : spin_s_grid(5, Method::Sequential)) {
            const auto s = spec.spin_s();
            const auto got = build_circuit(spec).ops.size();
            std::size_t want = (s.twice_s + 4) * spin_s_iop_count(s.n, s.twice_s, s.k);
            if (s.k == 0) {
                want = 0;
            } else if (s.k == s.max_charge()) {
                want = s.n + 1;
            }
            ++r.cases;
            if (got != want) {
                detail::fail(r, detail::spec_label(spec) + ": " + std::to_string(got) +
                                    " gates, formula " + std::to_string(want));
            }
        }
        for (const auto &spec : sud_grid(4, 5, Method::Sequential)) {
            const auto got = build_circuit(spec).ops.size();
            const auto want = sud_sequential_gate_count(spec.kvec);
            ++r.cases;
            if (got != want) {
                detail::fail(r, detail::spec_label(spec) + ": " + std::to_string(got) +
                                    " gates, formula " + std::to_string(want));
            }
        }
        std::vector<double> skn;
        std::vector<double> gates;
        for (std::size_t n = 3; n <= 8; ++n) {
            const DickeSpecSpinS s{n, 1, n / 2};
            const auto g = static_cast<double>(build_sequential_spin_s(s).ops.size());
            const double x = 0.5 * static_cast<double>(s.k) * static_cast<double>(n);
            if (g > (s.twice_s + 4) * static_cast<double>(s.k * n)) {
                detail::fail(r, "n=" + std::to_string(n) + " exceeds (2s+4)kn");
            }
            skn.push_back(x);
            gates.push_back(g);
        }
        const double slope = loglog_slope(skn, gates);
        if (slope < kGrowthSlopeMin || slope > kGrowthSlopeMax) {
            detail::fail(r, "fitted exponent " + detail::fmt("%.4f", slope));
        }
        std::string depths;
        auto check_depth = [&](const std::string &name, const std::function<Circuit(std::size_t)> &make) {
            std::size_t first = 0;
            for (std::size_t n = 2; n <= 6; ++n) {
                const auto dep = logical_depth(make(n));
                if (n == 2) {
                    first = dep;
                } else if (dep != first) {
                    detail::fail(r, name + " depth " + std::to_string(dep) + " at n=" +
                                        std::to_string(n) + " vs " + std::to_string(first));
                }
            }
            depths += (depths.empty() ? "" : ", ") + name + ": " + std::to_string(first);
        };
        for (std::size_t ts = 1; ts <= 3; ++ts) {
            check_depth("2s=" + std::to_string(ts), [ts](std::size_t n) {
                return build_fanout_const_spin_s({n, ts, ts * n / 2});
            });
        }
        for (std::size_t d = 2; d <= 3; ++d) {
            check_depth("d=" + std::to_string(d), [d](std::size_t n) {
                Occupation kv(d, n / d);
                kv[0] += n % d;
                return build_fanout_const_sud({n, kv});
            });
        }
        r.detail += (r.detail.empty() ? "" : "; ") + std::string("fitted exponent ") +
                    detail::fmt("%.4f", slope) + " in [" + detail::fmt("%.2f", kGrowthSlopeMin) +
                    ", " + detail::fmt("%.2f", kGrowthSlopeMax) + "], fan-out depth " + depths;
    });
}

/// 9. Seeded sampling agrees with exact P within 5 sigma and is reproducible.
inline CriterionResult criterion9(const SuiteOptions &opts = {}) {
    return detail::timed(9, "sampled acceptance within 5 sigma, reproducible under seed",
                         [&](CriterionResult &r) {
        RunOptions ro;
        ro.max_amplitudes = opts.max_amplitudes;
        ro.shots = opts.shots;
        double worst_z = 0.0;
        std::uint64_t case_seed = opts.seed;
        for (const auto &spec : probabilistic_grid()) {
            ro.seed = case_seed++;
            const auto a = run_problem(spec, ro);
            const auto b = run_problem(spec, ro);
            ++r.cases;
            const double p = a.acceptance_probability;
            const double sigma =
                std::sqrt(std::max(p * (1.0 - p), 0.0) / static_cast<double>(opts.shots));
            const double dev = std::abs(*a.sampled_frequency - p);
            if (sigma > 0.0) {
                worst_z = std::max(worst_z, dev / sigma);
            }
            if (dev > 5.0 * sigma + 1e-12) {
                detail::fail(r, detail::spec_label(spec) + ": frequency " +
                                    detail::fmt("%.6f", *a.sampled_frequency) + " vs P " +
                                    detail::fmt("%.6f", p));
            }
            if (*a.sampled_frequency != *b.sampled_frequency) {
                detail::fail(r, detail::spec_label(spec) + ": rerun differs");
            }
        }
        r.detail += (r.detail.empty() ? "" : "; ") + std::to_string(opts.shots) +
                    " shots per circuit, max deviation " + detail::fmt("%.2f", worst_z) +
                    " sigma";
    });
}

inline std::vector<CriterionResult> run_all(const SuiteOptions &opts = {}) {
    return {criterion1(opts), criterion2(opts), criterion3(opts), criterion4(opts),
            criterion5(opts), criterion6(opts), criterion7(opts), criterion8(opts),
            criterion9(opts)};
}

/// "PASS 3 title: detail (1.2 s)"
inline std::string summary_line(const CriterionResult &r) {
    return std::string(r.passed ? "PASS" : "FAIL") + " criterion " + std::to_string(r.id) +
           " " + r.title + ": " + std::to_string(r.cases) + " cases; " + r.detail + " (" +
           detail::fmt("%.2f", r.seconds) + " s)";
}

} // namespace suites

} // namespace qudicke
