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
// Product states and the probabilistic builders: QPE bank, Hadamard test and
// the constant-depth fan-out variant, for spin-s and SU(d).

#include <catch_amalgamated.hpp>

#include <cmath>
#include <numeric>
#include <random>
#include <set>

#include "qudicke/dicke.hpp"
#include "qudicke/probability.hpp"
#include "qudicke/qpe.hpp"
#include "qudicke/run.hpp"

using namespace qudicke;
using Catch::Matchers::WithinAbs;
using Catch::Matchers::WithinRel;

namespace {

cplx overlap(const StateVector &a, const StateVector &b) {
    cplx s = 0;
    for (index_t i = 0; i < a.reg().total_dimension(); ++i) {
        s += std::conj(a.amplitude(i)) * b.amplitude(i);
    }
    return s;
}

StateVector run_gates(const QuditRegister &reg, const std::vector<GateOp> &ops) {
    StateVector s = new_basis_state(reg, Digits(reg.size(), 0));
    for (const auto &op : ops) {
        apply_gate_inplace(s, op);
    }
    return s;
}

double binom_pmf(std::size_t total, std::size_t k, double p) {
    return std::exp(std::lgamma(total + 1.0) - std::lgamma(k + 1.0) -
                    std::lgamma(total - k + 1.0)) *
           std::pow(p, double(k)) * std::pow(1 - p, double(total - k));
}

std::vector<ProblemSpec> small_specs(Method m) {
    std::vector<ProblemSpec> out;
    for (std::size_t ts = 1; ts <= 2; ++ts) {
        for (std::size_t n = 1; n <= 3; ++n) {
            for (std::size_t k = 0; k <= ts * n; ++k) {
                out.push_back({Family::SpinS, n, ts, k, {}, m, std::nullopt});
            }
        }
    }
    for (std::size_t d = 2; d <= 3; ++d) {
        for (std::size_t n = 1; n <= 3; ++n) {
            for (const auto &kv : compositions(n, d)) {
                out.push_back({Family::SUD, n, 1, 0, kv, m, std::nullopt});
            }
        }
    }
    return out;
}

} // namespace

TEST_CASE("product state examples") {
    auto ps = product_state_spin_s(3, 2, 0.0);
    CHECK_THAT(std::norm(ps.state.amplitude(0)), WithinAbs(1.0, 1e-15));

    ps = product_state_spin_s(4, 1, 0.5);
    for (index_t i = 0; i < 16; ++i) {
        CHECK_THAT(ps.state.amplitude(i).real(), WithinAbs(0.25, 1e-12));
    }

    auto pd = product_state_sud(3, {1.0, 1.0, 1.0});
    for (index_t i = 0; i < 27; ++i) {
        CHECK_THAT(pd.state.amplitude(i).real(), WithinAbs(std::pow(3.0, -1.5), 1e-12));
    }
    pd = product_state_sud(3, {1.0, 0.0, 0.0});
    CHECK_THAT(pd.state.amplitude(0).real(), WithinAbs(1.0, 1e-15));

    CHECK_THROWS_AS(product_state_sud(3, {0.0, 0.0, 0.0}), DomainError);
    CHECK_THROWS_AS(product_state_sud(3, {1.0, -0.5}), DomainError);
    CHECK_THROWS_AS(product_state_spin_s(3, 1, 1.5), DomainError);
}

TEST_CASE("product state gates reproduce the product state") {
    for (double p : {0.0, 0.17, 0.5, 0.83, 1.0}) {
        for (std::size_t ts = 1; ts <= 3; ++ts) {
            const auto ps = product_state_spin_s(3, ts, p);
            const auto got = run_gates(ps.state.reg(), ps.gates);
            CHECK(std::abs(overlap(got, ps.state)) > 1 - 1e-12);
        }
    }
    const auto pd = product_state_sud(3, {0.3, 1.2, 0.0, 0.7});
    CHECK(std::abs(overlap(run_gates(pd.state.reg(), pd.gates), pd.state)) > 1 - 1e-12);
}

TEST_CASE("product state decomposes into Dicke states") {
    const std::size_t n = 3, ts = 2;
    const double p = 0.3;
    const auto ps = product_state_spin_s(n, ts, p);
    double total = 0;
    for (std::size_t k = 0; k <= ts * n; ++k) {
        const auto c = overlap(spin_s_dicke({n, ts, k}), ps.state);
        CHECK_THAT(c.real(), WithinAbs(std::sqrt(binom_pmf(ts * n, k, p)), 1e-12));
        total += std::norm(c);
    }
    CHECK_THAT(total, WithinAbs(1.0, 1e-12));

    const std::vector<double> xi{0.5, 0.2, 0.9};
    const auto pd = product_state_sud(4, xi);
    for (const auto &kv : compositions(4, 3)) {
        const auto c = overlap(sud_dicke({4, kv}), pd.state);
        CHECK_THAT(std::norm(c), WithinAbs(acceptance_probability_sud(4, kv, xi), 1e-12));
    }
}

TEST_CASE("QPE bank width") {
    CHECK(build_qpe_log_spin_s({3, 2, 1}).reg.size() == 3 + 3);
    CHECK(build_qpe_log_spin_s({1, 1, 1}).reg.size() == 1 + 1);
    CHECK(build_qpe_log_spin_s({4, 1, 2}).reg.size() == 4 + 3);
    CHECK(build_qpe_log_sud({3, {1, 1, 1}}).reg.size() == 3 + 2 * 2);
}

TEST_CASE("every probabilistic builder matches the closed form") {
    for (Method m : kProbabilisticMethods) {
        for (const auto &spec : small_specs(m)) {
            CAPTURE(to_string(m), spec.n, spec.twice_s, spec.k, spec.kvec);
            const auto r = run_problem(spec);
            CHECK(r.passed);
            CHECK(r.conditional_fidelity >= 1 - 1e-9);
            CHECK_THAT(r.acceptance_probability, WithinAbs(expected_acceptance(spec), 1e-10));
            CHECK(r.clean_probability >= 1 - 1e-10);

            const auto c = build_circuit(spec);
            const auto dist = outcome_distribution(simulate_as<SparseStateVector>(c),
                                                   c.accept_rule->wires);
            double sum = 0;
            for (const auto &[k, p] : dist) {
                sum += p;
            }
            CHECK_THAT(sum, WithinAbs(1.0, 1e-12));
        }
    }
    const ProblemSpec s111{Family::SUD, 3, 1, 0, {1, 1, 1}, Method::QpeLog, std::nullopt};
    CHECK_THAT(run_problem(s111).acceptance_probability, WithinAbs(2.0 / 9.0, 1e-12));
}

TEST_CASE("QPE bank and Hadamard test agree off the optimum") {
    std::mt19937_64 rng(5);
    for (int rep = 0; rep < 20; ++rep) {
        const std::size_t n = 1 + rng() % 3, ts = 1 + rng() % 2;
        const std::size_t k = rng() % (ts * n + 1);
        const double p = std::uniform_real_distribution<double>(0.05, 0.95)(rng);
        ProblemSpec a{Family::SpinS, n, ts, k, {}, Method::QpeLog, std::vector<double>{p}};
        auto b = a;
        b.method = Method::Hadamard;
        auto f = a;
        f.method = Method::Fanout;
        const double pa = run_problem(a).acceptance_probability;
        CHECK_THAT(run_problem(b).acceptance_probability, WithinAbs(pa, 1e-12));
        CHECK_THAT(run_problem(f).acceptance_probability, WithinAbs(pa, 1e-12));
        CHECK_THAT(pa, WithinAbs(acceptance_probability_spin_s(n, ts, k, p), 1e-12));
    }
}

TEST_CASE("Hadamard-test ancilla reads out the charge distribution") {
    const std::size_t n = 3, ts = 2;
    const double p = 0.4;
    const auto c = build_hadamard_test_spin_s({n, ts, 2}, p);
    const std::vector<std::size_t> anc{n};
    const auto dist = outcome_distribution(simulate(c), anc);
    for (std::size_t k = 0; k <= ts * n; ++k) {
        const double got = dist.count(k) ? dist.at(k) : 0.0;
        CHECK_THAT(got, WithinAbs(binom_pmf(ts * n, k, p), 1e-12));
    }
}

TEST_CASE("fan-out copies return to zero") {
    for (const auto &spec : small_specs(Method::Fanout)) {
        const auto c = build_circuit(spec);
        const auto st = simulate_as<SparseStateVector>(c);
        std::vector<std::size_t> copies;
        for (std::size_t w = c.system_wires; w < c.reg.size(); ++w) {
            if (c.reg.label(w).rfind("copy", 0) == 0) {
                copies.push_back(w);
            }
        }
        if (copies.empty()) {
            continue;
        }
        const auto dist = outcome_distribution(st, copies);
        CHECK_THAT(dist.count(0) ? dist.at(0) : 0.0, WithinAbs(1.0, 1e-12));
    }
}

TEST_CASE("selection identity") {
    for (std::size_t l = 1; l <= 6; ++l) {
        const auto lim = (std::int64_t{1} << l) - 1;
        for (std::int64_t delta = -lim; delta <= lim; ++delta) {
            cplx prod = 1;
            for (std::size_t x = 1; x <= l; ++x) {
                prod *= 1.0 + std::exp(cplx(0, 2 * kPi * double(delta) / double(1 << x)));
            }
            CHECK_THAT(std::abs(prod - cplx(delta == 0 ? double(1 << l) : 0.0)),
                       WithinAbs(0.0, 1e-9));
        }
    }
}

TEST_CASE("smallest fan-out instance") {
    const auto c = build_fanout_const_spin_s({1, 1, 1});
    CHECK(c.reg.size() == 2);
    CHECK(c.accept_rule->wires.size() == 1);
    ProblemSpec spec{Family::SpinS, 1, 1, 1, {}, Method::Fanout, std::nullopt};
    CHECK_THAT(run_problem(spec).acceptance_probability, WithinAbs(1.0, 1e-12));
    spec.parameter = std::vector<double>{0.5};
    CHECK_THAT(run_problem(spec).acceptance_probability, WithinAbs(0.5, 1e-12));
}

TEST_CASE("two-level SU(d) agrees with spin one-half") {
    for (std::size_t n = 1; n <= 5; ++n) {
        for (std::size_t k = 0; k <= n; ++k) {
            const auto a = spin_s_dicke({n, 1, k});
            const auto b = sud_dicke({n, {n - k, k}});
            CHECK_THAT(std::abs(overlap(a, b)), WithinAbs(1.0, 1e-12));
            for (double p : {0.2, 0.5}) {
                CHECK_THAT(acceptance_probability_sud(n, {n - k, k},
                                                      {std::sqrt(1 - p), std::sqrt(p)}),
                           WithinRel(acceptance_probability_spin_s(n, 1, k, p), 1e-10));
            }
            ProblemSpec ss{Family::SpinS, n, 1, k, {}, Method::Fanout, std::nullopt};
            ProblemSpec sd{Family::SUD, n, 1, 0, {n - k, k}, Method::Fanout, std::nullopt};
            CHECK_THAT(run_problem(sd).acceptance_probability,
                       WithinAbs(run_problem(ss).acceptance_probability, 1e-12));
        }
    }
}

TEST_CASE("fan-out register census") {
    for (std::size_t d = 2; d <= 3; ++d) {
        for (std::size_t n = 1; n <= 4; ++n) {
            Occupation kv(d, 0);
            kv[0] = n;
            const auto c = build_fanout_const_sud({n, kv});
            const std::size_t l = ceil_log2(n + 1);
            const std::size_t flags = (d - 1) * l;
            const std::size_t copies = n * ((d - 1) * l - 1);
            std::size_t got_flags = 0, got_copies = 0;
            for (const auto &a : count_resources(c).ancilla_census) {
                if (a.dimension == 2) {
                    got_flags += a.count;
                } else if (a.dimension == d) {
                    got_copies += a.count;
                }
            }
            if (d == 2) {
                // flags and copies share dimension 2
                CHECK(got_flags == flags + copies);
            } else {
                CHECK(got_flags == flags);
                CHECK(got_copies == copies);
            }
        }
    }
    const auto c = build_fanout_const_spin_s({3, 2, 3});
    const std::size_t l = 3;
    CHECK(c.reg.size() == 3 + 3 * (l - 1) + l);
}

TEST_CASE("sampled acceptance stays within five sigma") {
    for (Method m : kProbabilisticMethods) {
        const ProblemSpec spec{Family::SpinS, 3, 1, 1, {}, m, std::nullopt};
        RunOptions ro;
        ro.seed = 1234;
        ro.shots = 10000;
        const auto r = run_problem(spec, ro);
        REQUIRE(r.sampled_frequency);
        const double p = r.acceptance_probability;
        const double sigma = std::sqrt(p * (1 - p) / 10000.0);
        CHECK(std::abs(*r.sampled_frequency - p) <= 5 * sigma);
        CHECK(run_problem(spec, ro).sampled_frequency == r.sampled_frequency);
    }
}

TEST_CASE("fan-out depth does not grow with n") {
    for (std::size_t ts = 1; ts <= 3; ++ts) {
        std::set<std::size_t> depths;
        for (std::size_t n = 2; n <= 6; ++n) {
            depths.insert(logical_depth(build_fanout_const_spin_s({n, ts, n})));
        }
        CAPTURE(ts);
        CHECK(depths.size() == 1);
    }
    for (std::size_t d = 2; d <= 3; ++d) {
        std::set<std::size_t> depths;
        for (std::size_t n = 2; n <= 5; ++n) {
            Occupation kv(d, 0);
            kv[0] = n - 1;
            kv[1] = 1;
            depths.insert(logical_depth(build_fanout_const_sud({n, kv})));
        }
        CAPTURE(d);
        CHECK(depths.size() == 1);
    }
}
