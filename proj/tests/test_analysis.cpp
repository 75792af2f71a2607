// Copyright 2026 The swapdec Authors

// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at

//     http://www.apache.org/licenses/LICENSE-2.0

// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "swapdec/analysis.hpp"
#include "swapdec/errors.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>

using namespace swapdec;

namespace {

std::vector<OutcomePair> repeat(std::initializer_list<OutcomePair> pattern, int times) {
    std::vector<OutcomePair> out;
    for (int i = 0; i < times; ++i) {
        out.insert(out.end(), pattern.begin(), pattern.end());
    }
    return out;
}

DecayResult analytic_curve(double p, std::uint64_t n, std::uint64_t m) {
    DecayResult r;
    r.n = n;
    r.m = m;
    r.p_int = p;
    for (std::uint64_t c = 1; c <= m; ++c) {
        const double v = analytic_prob_pure(p, c, n);
        r.cycles.push_back({c, v, 0.5 * v, v, 1.0});
    }
    return r;
}

} // namespace

TEST_CASE("correlator examples") {
    CHECK(correlator(repeat({{1, 1}}, 10)) == 1.0);
    CHECK(correlator(repeat({{0, 1}}, 10)) == -1.0);
    CHECK(correlator(repeat({{1, 1}, {1, 0}, {0, 0}, {0, 1}}, 25)) == 0.0);
    CHECK(correlator_stderr(repeat({{1, 1}}, 10)) == 0.0);
    CHECK_THROWS_AS(correlator(std::vector<OutcomePair>{}), ValidationError);
    CHECK_THROWS_AS(correlator(std::vector<OutcomePair>{{2, 0}}), ValidationError);
}

TEST_CASE("correlator symmetry") {
    const std::vector<OutcomePair> pairs{{1, 0}, {1, 1}, {0, 0}, {1, 0}, {0, 1}, {1, 1}, {0, 0}};
    std::vector<OutcomePair> swapped;
    for (const auto &[a, b] : pairs) {
        swapped.emplace_back(b, a);
    }
    CHECK(correlator(pairs) == correlator(swapped));
}

TEST_CASE("correlator standard error") {
    // Products +1,+1,-1,-1: sample sd = sqrt(4/3), stderr = sqrt(4/3)/2.
    const std::vector<OutcomePair> pairs{{1, 1}, {0, 0}, {1, 0}, {0, 1}};
    CHECK(correlator_stderr(pairs) == doctest::Approx(std::sqrt(4.0 / 3.0) / 2.0).epsilon(1e-14));
}

TEST_CASE("lg_evaluate examples") {
    LGStats s = lg_evaluate(1.0, 1.0, 1.0);
    CHECK(s.k_value == 1.0);
    CHECK_FALSE(s.violation);

    s = lg_evaluate(0.5, 0.5, -0.5);
    CHECK(s.k_value == 1.5);
    CHECK(s.violation);

    s = lg_evaluate(0.0, 0.0, 1.0);
    CHECK(s.k_value == -1.0);
    CHECK_FALSE(s.violation);

    // With errors the threshold moves to 1 + 3 sqrt(sum se^2) = 1 + 3 * 0.3.
    s = lg_evaluate(0.8, 0.8, -0.1, std::array<double, 3>{0.1, 0.2, 0.2}, 100);
    CHECK(std::abs(s.k_stderr - 0.3) < 1e-12);
    CHECK(std::abs(s.k_value - 1.7) < 1e-12);
    CHECK_FALSE(s.violation);
    CHECK(s.trials_per_pair == 100);
}

TEST_CASE("quantum K curve") {
    CHECK(std::abs(lg_quantum_k(std::numbers::pi / 3) - 1.5) < 1e-12);
    CHECK(std::abs(lg_quantum_k(0.0) - 1.0) < 1e-15);
    CHECK(std::abs(lg_quantum_k(std::numbers::pi / 2) - 1.0) < 1e-12);
}

TEST_CASE("lg_from_triples: per-trajectory K never exceeds 1") {
    LgTriples t;
    for (int a = 0; a < 2; ++a) {
        for (int b = 0; b < 2; ++b) {
            for (int c = 0; c < 2; ++c) {
                t.triples.push_back({a, b, c});
            }
        }
    }
    const LGStats s = lg_from_triples(t);
    CHECK(s.k_value <= 1.0);
    CHECK_FALSE(s.violation);
}

TEST_CASE("fit on the noiseless analytic curve") {
    for (const double p : {0.1, 0.03, 0.5}) {
        for (const std::uint64_t n : {2ULL, 3ULL, 7ULL}) {
            const DecayFit fit = fit_decay(analytic_curve(p, n, 10));
            CHECK(std::abs(fit.rate_per_interval - (1.0 - p)) < 1e-10);
            CHECK(std::abs(fit.r_squared - 1.0) < 1e-10);
            CHECK(fit.intervals_used == 10);
        }
    }
}

TEST_CASE("fit on a flat curve") {
    const DecayFit fit = fit_decay(analytic_curve(0.0, 3, 10));
    CHECK(fit.slope == 0.0);
    CHECK(fit.rate_per_interval == 1.0);
    CHECK(fit.r_squared == 1.0);
}

TEST_CASE("fit excludes zero-count cycles") {
    DecayResult r = analytic_curve(0.2, 3, 6);
    r.cycles[4].fraction_pure = 0.0;
    r.cycles[5].fraction_pure = 0.0;
    const DecayFit fit = fit_decay(r);
    CHECK(fit.intervals_used == 4);
    CHECK(fit.excluded_cycles == std::vector<std::uint64_t>{5, 6});
    CHECK(std::abs(fit.rate_per_interval - 0.8) < 1e-10);
}

TEST_CASE("fit with too little data") {
    DecayResult r = analytic_curve(0.2, 3, 2);
    CHECK_THROWS_AS(fit_decay(r), InsufficientDataError);
    r = analytic_curve(0.2, 3, 5);
    for (std::size_t i = 2; i < 5; ++i) {
        r.cycles[i].fraction_pure = 0.0;
    }
    CHECK_THROWS_AS(fit_decay(r), InsufficientDataError);
    // n = 1 gives no reference intervals: every x is 0.
    CHECK_THROWS_AS(fit_decay(analytic_curve(0.2, 1, 5)), InsufficientDataError);
}

TEST_CASE("Monte Carlo fit and bootstrap") {
    RunConfig config;
    config.n = 3;
    config.m = 10;
    config.p_int = 0.1;
    config.trials = 10000;
    config.seed = 42;
    config.environment = EnvironmentModel::Compact;
    const DecayResult r = run_decoherence_experiment(config);
    const DecayFit fit = fit_decay(r);
    CHECK(std::abs(fit.rate_per_interval - 0.9) <= 0.01);

    const BootstrapEstimate a = bootstrap_decay_rate(r, 200, 5);
    const BootstrapEstimate b = bootstrap_decay_rate(r, 200, 5);
    CHECK(a.mean == b.mean);
    CHECK(a.resamples_used == 200);
    CHECK(a.standard_error > 0.0);
    CHECK(a.standard_error < 0.01);
    CHECK(std::abs(a.mean - fit.rate_per_interval) < 3.0 * a.standard_error + 1e-3);

    DecayResult empty;
    CHECK_THROWS_AS(bootstrap_decay_rate(empty, 10, 1), InsufficientDataError);
}
