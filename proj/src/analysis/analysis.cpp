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
#include "swapdec/rng.hpp"

#include <algorithm>
#include <cmath>

namespace swapdec {

namespace {

int spin(int outcome) {
    if (outcome != 0 && outcome != 1) {
        throw ValidationError("outcomes must be 0 or 1");
    }
    return outcome == 1 ? 1 : -1;
}

double mean_and_stderr(std::span<const double> values, double &std_error_out) {
    const auto n = static_cast<double>(values.size());
    double sum = 0.0;
    for (const double v : values) {
        sum += v;
    }
    const double mean = sum / n;
    double ss = 0.0;
    for (const double v : values) {
        ss += (v - mean) * (v - mean);
    }
    std_error_out = values.size() > 1 ? std::sqrt(ss / (n - 1.0)) / std::sqrt(n) : 0.0;
    return mean;
}

std::vector<double> products(std::span<const OutcomePair> pairs) {
    if (pairs.empty()) {
        throw ValidationError("correlator needs at least one outcome pair");
    }
    std::vector<double> out;
    out.reserve(pairs.size());
    for (const auto &[a, b] : pairs) {
        out.push_back(static_cast<double>(spin(a) * spin(b)));
    }
    return out;
}

} // namespace

double correlator(std::span<const OutcomePair> pairs) {
    double unused = 0.0;
    return mean_and_stderr(products(pairs), unused);
}

double correlator_stderr(std::span<const OutcomePair> pairs) {
    double se = 0.0;
    mean_and_stderr(products(pairs), se);
    return se;
}

LGStats lg_evaluate(double c21, double c32, double c31, std::optional<std::array<double, 3>> std_errors,
                    std::uint64_t trials_per_pair) {
    LGStats s;
    s.c21 = c21;
    s.c32 = c32;
    s.c31 = c31;
    s.k_value = c21 + c32 - c31;
    s.std_errors = std_errors;
    s.trials_per_pair = trials_per_pair;
    if (std_errors) {
        const auto &e = *std_errors;
        s.k_stderr = std::sqrt(e[0] * e[0] + e[1] * e[1] + e[2] * e[2]);
        s.violation = s.k_value > 1.0 + 3.0 * s.k_stderr;
    } else {
        s.violation = s.k_value > 1.0;
    }
    return s;
}

LGStats lg_from_trajectories(const LgTrajectories &trajectories) {
    std::array<double, 3> c{};
    std::array<double, 3> e{};
    for (std::size_t i = 0; i < 3; ++i) {
        c[i] = correlator(trajectories.pairs[i]);
        e[i] = correlator_stderr(trajectories.pairs[i]);
    }
    return lg_evaluate(c[0], c[1], c[2], e, trajectories.pairs[0].size());
}

LGStats lg_from_triples(const LgTriples &triples) {
    if (triples.triples.empty()) {
        throw ValidationError("no trajectories");
    }
    std::vector<OutcomePair> p21, p32, p31;
    std::vector<double> k_samples;
    for (const auto &q : triples.triples) {
        p21.emplace_back(q[1], q[0]);
        p32.emplace_back(q[2], q[1]);
        p31.emplace_back(q[2], q[0]);
        const int s1 = spin(q[0]);
        const int s2 = spin(q[1]);
        const int s3 = spin(q[2]);
        k_samples.push_back(static_cast<double>(s2 * s1 + s3 * s2 - s3 * s1));
    }
    LGStats s = lg_evaluate(correlator(p21), correlator(p32), correlator(p31),
                            std::array<double, 3>{correlator_stderr(p21), correlator_stderr(p32),
                                                  correlator_stderr(p31)},
                            triples.triples.size());
    mean_and_stderr(k_samples, s.k_stderr);
    s.violation = s.k_value > 1.0 + 3.0 * s.k_stderr;
    return s;
}

double lg_quantum_k(double theta) { return 2.0 * std::cos(theta) - std::cos(2.0 * theta); }

DecayFit fit_log_linear(std::span<const double> intervals, std::span<const double> fractions,
                        std::span<const std::uint64_t> cycles) {
    if (intervals.size() != fractions.size()) {
        throw ValidationError("fit inputs differ in length");
    }
    DecayFit fit;
    std::vector<double> xs;
    std::vector<double> ys;
    for (std::size_t i = 0; i < fractions.size(); ++i) {
        if (fractions[i] > 0.0) {
            xs.push_back(intervals[i]);
            ys.push_back(std::log(fractions[i]));
        } else {
            fit.excluded_cycles.push_back(i < cycles.size() ? cycles[i] : i + 1);
        }
    }
    if (xs.size() < 3) {
        throw InsufficientDataError("decay fit needs at least 3 cycles with nonzero fraction_pure, got " +
                                    std::to_string(xs.size()));
    }
    const auto n = static_cast<double>(xs.size());
    double mx = 0.0;
    double my = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        mx += xs[i];
        my += ys[i];
    }
    mx /= n;
    my /= n;
    double sxx = 0.0;
    double sxy = 0.0;
    double syy = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        sxx += (xs[i] - mx) * (xs[i] - mx);
        sxy += (xs[i] - mx) * (ys[i] - my);
        syy += (ys[i] - my) * (ys[i] - my);
    }
    if (sxx == 0.0) {
        throw InsufficientDataError("decay fit needs distinct interval counts (n must be >= 2)");
    }
    fit.slope = sxy / sxx;
    fit.intercept = my - fit.slope * mx;
    fit.rate_per_interval = std::exp(fit.slope);
    fit.intervals_used = xs.size();
    double ss_res = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i) {
        const double r = ys[i] - (fit.intercept + fit.slope * xs[i]);
        ss_res += r * r;
    }
    // A flat, noiseless curve is a perfect fit.
    fit.r_squared = syy > 0.0 ? std::clamp(1.0 - ss_res / syy, 0.0, 1.0) : 1.0;
    return fit;
}

DecayFit fit_decay(const DecayResult &decay) {
    std::vector<double> xs;
    std::vector<double> fractions;
    std::vector<std::uint64_t> cycles;
    for (const auto &c : decay.cycles) {
        xs.push_back(static_cast<double>(c.cycle * (decay.n - 1)));
        fractions.push_back(c.fraction_pure);
        cycles.push_back(c.cycle);
    }
    return fit_log_linear(xs, fractions, cycles);
}

BootstrapEstimate bootstrap_decay_rate(const DecayResult &decay, std::size_t resamples,
                                       std::uint64_t seed) {
    const auto &first = decay.first_coupling_cycle;
    if (first.empty()) {
        throw InsufficientDataError("bootstrap needs per-trial data");
    }
    RngStream rng(seed, 0xB007);
    std::vector<double> xs;
    for (std::uint64_t c = 1; c <= decay.m; ++c) {
        xs.push_back(static_cast<double>(c * (decay.n - 1)));
    }
    std::vector<double> rates;
    std::vector<std::uint64_t> pure_counts(decay.m);
    std::vector<double> fractions(decay.m);
    for (std::size_t r = 0; r < resamples; ++r) {
        std::fill(pure_counts.begin(), pure_counts.end(), 0);
        for (std::size_t i = 0; i < first.size(); ++i) {
            const std::uint32_t fc = first[rng.below(first.size())];
            // Pure through cycle fc - 1 (or all cycles when fc == 0).
            const std::uint64_t last_pure = fc == 0 ? decay.m : fc - 1;
            for (std::uint64_t c = 0; c < last_pure; ++c) {
                ++pure_counts[c];
            }
        }
        for (std::uint64_t c = 0; c < decay.m; ++c) {
            fractions[c] = static_cast<double>(pure_counts[c]) / static_cast<double>(first.size());
        }
        try {
            rates.push_back(fit_log_linear(xs, fractions).rate_per_interval);
        } catch (const InsufficientDataError &) {
        }
    }
    if (rates.empty()) {
        throw InsufficientDataError("no bootstrap resample could be fit");
    }
    BootstrapEstimate est;
    est.mean = mean_and_stderr(rates, est.standard_error);
    // Standard error of the estimate is the resample standard deviation.
    est.standard_error *= std::sqrt(static_cast<double>(rates.size()));
    est.resamples_used = rates.size();
    return est;
}

} // namespace swapdec
