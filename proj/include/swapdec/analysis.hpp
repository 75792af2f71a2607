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

#pragma once

#include "swapdec/dynamics.hpp"

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <vector>

namespace swapdec {

/// Mean of the products after mapping outcome 0 -> -1, 1 -> +1.
double correlator(std::span<const OutcomePair> pairs);

/// Sample standard deviation of the products divided by sqrt(N).
double correlator_stderr(std::span<const OutcomePair> pairs);

struct LGStats {
    double c21 = 0.0;
    double c32 = 0.0;
    double c31 = 0.0;
    double k_value = 0.0;
    std::optional<std::array<double, 3>> std_errors;
    /// Combined standard error of k_value; 0 when no errors were supplied.
    double k_stderr = 0.0;
    std::uint64_t trials_per_pair = 0;
    bool violation = false;
};

/// K = C21 + C32 - C31. With errors the violation flag requires
/// K > 1 + 3 * sqrt(sum of squared errors) (independent batches); without,
/// K > 1.
LGStats lg_evaluate(double c21, double c32, double c31,
                    std::optional<std::array<double, 3>> std_errors = std::nullopt,
                    std::uint64_t trials_per_pair = 0);

/// Correlators and errors from the pairwise protocol.
LGStats lg_from_trajectories(const LgTrajectories &trajectories);

/// Correlators from trajectories measured at all three times. The error of K
/// comes from the per-trajectory spread of q2q1 + q3q2 - q3q1, since the
/// three correlators share samples.
LGStats lg_from_triples(const LgTriples &triples);

/// 2 cos(theta) - cos(2 theta): K for a coherently rotating two-level system.
double lg_quantum_k(double theta);

struct DecayFit {
    double rate_per_interval = 1.0;
    double slope = 0.0;
    double intercept = 0.0;
    double r_squared = 1.0;
    std::size_t intervals_used = 0;
    /// Cycles skipped because their fraction_pure was zero.
    std::vector<std::uint64_t> excluded_cycles;
};

/// Least-squares fit of ln(fraction) against intervals; rate = exp(slope).
/// Points with fraction 0 are excluded. InsufficientDataError below three
/// usable points or when all interval counts coincide.
DecayFit fit_log_linear(std::span<const double> intervals, std::span<const double> fractions,
                        std::span<const std::uint64_t> cycles = {});

/// Fit over the cycles of a decay run, x = cycle * (n - 1).
DecayFit fit_decay(const DecayResult &decay);

struct BootstrapEstimate {
    double mean = 0.0;
    double standard_error = 0.0;
    std::size_t resamples_used = 0;
};

/// Resample trials with replacement and refit; resamples that cannot be fit
/// are skipped.
BootstrapEstimate bootstrap_decay_rate(const DecayResult &decay, std::size_t resamples,
                                       std::uint64_t seed);

} // namespace swapdec
