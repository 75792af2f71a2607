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

#include "swapdec/observable.hpp"
#include "swapdec/observer.hpp"
#include "swapdec/rng.hpp"
#include "swapdec/state_vector.hpp"

#include <array>
#include <cstdint>
#include <numbers>
#include <string>
#include <utility>
#include <vector>

namespace swapdec {

/// Split of the non-observer qubits into reference and pointer components
/// and their environments. E_R holds everything outside R; E_P everything
/// outside P (so E_P contains R).
struct Decomposition {
    std::vector<std::string> reference_qubits;
    std::vector<std::string> pointer_qubits;
    std::vector<std::string> environment_r;
    std::vector<std::string> environment_p;
    /// Coupling events absorbed into the pointer component so far.
    std::uint64_t coupling_events = 0;

    /// Builds E_R and E_P from the world register `world` (all non-observer roles).
    static Decomposition from_world(const std::vector<std::string> &world,
                                    std::vector<std::string> reference,
                                    std::vector<std::string> pointer);
    void validate(const std::vector<std::string> &world) const;
};

// ---------------------------------------------------------------------------
// Entanglement swap trace

enum class SwapLabel { Reference, Pointer };

enum class ObserverLayout {
    /// One observer qubit; switching partner un-computes the previous premeasurement.
    Single,
    /// One observer qubit per observable, no un-compute.
    Register,
};

struct SwapSetup {
    double r_theta = std::numbers::pi / 2;
    double r_phi = 0.0;
    double p_theta = std::numbers::pi / 2;
    double p_phi = 0.0;
    Axis r_axis = Axis::z_axis();
    Axis p_axis = Axis::z_axis();
    ObserverLayout layout = ObserverLayout::Single;

    bool operator==(const SwapSetup &) const = default;
};

struct SwapStep {
    std::size_t step = 0;
    SwapLabel label = SwapLabel::Reference;
    double negativity_or = 0.0;
    double negativity_op = 0.0;
    bool separable_or = true;
    bool separable_op = true;
};

struct SwapTrace {
    static constexpr double kSeparableThreshold = 1e-9;

    std::vector<SwapStep> steps;
    /// Global state after each step.
    std::vector<StateVector> states;
};

SwapLabel parse_swap_label(std::string_view text);
char to_char(SwapLabel label);

SwapTrace run_swap_sequence(const SwapSetup &setup, const std::vector<SwapLabel> &sequence);

// ---------------------------------------------------------------------------
// Environment coupling and the decay experiment

enum class EnvironmentModel {
    /// Every coupling allocates a new qubit that stays in the register.
    Fresh,
    /// Redundant environment records are folded back so the register stays small.
    Compact,
};

/**
 * With probability p_int, couple a fresh environment qubit to the first
 * pointer qubit by a CNOT (pointer -> xi) and absorb it into the pointer
 * component. Returns whether coupling fired.
 *
 * Compact model: once an earlier environment qubit holds a copy of the
 * pointer's computational value, CNOT(earlier -> xi) returns xi to |0>; xi is
 * then released. That step acts on environment qubits only, so every reduced
 * state of the remaining register is unchanged. If xi does not come back to
 * |0> it is kept.
 */
bool couple_environment(StateVector &state, Decomposition &decomposition, RngStream &rng,
                        double p_int, EnvironmentModel model = EnvironmentModel::Fresh);

struct RunConfig {
    std::uint64_t n = 3;
    std::uint64_t m = 10;
    double p_int = 0.1;
    std::uint64_t trials = 1000;
    std::uint64_t seed = 0;
    MeasurementMode mode = MeasurementMode::Recorded;
    double pointer_theta = std::numbers::pi / 2;
    double pointer_phi = 0.0;
    std::uint64_t reference_qubits = 1;
    /// Recorded pointer readout at the end of each cycle (after sampling coherence).
    bool measure_pointer = false;
    EnvironmentModel environment = EnvironmentModel::Fresh;
    double efficiency = 0.6931471805599453;
    double temperature = 300.0;
    Units units = Units::Physical;

    bool operator==(const RunConfig &) const = default;

    void validate() const;
    /// Worst-case simultaneous qubit count for a trial.
    [[nodiscard]] std::uint64_t qubit_requirement() const;
};

struct DecayCycle {
    std::uint64_t cycle = 0;
    double fraction_pure = 1.0;
    double mean_coherence = 0.0;
    double analytic_pure = 1.0;
    double mean_pointer_purity = 1.0;
};

struct DecayResult {
    std::uint64_t n = 0;
    std::uint64_t m = 0;
    double p_int = 0.0;
    std::uint64_t trials = 0;
    std::vector<DecayCycle> cycles;
    /// Per trial: 1-based cycle of the first coupling event, 0 if none.
    std::vector<std::uint32_t> first_coupling_cycle;
    /// Largest register any trial retained between operations.
    std::size_t peak_qubits = 0;
    /// Tape and ledger of trial 0.
    MemoryTape sample_tape;
    std::uint64_t observations_per_trial = 0;
    double energy_per_trial = 0.0;
    double energy_per_observation = 0.0;
    double total_energy = 0.0;
};

/// Prob(pure) = (1 - p_int)^(m (n - 1)).
double analytic_prob_pure(double p_int, std::uint64_t m, std::uint64_t n);

/// `threads` = 0 picks the hardware concurrency. Results do not depend on it.
DecayResult run_decoherence_experiment(const RunConfig &config, unsigned threads = 1);

// ---------------------------------------------------------------------------
// Zeno runs

struct ZenoConfig {
    std::uint64_t m = 50;
    std::uint64_t trials = 100;
    std::uint64_t seed = 0;
    /// Rotation angle about x applied before each measurement; 0 disables free evolution.
    double epsilon = 0.0;
    double initial_theta = std::numbers::pi / 2;
    double initial_phi = 0.0;
    Axis axis = Axis::z_axis();

    void validate() const;
    bool operator==(const ZenoConfig &) const = default;
};

struct ZenoTrial {
    std::vector<int> outcomes;
    /// All outcomes after the first equal the first.
    bool constant = true;
    /// All outcomes equal the initial state's more probable outcome.
    bool survived = true;
};

struct ZenoResult {
    std::vector<ZenoTrial> trials;
    std::uint64_t constant_count = 0;
    std::uint64_t survival_count = 0;
    [[nodiscard]] double survival_fraction() const;
};

ZenoTrial run_zeno(const ZenoConfig &config, RngStream &rng);
ZenoResult run_zeno_batch(const ZenoConfig &config, unsigned threads = 1);

// ---------------------------------------------------------------------------
// Leggett-Garg trajectories

using OutcomePair = std::pair<int, int>;

/// Outcome pairs (q_i, q_j) for the correlators C21, C32, C31, in that order.
struct LgTrajectories {
    double theta = 0.0;
    std::array<std::vector<OutcomePair>, 3> pairs;
};

/// Outcome triples (q1, q2, q3) of trajectories measured at every time.
struct LgTriples {
    double theta = 0.0;
    std::vector<std::array<int, 3>> triples;
};

/// Pairwise protocol: three independent batches, each measuring only at the
/// two times of its correlator. The pointer starts in |0> and rotates about
/// x by omega * tau between measurement times.
LgTrajectories generate_lg_trajectories(double omega, double tau, std::uint64_t trials,
                                        RngStream &rng);

/// Invasive control: every trajectory measured at t1, t2 and t3.
LgTriples generate_lg_control(double omega, double tau, std::uint64_t trials, RngStream &rng);

} // namespace swapdec
