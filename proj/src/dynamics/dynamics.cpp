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

#include "swapdec/dynamics.hpp"

#include "parallel.hpp"
#include "swapdec/density_matrix.hpp"
#include "swapdec/errors.hpp"
#include "swapdec/gates.hpp"

#include <algorithm>
#include <cmath>
#include <optional>
#include <set>

namespace swapdec {

namespace {

std::vector<std::string> minus(const std::vector<std::string> &all,
                               const std::vector<std::string> &removed) {
    std::vector<std::string> out;
    for (const auto &r : all) {
        if (std::find(removed.begin(), removed.end(), r) == removed.end()) {
            out.push_back(r);
        }
    }
    return out;
}

std::set<std::string> as_set(const std::vector<std::string> &v) { return {v.begin(), v.end()}; }

} // namespace

Decomposition Decomposition::from_world(const std::vector<std::string> &world,
                                        std::vector<std::string> reference,
                                        std::vector<std::string> pointer) {
    Decomposition d;
    d.environment_r = minus(world, reference);
    d.environment_p = minus(world, pointer);
    d.reference_qubits = std::move(reference);
    d.pointer_qubits = std::move(pointer);
    d.validate(world);
    return d;
}

void Decomposition::validate(const std::vector<std::string> &world) const {
    const auto r = as_set(reference_qubits);
    const auto p = as_set(pointer_qubits);
    for (const auto &q : r) {
        if (p.count(q) != 0) {
            throw ValidationError("qubit '" + q + "' is in both the reference and pointer components");
        }
    }
    const auto er = as_set(environment_r);
    const auto ep = as_set(environment_p);
    for (const auto &q : r) {
        if (ep.count(q) == 0) {
            throw ValidationError("the pointer environment must contain reference qubit '" + q + "'");
        }
    }
    auto er_r = er;
    er_r.insert(r.begin(), r.end());
    auto ep_p = ep;
    ep_p.insert(p.begin(), p.end());
    const auto w = as_set(world);
    if (er_r != w || ep_p != w || er.size() + r.size() != w.size() ||
        ep.size() + p.size() != w.size()) {
        throw ValidationError("E_R + R and E_P + P must both equal the world register");
    }
}

// ---------------------------------------------------------------------------

SwapLabel parse_swap_label(std::string_view text) {
    if (text == "R" || text == "reference") {
        return SwapLabel::Reference;
    }
    if (text == "P" || text == "pointer") {
        return SwapLabel::Pointer;
    }
    throw ValidationError("unknown swap label '" + std::string(text) + "' (expected R or P)");
}

char to_char(SwapLabel label) { return label == SwapLabel::Reference ? 'R' : 'P'; }

SwapTrace run_swap_sequence(const SwapSetup &setup, const std::vector<SwapLabel> &sequence) {
    if (sequence.empty()) {
        throw ValidationError("swap sequence must not be empty");
    }
    const bool single = setup.layout == ObserverLayout::Single;
    std::vector<std::string> roles = single ? std::vector<std::string>{"o"}
                                            : std::vector<std::string>{"o_R", "o_P"};
    for (const char *r : {"r", "p", "e_R", "e_P"}) {
        roles.emplace_back(r);
    }
    StateVector state(roles);
    state.apply_unitary(state.position("r"), gates::bloch(setup.r_theta, setup.r_phi));
    state.apply_unitary(state.position("p"), gates::bloch(setup.p_theta, setup.p_phi));

    const BinaryObservable ref_obs{"M_R", ObservableKind::Reference, "r", setup.r_axis};
    const BinaryObservable ptr_obs{"M_P", ObservableKind::Pointer, "p", setup.p_axis};
    auto observable_for = [&](SwapLabel l) -> const BinaryObservable & {
        return l == SwapLabel::Reference ? ref_obs : ptr_obs;
    };
    auto observer_for = [&](SwapLabel l) {
        if (single) {
            return state.position("o");
        }
        return state.position(l == SwapLabel::Reference ? "o_R" : "o_P");
    };

    std::vector<std::size_t> observers;
    if (single) {
        observers = {state.position("o")};
    } else {
        observers = {state.position("o_R"), state.position("o_P")};
    }
    const std::vector<std::size_t> r_cut{state.position("r")};
    const std::vector<std::size_t> p_cut{state.position("p")};

    SwapTrace trace;
    std::optional<SwapLabel> partner;
    std::set<SwapLabel> entangled;
    for (std::size_t i = 0; i < sequence.size(); ++i) {
        const SwapLabel label = sequence[i];
        if (single) {
            if (partner != label) {
                if (partner) {
                    // Un-compute the previous premeasurement so |o> is free again.
                    premeasure(state, observable_for(*partner), observer_for(*partner));
                }
                premeasure(state, observable_for(label), observer_for(label));
                partner = label;
            }
        } else if (entangled.insert(label).second) {
            premeasure(state, observable_for(label), observer_for(label));
        }
        SwapStep step;
        step.step = i + 1;
        step.label = label;
        step.negativity_or = negativity(state, observers, r_cut);
        step.negativity_op = negativity(state, observers, p_cut);
        step.separable_or = step.negativity_or <= SwapTrace::kSeparableThreshold;
        step.separable_op = step.negativity_op <= SwapTrace::kSeparableThreshold;
        trace.steps.push_back(step);
        trace.states.push_back(state);
    }
    return trace;
}

// ---------------------------------------------------------------------------

bool couple_environment(StateVector &state, Decomposition &decomposition, RngStream &rng,
                        double p_int, EnvironmentModel model) {
    if (!(p_int >= 0.0 && p_int <= 1.0)) {
        throw ValidationError("p_int must lie in [0, 1]");
    }
    if (decomposition.pointer_qubits.empty()) {
        throw ValidationError("decomposition has no pointer qubit to couple");
    }
    if (!rng.bernoulli(p_int)) {
        return false;
    }
    if (state.num_qubits() >= StateVector::kMaxQubits) {
        throw ResourceError("qubit cap of " + std::to_string(StateVector::kMaxQubits) +
                            " reached while coupling the environment; lower m*(n-1) or use "
                            "the compact environment model");
    }
    const std::string &pointer = decomposition.pointer_qubits.front();
    const std::string xi = "xi" + std::to_string(decomposition.coupling_events);
    const std::size_t xi_pos = state.extend(xi);
    state.apply_cnot(state.position(pointer), xi_pos);
    ++decomposition.coupling_events;

    if (model == EnvironmentModel::Compact && decomposition.pointer_qubits.size() > 1) {
        const std::string &earlier = decomposition.pointer_qubits.back();
        state.apply_cnot(state.position(earlier), xi_pos);
        if (state.prob_one(xi_pos) <= 1e-12) {
            state.release(xi);
            return true;
        }
    }
    decomposition.pointer_qubits.push_back(xi);
    decomposition.environment_r.push_back(xi);
    return true;
}

void RunConfig::validate() const {
    if (n < 1) {
        throw ValidationError("n must be ≥ 1");
    }
    if (m < 1) {
        throw ValidationError("m must be ≥ 1");
    }
    if (trials < 1) {
        throw ValidationError("trials must be ≥ 1");
    }
    if (!(p_int >= 0.0 && p_int <= 1.0)) {
        throw ValidationError("p_int must lie in [0, 1]");
    }
    if (n > 1 && reference_qubits < 1) {
        throw ValidationError("reference_qubits must be ≥ 1 when n > 1");
    }
    if (m > UINT32_MAX - 1) {
        throw ValidationError("m is too large");
    }
}

std::uint64_t RunConfig::qubit_requirement() const {
    const std::uint64_t base = 1 + reference_qubits + 1;
    const std::uint64_t opportunities = m * (n - 1);
    if (opportunities == 0 || p_int == 0.0) {
        return base;
    }
    if (environment == EnvironmentModel::Compact) {
        return base + std::min<std::uint64_t>(opportunities, 2);
    }
    return base + opportunities;
}

double analytic_prob_pure(double p_int, std::uint64_t m, std::uint64_t n) {
    const auto exponent = static_cast<double>(m * (n - 1));
    return std::pow(1.0 - p_int, exponent);
}

namespace {

struct TrialOutcome {
    std::vector<double> coherence;
    std::vector<double> purity;
    std::uint32_t first_coupling = 0;
    std::size_t peak_qubits = 0;
    std::uint64_t observations = 0;
    double energy = 0.0;
    MemoryTape tape;
};

/// One-hot cyclic schedule over a cycle of n ticks: n-1 reference ticks
/// (cycling through the reference observables) then the pointer tick.
Schedule cycle_schedule(const RunConfig &config, const ObservableCatalog &catalog) {
    Schedule s;
    s.cyclic = true;
    const std::size_t width = catalog.size();
    for (std::uint64_t j = 0; j < config.n; ++j) {
        std::vector<double> row(width, 0.0);
        if (j + 1 < config.n) {
            row[j % config.reference_qubits] = 1.0;
        } else {
            row[width - 1] = 1.0;
        }
        s.rows.push_back(std::move(row));
    }
    s.validate(width);
    return s;
}

} // namespace

DecayResult run_decoherence_experiment(const RunConfig &config, unsigned threads) {
    config.validate();
    const std::uint64_t needed = config.qubit_requirement();
    if (needed > StateVector::kMaxQubits) {
        throw ResourceError("run needs " + std::to_string(needed) + " qubits but only " +
                            std::to_string(StateVector::kMaxQubits) +
                            " are available; lower m*(n-1) or use the compact environment model");
    }

    std::vector<std::string> roles{"o"};
    std::vector<std::string> references;
    ObservableCatalog catalog;
    for (std::uint64_t i = 0; i < config.reference_qubits; ++i) {
        const std::string r = "r" + std::to_string(i);
        roles.push_back(r);
        references.push_back(r);
        catalog.add({"R" + std::to_string(i), ObservableKind::Reference, r, Axis::z_axis()});
    }
    roles.emplace_back("p");
    catalog.add({"P0", ObservableKind::Pointer, "p", Axis::z_axis()});
    const Schedule schedule = cycle_schedule(config, catalog);
    const std::vector<std::string> world(roles.begin() + 1, roles.end());

    std::vector<TrialOutcome> outcomes(config.trials);
    detail::parallel_for(config.trials, threads, [&](std::uint64_t trial) {
        RngStream rng(config.seed, trial);
        StateVector state(roles);
        // Reference qubits sit in fixed eigenstates x_i = i mod 2.
        for (std::uint64_t i = 1; i < config.reference_qubits; i += 2) {
            state.apply_unitary(state.position(references[i]), gates::pauli_x());
        }
        const std::size_t pointer = state.position("p");
        const std::size_t observer = state.position("o");
        state.apply_unitary(pointer, gates::bloch(config.pointer_theta, config.pointer_phi));
        Decomposition decomposition = Decomposition::from_world(world, references, {"p"});
        DissipationLedger ledger(config.efficiency, config.temperature, config.units);

        TrialOutcome out;
        out.coherence.reserve(config.m);
        out.purity.reserve(config.m);
        out.peak_qubits = state.num_qubits();
        for (std::uint64_t cycle = 1; cycle <= config.m; ++cycle) {
            for (std::uint64_t j = 0; j < config.n; ++j) {
                const std::uint64_t t = (cycle - 1) * config.n + j;
                const BinaryObservable &obs = catalog.at(next_observable(schedule, t, rng));
                if (obs.kind == ObservableKind::Reference) {
                    perform_measurement(state, obs, observer, config.mode, out.tape, ledger, rng, t);
                    if (config.mode == MeasurementMode::Unitary) {
                        premeasure(state, obs, observer);
                    }
                    const bool fired = couple_environment(state, decomposition, rng, config.p_int,
                                                          config.environment);
                    if (fired && out.first_coupling == 0) {
                        out.first_coupling = static_cast<std::uint32_t>(cycle);
                    }
                    out.peak_qubits = std::max(out.peak_qubits, state.num_qubits());
                } else {
                    const std::size_t p = state.position("p");
                    const std::vector<std::size_t> keep{p};
                    const DensityMatrix rho = partial_trace(state, keep);
                    out.coherence.push_back(coherence(rho));
                    out.purity.push_back(purity(rho));
                    if (config.measure_pointer) {
                        perform_measurement(state, obs, observer, MeasurementMode::Recorded,
                                            out.tape, ledger, rng, t);
                    }
                }
            }
        }
        out.observations = ledger.observation_count();
        out.energy = ledger.total_energy();
        if (trial != 0) {
            out.tape = MemoryTape{};
        }
        outcomes[trial] = std::move(out);
    });

    DecayResult result;
    result.n = config.n;
    result.m = config.m;
    result.p_int = config.p_int;
    result.trials = config.trials;
    result.first_coupling_cycle.reserve(config.trials);
    const auto trials = static_cast<double>(config.trials);
    for (std::uint64_t c = 1; c <= config.m; ++c) {
        std::uint64_t pure = 0;
        double coherence_sum = 0.0;
        double purity_sum = 0.0;
        for (const auto &o : outcomes) {
            if (o.first_coupling == 0 || o.first_coupling > c) {
                ++pure;
            }
            coherence_sum += o.coherence[c - 1];
            purity_sum += o.purity[c - 1];
        }
        result.cycles.push_back({c, static_cast<double>(pure) / trials, coherence_sum / trials,
                                 analytic_prob_pure(config.p_int, c, config.n),
                                 purity_sum / trials});
    }
    for (const auto &o : outcomes) {
        result.first_coupling_cycle.push_back(o.first_coupling);
        result.peak_qubits = std::max(result.peak_qubits, o.peak_qubits);
        result.total_energy += o.energy;
    }
    result.sample_tape = std::move(outcomes.front().tape);
    result.observations_per_trial = outcomes.front().observations;
    result.energy_per_trial = outcomes.front().energy;
    result.energy_per_observation =
        DissipationLedger(config.efficiency, config.temperature, config.units).energy_per_observation();
    return result;
}

// ---------------------------------------------------------------------------

void ZenoConfig::validate() const {
    if (m < 1) {
        throw ValidationError("m must be ≥ 1");
    }
    if (trials < 1) {
        throw ValidationError("trials must be ≥ 1");
    }
    BinaryObservable{"M_P", ObservableKind::Pointer, "p", axis}.validate();
}

ZenoTrial run_zeno(const ZenoConfig &config, RngStream &rng) {
    config.validate();
    StateVector state({"o", "p"});
    const std::size_t observer = state.position("o");
    const std::size_t pointer = state.position("p");
    state.apply_unitary(pointer, gates::bloch(config.initial_theta, config.initial_phi));
    const BinaryObservable obs{"M_P", ObservableKind::Pointer, "p", config.axis};
    const BornProbabilities initial = born_probabilities(state, obs);
    const int preferred = initial.p0 >= initial.p1 ? 0 : 1;

    MemoryTape tape;
    DissipationLedger ledger;
    ZenoTrial trial;
    trial.outcomes.reserve(config.m);
    for (std::uint64_t t = 0; t < config.m; ++t) {
        if (config.epsilon != 0.0) {
            state.apply_unitary(pointer, gates::rx(config.epsilon));
        }
        const auto record = perform_measurement(state, obs, observer, MeasurementMode::Recorded,
                                                tape, ledger, rng, t);
        trial.outcomes.push_back(record->outcome);
    }
    const int first = trial.outcomes.front();
    trial.constant = std::all_of(trial.outcomes.begin(), trial.outcomes.end(),
                                 [&](int o) { return o == first; });
    trial.survived = std::all_of(trial.outcomes.begin(), trial.outcomes.end(),
                                 [&](int o) { return o == preferred; });
    return trial;
}

double ZenoResult::survival_fraction() const {
    return trials.empty() ? 0.0
                          : static_cast<double>(survival_count) / static_cast<double>(trials.size());
}

ZenoResult run_zeno_batch(const ZenoConfig &config, unsigned threads) {
    config.validate();
    ZenoResult result;
    result.trials.resize(config.trials);
    detail::parallel_for(config.trials, threads, [&](std::uint64_t i) {
        RngStream rng(config.seed, i);
        result.trials[i] = run_zeno(config, rng);
    });
    for (const auto &t : result.trials) {
        result.constant_count += t.constant ? 1 : 0;
        result.survival_count += t.survived ? 1 : 0;
    }
    return result;
}

// ---------------------------------------------------------------------------

namespace {

/// Measures the pointer at the listed times (1-based, ascending) of a
/// trajectory rotated by theta between consecutive times.
std::vector<int> lg_trajectory(double theta, const std::vector<int> &times, RngStream &rng) {
    StateVector state({"o", "p"});
    const std::size_t observer = state.position("o");
    const std::size_t pointer = state.position("p");
    const BinaryObservable obs{"Q", ObservableKind::Pointer, "p", Axis::z_axis()};
    MemoryTape tape;
    DissipationLedger ledger;
    std::vector<int> outcomes;
    const int last = times.back();
    for (int k = 1; k <= last; ++k) {
        if (k > 1) {
            state.apply_unitary(pointer, gates::rx(theta));
        }
        if (std::find(times.begin(), times.end(), k) != times.end()) {
            const auto record = perform_measurement(state, obs, observer, MeasurementMode::Recorded,
                                                    tape, ledger, rng,
                                                    static_cast<std::uint64_t>(k));
            outcomes.push_back(record->outcome);
        }
    }
    return outcomes;
}

} // namespace

LgTrajectories generate_lg_trajectories(double omega, double tau, std::uint64_t trials,
                                        RngStream &rng) {
    if (trials < 1) {
        throw ValidationError("trials must be ≥ 1");
    }
    const double theta = omega * tau;
    // C21, C32, C31 as (later, earlier) time pairs.
    const std::array<std::pair<int, int>, 3> pairs{{{2, 1}, {3, 2}, {3, 1}}};
    LgTrajectories out;
    out.theta = theta;
    for (std::size_t b = 0; b < pairs.size(); ++b) {
        const auto [later, earlier] = pairs[b];
        auto &batch = out.pairs[b];
        batch.reserve(trials);
        for (std::uint64_t i = 0; i < trials; ++i) {
            RngStream trial_rng = rng.split(b * trials + i);
            const auto q = lg_trajectory(theta, {earlier, later}, trial_rng);
            batch.emplace_back(q[1], q[0]);
        }
    }
    return out;
}

LgTriples generate_lg_control(double omega, double tau, std::uint64_t trials, RngStream &rng) {
    if (trials < 1) {
        throw ValidationError("trials must be ≥ 1");
    }
    LgTriples out;
    out.theta = omega * tau;
    out.triples.reserve(trials);
    for (std::uint64_t i = 0; i < trials; ++i) {
        RngStream trial_rng = rng.split(i);
        const auto q = lg_trajectory(out.theta, {1, 2, 3}, trial_rng);
        out.triples.push_back({q[0], q[1], q[2]});
    }
    return out;
}

} // namespace swapdec
