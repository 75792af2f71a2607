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

#include "swapdec/cli.hpp"

#include "swapdec/analysis.hpp"
#include "swapdec/config.hpp"
#include "swapdec/density_matrix.hpp"
#include "swapdec/errors.hpp"
#include "swapdec/gates.hpp"
#include "swapdec/kernels.hpp"
#include "swapdec/serialize.hpp"

#include <CLI11.hpp>

#include <cmath>
#include <cstdlib>
#include <filesystem>
#include <iostream>
#include <sstream>

#ifndef SWAPDEC_VERSION
#define SWAPDEC_VERSION "0.0.0"
#endif

namespace swapdec::cli {

namespace fs = std::filesystem;
using nlohmann::json;
using namespace swapdec::config;

namespace {

struct Options {
    std::string experiment;
    std::string config_path;
    std::uint64_t seed = 0;
    bool seed_given = false;
    std::string out_dir;
    std::uint64_t trials = 0;
    bool trials_given = false;
    std::string units;
    unsigned threads = 0;
    bool threads_given = false;
};

unsigned threads_from_env() {
    if (const char *env = std::getenv("SWAPDEC_THREADS"); env != nullptr) {
        try {
            const unsigned long v = std::stoul(env);
            return static_cast<unsigned>(v);
        } catch (const std::exception &) {
            throw ValidationError("SWAPDEC_THREADS must be a nonnegative integer");
        }
    }
    return 0;
}

json base_summary(const ExperimentConfig &cfg) {
    json s;
    s["tool"] = "swapdec";
    s["version"] = SWAPDEC_VERSION;
    s["experiment"] = std::string(to_string(cfg.experiment));
    s["seed"] = cfg.resolved_seed();
    s["config"] = to_json(cfg);
    return s;
}

json ledger_json(double per_observation, std::uint64_t observations, double dt, Units units) {
    const double total = static_cast<double>(observations) * per_observation;
    return {{"units", std::string(to_string(units))},
            {"boltzmann", units == Units::Physical ? DissipationLedger::kBoltzmann : 1.0},
            {"observations", observations},
            {"energy_per_observation", per_observation},
            {"total_energy", total},
            {"total_action", total * dt}};
}

int run_decay(const ExperimentConfig &cfg, const fs::path &dir, unsigned threads, std::ostream &out,
              std::ostream &err) {
    const auto &params = std::get<DecayParams>(cfg.parameters);
    RunConfig run = params.run;
    run.seed = cfg.resolved_seed();
    run.units = cfg.units;
    const DecayResult result = run_decoherence_experiment(run, threads);

    std::ostringstream csv;
    serialize::write_decay_csv(csv, result);
    serialize::write_file(dir / "decay.csv", csv.str());
    std::ostringstream tape;
    result.sample_tape.write_csv(tape);
    serialize::write_file(dir / "memory.csv", tape.str());

    json summary = base_summary(cfg);
    json cycles = json::array();
    for (const auto &c : result.cycles) {
        const double sigma = std::sqrt(c.analytic_pure * (1.0 - c.analytic_pure) /
                                       static_cast<double>(result.trials));
        cycles.push_back({{"cycle", c.cycle},
                          {"fraction_pure", c.fraction_pure},
                          {"analytic_pure", c.analytic_pure},
                          {"mean_coherence", c.mean_coherence},
                          {"mean_pointer_purity", c.mean_pointer_purity},
                          {"within_3sigma", std::abs(c.fraction_pure - c.analytic_pure) <= 3.0 * sigma}});
    }
    json results{{"cycles", cycles},
                 {"trials", result.trials},
                 {"peak_qubits", result.peak_qubits},
                 {"ledger_per_trial", ledger_json(result.energy_per_observation,
                                                  result.observations_per_trial, 1.0, run.units)},
                 {"total_energy_all_trials", result.total_energy},
                 {"fit_excludes_zero_count_cycles", true}};
    int code = kSuccess;
    try {
        const DecayFit fit = fit_decay(result);
        json fj{{"rate_per_interval", fit.rate_per_interval},
                {"slope", fit.slope},
                {"intercept", fit.intercept},
                {"r_squared", fit.r_squared},
                {"intervals_used", fit.intervals_used},
                {"excluded_cycles", fit.excluded_cycles},
                {"expected_rate", 1.0 - run.p_int}};
        if (params.bootstrap_resamples > 0) {
            const BootstrapEstimate b =
                bootstrap_decay_rate(result, params.bootstrap_resamples, run.seed);
            fj["bootstrap"] = {{"mean", b.mean},
                               {"standard_error", b.standard_error},
                               {"resamples", b.resamples_used}};
        }
        results["fit"] = fj;
    } catch (const InsufficientDataError &e) {
        results["fit"] = nullptr;
        results["fit_error"] = e.what();
        err << "swapdec: insufficient data for the decay fit: " << e.what() << '\n';
        code = kInsufficientData;
    }
    summary["results"] = results;
    serialize::write_file(dir / "summary.json", serialize::dump_summary(summary));
    out << "decay: wrote " << (dir / "decay.csv").string() << '\n';
    return code;
}

int run_swap(const ExperimentConfig &cfg, const fs::path &dir, std::ostream &out) {
    const auto &params = std::get<SwapParams>(cfg.parameters);
    const SwapTrace trace = run_swap_sequence(params.setup, params.sequence);
    std::ostringstream csv;
    serialize::write_swap_csv(csv, trace);
    serialize::write_file(dir / "swap.csv", csv.str());

    json summary = base_summary(cfg);
    json steps = json::array();
    bool alternates = true;
    for (const auto &s : trace.steps) {
        steps.push_back({{"step", s.step},
                         {"label", std::string(1, to_char(s.label))},
                         {"negativity_or", s.negativity_or},
                         {"negativity_op", s.negativity_op}});
        const bool or_on = s.negativity_or > 1e-6;
        const bool op_on = s.negativity_op > 1e-6;
        alternates = alternates && (or_on != op_on) && (s.label == SwapLabel::Reference ? or_on : op_on);
    }
    json results{{"steps", steps},
                 {"alternation_holds", alternates},
                 {"final_fidelity_with_step1", fidelity(trace.states.front(), trace.states.back())}};
    summary["results"] = results;
    serialize::write_file(dir / "summary.json", serialize::dump_summary(summary));
    out << "swap-trace: wrote " << (dir / "swap.csv").string() << '\n';
    return kSuccess;
}

int run_zeno_cli(const ExperimentConfig &cfg, const fs::path &dir, unsigned threads,
                 std::ostream &out) {
    ZenoConfig z = std::get<ZenoParams>(cfg.parameters).zeno;
    z.seed = cfg.resolved_seed();
    const ZenoResult result = run_zeno_batch(z, threads);
    std::ostringstream csv;
    serialize::write_zeno_csv(csv, result);
    serialize::write_file(dir / "zeno.csv", csv.str());

    json summary = base_summary(cfg);
    const double analytic = std::pow(std::cos(z.epsilon / 2.0), 2.0 * static_cast<double>(z.m));
    summary["results"] = {{"trials", result.trials.size()},
                          {"constant_count", result.constant_count},
                          {"survival_count", result.survival_count},
                          {"survival_fraction", result.survival_fraction()},
                          {"analytic_survival_from_eigenstate", analytic}};
    serialize::write_file(dir / "summary.json", serialize::dump_summary(summary));
    out << "zeno: wrote " << (dir / "zeno.csv").string() << '\n';
    return kSuccess;
}

json lg_json(double theta, const LGStats &s) {
    json j{{"theta", theta},       {"c21", s.c21},           {"c32", s.c32},
           {"c31", s.c31},         {"k_value", s.k_value},   {"k_stderr", s.k_stderr},
           {"violation", s.violation}, {"trials", s.trials_per_pair}};
    if (s.std_errors) {
        j["std_errors"] = *s.std_errors;
    }
    return j;
}

int run_lg(const ExperimentConfig &cfg, const fs::path &dir, std::ostream &out) {
    const auto &params = std::get<LgParams>(cfg.parameters);
    std::vector<double> thetas = params.thetas;
    if (thetas.empty()) {
        thetas.push_back(params.omega * params.tau);
    }
    const RngStream root(cfg.resolved_seed());
    std::vector<serialize::LgRow> rows;
    std::vector<serialize::LgRow> control_rows;
    json points = json::array();
    json control_points = json::array();
    for (std::size_t i = 0; i < thetas.size(); ++i) {
        const double omega = thetas[i] / params.tau;
        RngStream pair_rng = root.split(2 * i);
        const LGStats s = lg_from_trajectories(
            generate_lg_trajectories(omega, params.tau, params.trials, pair_rng));
        rows.push_back({thetas[i], s});
        json pj = lg_json(thetas[i], s);
        pj["quantum_k"] = lg_quantum_k(thetas[i]);
        pj["matches_quantum_3sigma"] = std::abs(s.k_value - lg_quantum_k(thetas[i])) <= 3.0 * s.k_stderr;
        points.push_back(pj);
        if (params.control) {
            RngStream control_rng = root.split(2 * i + 1);
            const LGStats c =
                lg_from_triples(generate_lg_control(omega, params.tau, params.trials, control_rng));
            control_rows.push_back({thetas[i], c});
            json cj = lg_json(thetas[i], c);
            cj["within_classical_bound_3sigma"] = c.k_value <= 1.0 + 3.0 * c.k_stderr;
            control_points.push_back(cj);
        }
    }
    std::ostringstream csv;
    serialize::write_lg_csv(csv, rows);
    serialize::write_file(dir / "lg.csv", csv.str());
    if (params.control) {
        std::ostringstream control_csv;
        serialize::write_lg_csv(control_csv, control_rows);
        serialize::write_file(dir / "lg_control.csv", control_csv.str());
    }
    json summary = base_summary(cfg);
    summary["results"] = {{"pairwise", points}, {"control", control_points}};
    serialize::write_file(dir / "summary.json", serialize::dump_summary(summary));
    out << "lg: wrote " << (dir / "lg.csv").string() << '\n';
    return kSuccess;
}

int run_sieve(const ExperimentConfig &cfg, const fs::path &dir, std::ostream &out) {
    const auto &params = std::get<SieveParams>(cfg.parameters);
    const ObservableCatalog catalog(params.catalog);
    const SieveReport report = verify_predictability_sieve(catalog);
    std::ostringstream csv;
    serialize::write_sieve_csv(csv, report);
    serialize::write_file(dir / "sieve.csv", csv.str());

    json summary = base_summary(cfg);
    json violations = json::array();
    for (const auto &v : report.violations()) {
        violations.push_back({{"first", v.first}, {"second", v.second}, {"commutator_norm", v.norm}});
    }
    json results{{"passed", report.passed()},
                 {"checked_pairs", report.checked.size()},
                 {"violations", violations},
                 {"reference_count", catalog.reference_count()},
                 {"pointer_count", catalog.pointer_count()}};

    if (params.ticks > 0) {
        // One target qubit per distinct role plus one observer qubit per observable.
        std::vector<std::string> roles;
        for (const auto &o : catalog.entries()) {
            if (std::find(roles.begin(), roles.end(), o.target) == roles.end()) {
                roles.push_back(o.target);
            }
        }
        for (const auto &o : catalog.entries()) {
            roles.push_back("q_" + o.id);
        }
        for (const auto &[role, angles] : params.initial_states) {
            if (std::find(roles.begin(), roles.end(), role) == roles.end()) {
                throw ValidationError("config field 'parameters.initial_states': role '" + role +
                                      "' is not the target of any observable");
            }
        }
        StateVector state(roles);
        for (const auto &[role, angles] : params.initial_states) {
            state.apply_unitary(state.position(role), gates::bloch(angles.theta, angles.phi));
        }
        Schedule schedule = params.schedule;
        if (params.schedule_kind == "round_robin") {
            schedule = Schedule::round_robin(catalog.size());
        } else if (params.schedule_kind == "uniform") {
            schedule = Schedule::uniform(catalog.size(), 1);
            schedule.cyclic = true;
        }
        schedule.dt = params.schedule.dt;
        RngStream rng(cfg.resolved_seed());
        MemoryTape tape;
        DissipationLedger ledger(params.efficiency, params.temperature, cfg.units, schedule.dt);
        for (std::uint64_t t = 0; t < params.ticks; ++t) {
            const BinaryObservable &obs = catalog.at(next_observable(schedule, t, rng));
            perform_measurement(state, obs, state.position("q_" + obs.id), MeasurementMode::Recorded,
                                tape, ledger, rng, t);
        }
        std::ostringstream tape_csv;
        tape.write_csv(tape_csv);
        serialize::write_file(dir / "memory.csv", tape_csv.str());
        const Identification id = identify_system(tape, ReferenceSpec{params.reference_spec}, params.window);
        results["identification"] = std::string(to_string(id));
        results["coarse_grained"] = coarse_grained_string(classify_coarse_grained(tape));
        results["ledger"] = ledger_json(ledger.energy_per_observation(), ledger.observation_count(),
                                        schedule.dt, cfg.units);
    }
    summary["results"] = results;
    serialize::write_file(dir / "summary.json", serialize::dump_summary(summary));
    out << "sieve-check: " << (report.passed() ? "no violations" : "violations found") << '\n';
    return kSuccess;
}

int dispatch(const Options &opts, std::ostream &out, std::ostream &err) {
    ExperimentConfig cfg = load_config(opts.config_path);
    if (to_string(cfg.experiment) != opts.experiment) {
        throw ValidationError("config field 'experiment': config describes '" +
                              std::string(to_string(cfg.experiment)) + "' but the subcommand is '" +
                              opts.experiment + "'");
    }
    if (opts.seed_given) {
        cfg.seed = opts.seed;
    } else if (!cfg.seed) {
        err << "swapdec: warning: no seed given; using seed 0\n";
        cfg.seed = 0;
    }
    if (opts.trials_given) {
        cfg.override_trials(opts.trials);
    }
    if (!opts.units.empty()) {
        cfg.override_units(parse_units(opts.units));
    }
    const unsigned threads = opts.threads_given ? opts.threads : threads_from_env();

    fs::path dir = opts.out_dir.empty() ? fs::path(cfg.output.value_or(".")) : fs::path(opts.out_dir);
    serialize::ensure_directory(dir);

    switch (cfg.experiment) {
    case ExperimentKind::Decay:
        return run_decay(cfg, dir, threads, out, err);
    case ExperimentKind::SwapTrace:
        return run_swap(cfg, dir, out);
    case ExperimentKind::Zeno:
        return run_zeno_cli(cfg, dir, threads, out);
    case ExperimentKind::Lg:
        return run_lg(cfg, dir, out);
    case ExperimentKind::SieveCheck:
        return run_sieve(cfg, dir, out);
    }
    return kValidation;
}

} // namespace

int run_cli(const std::vector<std::string> &args, std::ostream &out, std::ostream &err) {
    CLI::App app{"swapdec: decoherence as entanglement swaps between reference and pointer "
                 "components",
                 "swapdec"};
    app.set_version_flag("--version", SWAPDEC_VERSION);
    app.require_subcommand(1);
    Options opts;

    const std::vector<std::pair<const char *, const char *>> commands{
        {"swap-trace", "negativities across O:R and O:P for an R/P premeasurement sequence"},
        {"decay", "Monte Carlo purity and coherence decay under environment coupling"},
        {"zeno", "repeated pointer measurements with optional free evolution"},
        {"lg", "Leggett-Garg correlators for a rotating pointer qubit"},
        {"sieve-check", "commutation check of an observable catalog, with optional observation run"}};
    for (const auto &[name, description] : commands) {
        CLI::App *sub = app.add_subcommand(name, description);
        sub->add_option("--config", opts.config_path, "experiment configuration (JSON)")->required();
        sub->add_option("--seed", opts.seed, "64-bit seed (overrides the config)");
        sub->add_option("--out", opts.out_dir, "output directory");
        sub->add_option("--trials", opts.trials, "trial count (overrides the config)");
        sub->add_option("--units", opts.units, "physical or natural")
            ->check(CLI::IsMember({"physical", "natural"}));
        sub->add_option("--threads", opts.threads,
                        "worker threads (0 = all cores; falls back to SWAPDEC_THREADS)");
        sub->callback([&opts, sub, name = std::string(name)] {
            opts.experiment = name;
            opts.seed_given = sub->count("--seed") > 0;
            opts.trials_given = sub->count("--trials") > 0;
            opts.threads_given = sub->count("--threads") > 0;
        });
    }

    std::vector<std::string> reversed(args.rbegin(), args.rend());
    try {
        app.parse(reversed);
    } catch (const CLI::CallForHelp &) {
        out << app.help();
        return kSuccess;
    } catch (const CLI::CallForVersion &) {
        out << SWAPDEC_VERSION << '\n';
        return kSuccess;
    } catch (const CLI::ParseError &e) {
        err << "swapdec: " << e.what() << '\n';
        return kValidation;
    }

    try {
        return dispatch(opts, out, err);
    } catch (const Error &e) {
        err << "swapdec: error: " << e.what() << '\n';
        return e.exit_code();
    } catch (const std::exception &e) {
        err << "swapdec: error: " << e.what() << '\n';
        return kValidation;
    }
}

int run_cli(int argc, char **argv) {
    std::vector<std::string> args;
    for (int i = 1; i < argc; ++i) {
        args.emplace_back(argv[i]);
    }
    return run_cli(args, std::cout, std::cerr);
}

} // namespace swapdec::cli
