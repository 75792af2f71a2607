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
#include "swapdec/observer.hpp"

#include <json.hpp>

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

namespace swapdec::config {

enum class ExperimentKind { SwapTrace, Decay, Zeno, Lg, SieveCheck };

std::string_view to_string(ExperimentKind kind);
/// ValidationError for unknown names.
ExperimentKind parse_experiment(std::string_view name);

struct SwapParams {
    SwapSetup setup;
    std::vector<SwapLabel> sequence{SwapLabel::Reference, SwapLabel::Pointer, SwapLabel::Reference};
    bool operator==(const SwapParams &) const = default;
};

struct DecayParams {
    RunConfig run;
    std::uint64_t bootstrap_resamples = 1000;
    bool operator==(const DecayParams &) const = default;
};

struct ZenoParams {
    ZenoConfig zeno;
    bool operator==(const ZenoParams &) const = default;
};

struct LgParams {
    double omega = 1.0;
    double tau = 1.0;
    /// When nonempty, one estimate per theta (= omega * tau) replaces the single point.
    std::vector<double> thetas;
    std::uint64_t trials = 10000;
    /// Also evaluate the measured-every-time control model.
    bool control = true;
    bool operator==(const LgParams &) const = default;
};

struct BlochAngles {
    double theta = 0.0;
    double phi = 0.0;
    bool operator==(const BlochAngles &) const = default;
};

struct SieveParams {
    std::vector<BinaryObservable> catalog;
    std::map<std::string, int> reference_spec;
    /// Empty rows means a round-robin schedule over the catalog.
    Schedule schedule;
    std::string schedule_kind = "round_robin";
    /// Recorded observations simulated before identification; 0 skips the run.
    std::uint64_t ticks = 0;
    std::map<std::string, BlochAngles> initial_states;
    double efficiency = 0.6931471805599453;
    double temperature = 300.0;
    TickWindow window;
    bool operator==(const SieveParams &) const = default;
};

using Parameters = std::variant<SwapParams, DecayParams, ZenoParams, LgParams, SieveParams>;

struct ExperimentConfig {
    ExperimentKind experiment = ExperimentKind::Decay;
    std::optional<std::uint64_t> seed;
    Units units = Units::Physical;
    std::optional<std::string> output;
    Parameters parameters;

    bool operator==(const ExperimentConfig &) const = default;

    /// Seed actually used (0 when unset).
    [[nodiscard]] std::uint64_t resolved_seed() const { return seed.value_or(0); }
    /// Overrides the trial count of experiments that have one.
    void override_trials(std::uint64_t trials);
    void override_units(Units units);
};

/// Strict parse: unknown fields and wrong types are ValidationErrors naming
/// the field and, when it can be located, its line in `text`.
ExperimentConfig parse_config(std::string_view text);
ExperimentConfig load_config(const std::string &path);

/// Canonical form with every default filled in; parse_config(to_json(c)) == c.
nlohmann::json to_json(const ExperimentConfig &config);

Units parse_units(std::string_view text);
std::string_view to_string(Units units);

} // namespace swapdec::config
