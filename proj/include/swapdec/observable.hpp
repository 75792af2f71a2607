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

#include "swapdec/kernels.hpp"
#include "swapdec/rng.hpp"
#include "swapdec/state_vector.hpp"

#include <array>
#include <string>
#include <string_view>

namespace swapdec {

enum class ObservableKind { Reference, Pointer };

std::string_view to_string(ObservableKind kind);
/// Accepts "reference"/"R" and "pointer"/"P".
ObservableKind parse_kind(std::string_view text);

/// Unit Bloch direction of a yes/no measurement.
struct Axis {
    double x = 0.0;
    double y = 0.0;
    double z = 1.0;

    static constexpr double kUnitTolerance = 1e-12;
    static Axis z_axis() { return {0.0, 0.0, 1.0}; }
    static Axis x_axis() { return {1.0, 0.0, 0.0}; }

    bool operator==(const Axis &) const = default;
};

/**
 * Binary observable on one logical qubit.
 *
 * Outcome 0 is the +1 eigenvector of n.sigma, outcome 1 the -1 eigenvector;
 * the induced operator is the projector (I - n.sigma)/2, whose eigenvalues
 * are exactly the outcome bits.
 */
struct BinaryObservable {
    std::string id;
    ObservableKind kind = ObservableKind::Pointer;
    std::string target;
    Axis axis;

    /// Throws ValidationError when the axis is not a unit vector.
    void validate() const;

    bool operator==(const BinaryObservable &) const = default;
};

/// n.sigma for the observable's axis.
kernels::Mat2 spectral_operator(const Axis &axis);
/// (I - n.sigma)/2
kernels::Mat2 outcome_projector(const Axis &axis);
/// Unitary V with V|+n> = |0> and V|-n> = |1> (up to phase).
kernels::Mat2 frame_rotation(const Axis &axis);

struct BornProbabilities {
    double p0;
    double p1;
};

BornProbabilities born_probabilities(const StateVector &state, const BinaryObservable &obs);

struct MeasureResult {
    int outcome;
    StateVector state;
};

/// Sample an outcome by the Born rule and project onto its eigenspace.
MeasureResult projective_measure(StateVector state, const BinaryObservable &obs, RngStream &rng);

/// In-place form of projective_measure; returns the outcome.
int measure_in_place(StateVector &state, const BinaryObservable &obs, RngStream &rng);

/// Entangling premeasurement: rotate the target into the observable's frame,
/// CNOT onto `observer`, rotate back.
void premeasure(StateVector &state, const BinaryObservable &obs, std::size_t observer);

} // namespace swapdec
