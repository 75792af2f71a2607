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

#include "swapdec/observable.hpp"

#include "swapdec/errors.hpp"
#include "swapdec/gates.hpp"

#include <algorithm>
#include <cmath>

namespace swapdec {

std::string_view to_string(ObservableKind kind) {
    return kind == ObservableKind::Reference ? "reference" : "pointer";
}

ObservableKind parse_kind(std::string_view text) {
    if (text == "reference" || text == "R") {
        return ObservableKind::Reference;
    }
    if (text == "pointer" || text == "P") {
        return ObservableKind::Pointer;
    }
    throw ValidationError("unknown observable kind '" + std::string(text) +
                          "' (expected reference or pointer)");
}

void BinaryObservable::validate() const {
    const double n = std::sqrt(axis.x * axis.x + axis.y * axis.y + axis.z * axis.z);
    if (std::abs(n - 1.0) > Axis::kUnitTolerance) {
        throw ValidationError("axis of observable '" + id + "' is not a unit vector");
    }
}

kernels::Mat2 spectral_operator(const Axis &axis) {
    return {axis.z, Complex{axis.x, -axis.y}, Complex{axis.x, axis.y}, -axis.z};
}

kernels::Mat2 outcome_projector(const Axis &axis) {
    const kernels::Mat2 s = spectral_operator(axis);
    return {0.5 * (1.0 - s.m00), -0.5 * s.m01, -0.5 * s.m10, 0.5 * (1.0 - s.m11)};
}

kernels::Mat2 frame_rotation(const Axis &axis) {
    const double theta = std::acos(std::clamp(axis.z, -1.0, 1.0));
    const double phi = std::atan2(axis.y, axis.x);
    return gates::adjoint(gates::bloch(theta, phi));
}

namespace {

bool is_z(const Axis &axis) { return axis == Axis::z_axis(); }

} // namespace

BornProbabilities born_probabilities(const StateVector &state, const BinaryObservable &obs) {
    obs.validate();
    const std::size_t q = state.position(obs.target);
    double p1 = 0.0;
    if (is_z(obs.axis)) {
        p1 = state.prob_one(q);
    } else {
        StateVector rotated = state;
        rotated.apply_unitary(q, frame_rotation(obs.axis));
        p1 = rotated.prob_one(q);
    }
    return {1.0 - p1, p1};
}

int measure_in_place(StateVector &state, const BinaryObservable &obs, RngStream &rng) {
    obs.validate();
    const std::size_t q = state.position(obs.target);
    const bool rotate = !is_z(obs.axis);
    const kernels::Mat2 v = frame_rotation(obs.axis);
    if (rotate) {
        state.apply_unitary(q, v);
    }
    const double p1 = state.prob_one(q);
    const double p0 = 1.0 - p1;
    if (p0 < StateVector::kDegenerateProbability && p1 < StateVector::kDegenerateProbability) {
        throw NumericalError("both measurement branches are numerically empty");
    }
    const int outcome = rng.uniform() < p1 ? 1 : 0;
    state.collapse(q, outcome);
    if (rotate) {
        state.apply_unitary(q, gates::adjoint(v));
    }
    return outcome;
}

MeasureResult projective_measure(StateVector state, const BinaryObservable &obs, RngStream &rng) {
    const int outcome = measure_in_place(state, obs, rng);
    return {outcome, std::move(state)};
}

void premeasure(StateVector &state, const BinaryObservable &obs, std::size_t observer) {
    obs.validate();
    const std::size_t q = state.position(obs.target);
    if (is_z(obs.axis)) {
        state.apply_cnot(q, observer);
        return;
    }
    const kernels::Mat2 v = frame_rotation(obs.axis);
    state.apply_unitary(q, v);
    state.apply_cnot(q, observer);
    state.apply_unitary(q, gates::adjoint(v));
}

} // namespace swapdec
