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

#include "swapdec/state_vector.hpp"

#include "swapdec/errors.hpp"
#include "swapdec/gates.hpp"

#include <algorithm>
#include <cmath>
#include <set>

namespace swapdec {

namespace {

void check_roles(const std::vector<std::string> &roles) {
    if (roles.empty()) {
        throw ValidationError("a register needs at least one qubit");
    }
    if (roles.size() > StateVector::kMaxQubits) {
        throw ResourceError("register of " + std::to_string(roles.size()) +
                            " qubits exceeds the cap of " +
                            std::to_string(StateVector::kMaxQubits));
    }
    std::set<std::string> seen;
    for (const auto &r : roles) {
        if (!seen.insert(r).second) {
            throw ValidationError("duplicate qubit role '" + r + "'");
        }
    }
}

} // namespace

StateVector::StateVector(std::vector<std::string> roles) : roles_(std::move(roles)) {
    check_roles(roles_);
    amps_.assign(std::size_t{1} << roles_.size(), Complex{0.0, 0.0});
    amps_[0] = 1.0;
}

StateVector::StateVector(std::vector<std::string> roles, std::vector<Complex> amps)
    : roles_(std::move(roles)), amps_(std::move(amps)) {}

StateVector StateVector::from_amplitudes(std::vector<std::string> roles,
                                         std::vector<Complex> amplitudes) {
    check_roles(roles);
    if (amplitudes.size() != (std::size_t{1} << roles.size())) {
        throw ValidationError("expected " + std::to_string(std::size_t{1} << roles.size()) +
                              " amplitudes, got " + std::to_string(amplitudes.size()));
    }
    StateVector s(std::move(roles), std::move(amplitudes));
    if (std::abs(s.norm() - 1.0) > kNormTolerance) {
        throw ValidationError("amplitudes are not normalized");
    }
    return s;
}

Complex StateVector::amplitude(std::size_t index) const {
    if (index >= amps_.size()) {
        throw BoundsError("amplitude index out of range");
    }
    return amps_[index];
}

bool StateVector::has_role(const std::string &role) const {
    return std::find(roles_.begin(), roles_.end(), role) != roles_.end();
}

std::size_t StateVector::position(const std::string &role) const {
    const auto it = std::find(roles_.begin(), roles_.end(), role);
    if (it == roles_.end()) {
        throw LookupError("no qubit with role '" + role + "'");
    }
    return static_cast<std::size_t>(it - roles_.begin());
}

const std::string &StateVector::role(std::size_t position) const {
    check_position(position);
    return roles_[position];
}

void StateVector::check_position(std::size_t position) const {
    if (position >= roles_.size()) {
        throw BoundsError("qubit position " + std::to_string(position) +
                          " out of range for a " + std::to_string(roles_.size()) +
                          "-qubit register");
    }
}

void StateVector::apply_unitary(std::size_t target, const kernels::Mat2 &u) {
    check_position(target);
    if (gates::unitarity_error(u) > kUnitaryTolerance) {
        throw ValidationError("matrix is not unitary");
    }
    kernels::active().apply_1q(amps_.data(), num_qubits(), target, u);
}

void StateVector::apply_cnot(std::size_t control, std::size_t target) {
    check_position(control);
    check_position(target);
    if (control == target) {
        throw ValidationError("CNOT control and target must differ");
    }
    kernels::active().cnot(amps_.data(), num_qubits(), control, target);
}

double StateVector::prob_one(std::size_t target) const {
    check_position(target);
    return std::clamp(kernels::active().prob_one(amps_.data(), num_qubits(), target), 0.0, 1.0);
}

void StateVector::collapse(std::size_t target, int outcome) {
    check_position(target);
    if (outcome != 0 && outcome != 1) {
        throw ValidationError("outcome must be 0 or 1");
    }
    const double p1 = prob_one(target);
    const double p = outcome == 1 ? p1 : 1.0 - p1;
    if (p < kDegenerateProbability) {
        throw NumericalError("cannot project onto an outcome of probability " + std::to_string(p));
    }
    kernels::active().collapse(amps_.data(), num_qubits(), target, outcome, 1.0 / std::sqrt(p));
}

std::size_t StateVector::extend(const std::string &role) {
    if (num_qubits() >= kMaxQubits) {
        throw ResourceError("cannot allocate qubit '" + role + "': register already holds " +
                            std::to_string(kMaxQubits) + " qubits (the cap)");
    }
    if (has_role(role)) {
        throw ValidationError("duplicate qubit role '" + role + "'");
    }
    amps_.resize(amps_.size() * 2, Complex{0.0, 0.0});
    roles_.push_back(role);
    return roles_.size() - 1;
}

void StateVector::release(const std::string &role, double tolerance) {
    const std::size_t q = position(role);
    if (num_qubits() == 1) {
        throw ValidationError("cannot release the last qubit of a register");
    }
    if (prob_one(q) > tolerance) {
        throw ValidationError("qubit '" + role + "' is not in |0> and cannot be released");
    }
    const std::size_t low_mask = (std::size_t{1} << q) - 1;
    std::vector<Complex> next(amps_.size() / 2);
    for (std::size_t i = 0; i < next.size(); ++i) {
        const std::size_t full = (i & low_mask) | ((i & ~low_mask) << 1);
        next[i] = amps_[full];
    }
    amps_ = std::move(next);
    roles_.erase(roles_.begin() + static_cast<std::ptrdiff_t>(q));
    // Drop the residual weight of the released branch.
    const double n = norm();
    for (auto &a : amps_) {
        a /= n;
    }
}

double StateVector::norm() const {
    return std::sqrt(kernels::active().norm_squared(amps_.data(), amps_.size()));
}

StateVector apply_single_qubit_unitary(StateVector state, std::size_t target,
                                       const kernels::Mat2 &u) {
    state.apply_unitary(target, u);
    return state;
}

StateVector apply_cnot(StateVector state, std::size_t control, std::size_t target) {
    state.apply_cnot(control, target);
    return state;
}

StateVector extend_with_fresh_qubit(StateVector state, const std::string &role) {
    state.extend(role);
    return state;
}

double fidelity(const StateVector &a, const StateVector &b) {
    if (a.size() != b.size()) {
        throw ValidationError("fidelity needs registers of equal size");
    }
    Complex overlap{0.0, 0.0};
    const auto x = a.amplitudes();
    const auto y = b.amplitudes();
    for (std::size_t i = 0; i < x.size(); ++i) {
        overlap += std::conj(x[i]) * y[i];
    }
    return std::norm(overlap);
}

} // namespace swapdec
