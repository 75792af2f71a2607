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

#include <complex>
#include <cstddef>
#include <span>
#include <string>
#include <vector>

namespace swapdec {

using Complex = std::complex<double>;

/**
 * Pure joint state of a qubit register.
 *
 * Amplitudes are a flat dense array indexed by bitstring with qubit 0 as the
 * least significant bit. Every qubit carries a logical role label (observer,
 * reference, pointer, environment ...); labels are unique, so the label table
 * is a bijection onto the physical positions.
 */
class StateVector {
  public:
    static constexpr std::size_t kMaxQubits = 20;
    static constexpr double kNormTolerance = 1e-10;
    static constexpr double kUnitaryTolerance = 1e-12;
    /// Branches below this probability cannot be renormalized.
    static constexpr double kDegenerateProbability = 1e-15;

    /// All qubits in |0>.
    explicit StateVector(std::vector<std::string> roles);

    /// Validates size (2^roles) and unit norm.
    static StateVector from_amplitudes(std::vector<std::string> roles,
                                       std::vector<Complex> amplitudes);

    [[nodiscard]] std::size_t num_qubits() const noexcept { return roles_.size(); }
    [[nodiscard]] std::size_t size() const noexcept { return amps_.size(); }
    [[nodiscard]] std::span<const Complex> amplitudes() const noexcept { return amps_; }
    [[nodiscard]] Complex amplitude(std::size_t index) const;

    [[nodiscard]] const std::vector<std::string> &roles() const noexcept { return roles_; }
    [[nodiscard]] bool has_role(const std::string &role) const;
    /// Physical position of a role; LookupError if absent.
    [[nodiscard]] std::size_t position(const std::string &role) const;
    [[nodiscard]] const std::string &role(std::size_t position) const;

    void apply_unitary(std::size_t target, const kernels::Mat2 &u);
    void apply_cnot(std::size_t control, std::size_t target);

    /// Probability that qubit `target` reads 1 in the computational basis.
    [[nodiscard]] double prob_one(std::size_t target) const;
    /// Project qubit `target` onto |outcome> and renormalize.
    void collapse(std::size_t target, int outcome);

    /// Append a new most-significant qubit in |0>; returns its position.
    std::size_t extend(const std::string &role);
    /// Remove a qubit that is in |0> (probability of 1 below `tolerance`).
    void release(const std::string &role, double tolerance = 1e-12);

    [[nodiscard]] double norm() const;

  private:
    StateVector(std::vector<std::string> roles, std::vector<Complex> amps);
    void check_position(std::size_t position) const;

    std::vector<std::string> roles_;
    std::vector<Complex> amps_;
};

// Value-returning forms of the engine operations.

StateVector apply_single_qubit_unitary(StateVector state, std::size_t target,
                                       const kernels::Mat2 &u);
StateVector apply_cnot(StateVector state, std::size_t control, std::size_t target);
StateVector extend_with_fresh_qubit(StateVector state, const std::string &role);

/// |<a|b>|^2; registers must have equal size.
double fidelity(const StateVector &a, const StateVector &b);

} // namespace swapdec
