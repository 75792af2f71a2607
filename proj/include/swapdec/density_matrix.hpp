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

#include "swapdec/state_vector.hpp"

#include <Eigen/Dense>

#include <cstddef>
#include <span>
#include <vector>

namespace swapdec {

/// Reduced (mixed) state of a sub-register. Bit k of a row/column index is
/// the k-th kept qubit.
class DensityMatrix {
  public:
    static constexpr double kTolerance = 1e-10;
    /// Largest sub-register a reduced state may span.
    static constexpr std::size_t kMaxKeptQubits = 12;

    /// Validates hermiticity and unit trace (and positivity for dim <= 64).
    explicit DensityMatrix(Eigen::MatrixXcd entries);

    [[nodiscard]] std::size_t dim() const noexcept { return static_cast<std::size_t>(m_.rows()); }
    [[nodiscard]] std::size_t num_qubits() const noexcept;
    [[nodiscard]] const Eigen::MatrixXcd &entries() const noexcept { return m_; }
    [[nodiscard]] Complex operator()(std::size_t row, std::size_t col) const {
        return m_(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col));
    }

    /// Full invariant check including the eigenvalue bound; O(dim^3).
    void check_invariants() const;

  private:
    Eigen::MatrixXcd m_;
};

/// Reduced state on `keep` (distinct positions; keep[k] becomes bit k).
DensityMatrix partial_trace(const StateVector &state, std::span<const std::size_t> keep);

/// tr(rho^2)
double purity(const DensityMatrix &rho);

/// |rho_01| of a single-qubit reduced state.
double coherence(const DensityMatrix &rho);

/// Transpose the qubits at bit positions `bits` of `rho`'s index.
Eigen::MatrixXcd partial_transpose(const Eigen::MatrixXcd &rho, std::span<const std::size_t> bits);

/// Sum of |negative eigenvalues| of the partial transpose (over `b`) of the
/// reduced state on a ∪ b. Qubits outside a ∪ b are traced out first.
double negativity(const StateVector &state, std::span<const std::size_t> a,
                  std::span<const std::size_t> b);

} // namespace swapdec
