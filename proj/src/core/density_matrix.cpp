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

#include "swapdec/density_matrix.hpp"

#include "swapdec/errors.hpp"

#include <Eigen/Eigenvalues>

#include <algorithm>
#include <bit>
#include <cmath>
#include <set>

namespace swapdec {

namespace {

Eigen::VectorXd hermitian_eigenvalues(const Eigen::MatrixXcd &m) {
    // Symmetrize first so round-off asymmetry cannot leak into the spectrum.
    const Eigen::MatrixXcd h = 0.5 * (m + m.adjoint());
    Eigen::SelfAdjointEigenSolver<Eigen::MatrixXcd> solver(h, Eigen::EigenvaluesOnly);
    if (solver.info() != Eigen::Success) {
        throw NumericalError("eigenvalue decomposition did not converge");
    }
    return solver.eigenvalues();
}

} // namespace

DensityMatrix::DensityMatrix(Eigen::MatrixXcd entries) : m_(std::move(entries)) {
    const auto n = m_.rows();
    if (n == 0 || n != m_.cols() || !std::has_single_bit(static_cast<std::size_t>(n))) {
        throw ValidationError("density matrix must be square with power-of-two dimension");
    }
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > kTolerance) {
        throw ValidationError("density matrix is not Hermitian");
    }
    if (std::abs(m_.trace() - Complex{1.0, 0.0}) > kTolerance) {
        throw ValidationError("density matrix trace is not 1");
    }
    if (n <= 64) {
        check_invariants();
    }
}

std::size_t DensityMatrix::num_qubits() const noexcept {
    return static_cast<std::size_t>(std::countr_zero(dim()));
}

void DensityMatrix::check_invariants() const {
    if ((m_ - m_.adjoint()).cwiseAbs().maxCoeff() > kTolerance) {
        throw ValidationError("density matrix is not Hermitian");
    }
    if (std::abs(m_.trace() - Complex{1.0, 0.0}) > kTolerance) {
        throw ValidationError("density matrix trace is not 1");
    }
    if (hermitian_eigenvalues(m_).minCoeff() < -kTolerance) {
        throw ValidationError("density matrix has a negative eigenvalue");
    }
}

DensityMatrix partial_trace(const StateVector &state, std::span<const std::size_t> keep) {
    if (keep.empty()) {
        throw ValidationError("partial trace needs at least one kept qubit");
    }
    if (keep.size() > DensityMatrix::kMaxKeptQubits) {
        throw ResourceError("reduced state on " + std::to_string(keep.size()) +
                            " qubits exceeds the cap of " +
                            std::to_string(DensityMatrix::kMaxKeptQubits));
    }
    const std::size_t n = state.num_qubits();
    std::set<std::size_t> kept_set;
    for (const std::size_t q : keep) {
        if (q >= n) {
            throw BoundsError("kept qubit " + std::to_string(q) + " out of range");
        }
        if (!kept_set.insert(q).second) {
            throw ValidationError("kept qubits must be distinct");
        }
    }
    std::vector<std::size_t> traced;
    for (std::size_t q = 0; q < n; ++q) {
        if (kept_set.count(q) == 0) {
            traced.push_back(q);
        }
    }

    // Reshape |psi> into a (kept x traced) matrix Psi; rho = Psi Psi^dagger.
    const std::size_t kept_dim = std::size_t{1} << keep.size();
    const std::size_t traced_dim = std::size_t{1} << traced.size();
    const auto amps = state.amplitudes();
    Eigen::MatrixXcd psi(static_cast<Eigen::Index>(kept_dim), static_cast<Eigen::Index>(traced_dim));
    for (std::size_t i = 0; i < amps.size(); ++i) {
        std::size_t row = 0;
        for (std::size_t k = 0; k < keep.size(); ++k) {
            row |= ((i >> keep[k]) & 1U) << k;
        }
        std::size_t col = 0;
        for (std::size_t k = 0; k < traced.size(); ++k) {
            col |= ((i >> traced[k]) & 1U) << k;
        }
        psi(static_cast<Eigen::Index>(row), static_cast<Eigen::Index>(col)) = amps[i];
    }
    Eigen::MatrixXcd rho = psi * psi.adjoint();
    // Absorb round-off so the Hermitian check is exact.
    rho = 0.5 * (rho + rho.adjoint()).eval();
    return DensityMatrix(std::move(rho));
}

double purity(const DensityMatrix &rho) {
    // tr(rho^2) = sum |rho_ij|^2 for Hermitian rho.
    return rho.entries().cwiseAbs2().sum();
}

double coherence(const DensityMatrix &rho) {
    if (rho.dim() != 2) {
        throw ValidationError("coherence is defined for single-qubit reduced states");
    }
    return std::abs(rho(0, 1));
}

Eigen::MatrixXcd partial_transpose(const Eigen::MatrixXcd &rho, std::span<const std::size_t> bits) {
    std::size_t mask = 0;
    for (const std::size_t b : bits) {
        mask |= std::size_t{1} << b;
    }
    const auto dim = static_cast<std::size_t>(rho.rows());
    Eigen::MatrixXcd out(rho.rows(), rho.cols());
    for (std::size_t r = 0; r < dim; ++r) {
        for (std::size_t c = 0; c < dim; ++c) {
            // Exchange the transposed subsystem's bits between row and column.
            const std::size_t r2 = (r & ~mask) | (c & mask);
            const std::size_t c2 = (c & ~mask) | (r & mask);
            out(static_cast<Eigen::Index>(r), static_cast<Eigen::Index>(c)) =
                rho(static_cast<Eigen::Index>(r2), static_cast<Eigen::Index>(c2));
        }
    }
    return out;
}

double negativity(const StateVector &state, std::span<const std::size_t> a,
                  std::span<const std::size_t> b) {
    if (a.empty() || b.empty()) {
        throw ValidationError("negativity needs two nonempty parties");
    }
    for (const std::size_t q : a) {
        if (std::find(b.begin(), b.end(), q) != b.end()) {
            throw ValidationError("negativity partitions overlap on qubit " + std::to_string(q));
        }
    }
    std::vector<std::size_t> keep(a.begin(), a.end());
    keep.insert(keep.end(), b.begin(), b.end());
    const DensityMatrix rho = partial_trace(state, keep);

    std::vector<std::size_t> b_bits(b.size());
    for (std::size_t k = 0; k < b.size(); ++k) {
        b_bits[k] = a.size() + k;
    }
    const Eigen::VectorXd eig = hermitian_eigenvalues(partial_transpose(rho.entries(), b_bits));
    double sum = 0.0;
    for (Eigen::Index i = 0; i < eig.size(); ++i) {
        if (eig(i) < 0.0) {
            sum -= eig(i);
        }
    }
    return sum;
}

} // namespace swapdec
