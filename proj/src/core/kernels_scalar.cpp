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

#include "kernels_internal.hpp"

#include <utility>

namespace swapdec::kernels::detail {

void apply_1q_scalar(Complex *amps, std::size_t num_qubits, std::size_t target, const Mat2 &u) {
    const std::size_t size = std::size_t{1} << num_qubits;
    const std::size_t stride = std::size_t{1} << target;
    for (std::size_t base = 0; base < size; base += 2 * stride) {
        for (std::size_t j = 0; j < stride; ++j) {
            Complex &a0 = amps[base + j];
            Complex &a1 = amps[base + j + stride];
            const Complex v0 = a0;
            const Complex v1 = a1;
            a0 = u.m00 * v0 + u.m01 * v1;
            a1 = u.m10 * v0 + u.m11 * v1;
        }
    }
}

void cnot_scalar(Complex *amps, std::size_t num_qubits, std::size_t control, std::size_t target) {
    const std::size_t size = std::size_t{1} << num_qubits;
    const std::size_t cmask = std::size_t{1} << control;
    const std::size_t tmask = std::size_t{1} << target;
    for (std::size_t i = 0; i < size; ++i) {
        if ((i & cmask) != 0 && (i & tmask) == 0) {
            std::swap(amps[i], amps[i | tmask]);
        }
    }
}

double norm_squared_scalar(const Complex *amps, std::size_t size) {
    double sum = 0.0;
    for (std::size_t i = 0; i < size; ++i) {
        sum += std::norm(amps[i]);
    }
    return sum;
}

double prob_one_scalar(const Complex *amps, std::size_t num_qubits, std::size_t target) {
    const std::size_t size = std::size_t{1} << num_qubits;
    const std::size_t stride = std::size_t{1} << target;
    double sum = 0.0;
    for (std::size_t base = stride; base < size; base += 2 * stride) {
        for (std::size_t j = 0; j < stride; ++j) {
            sum += std::norm(amps[base + j]);
        }
    }
    return sum;
}

void collapse_scalar(Complex *amps, std::size_t num_qubits, std::size_t target, int outcome,
                     double scale) {
    const std::size_t size = std::size_t{1} << num_qubits;
    const std::size_t mask = std::size_t{1} << target;
    const std::size_t keep = outcome != 0 ? mask : 0;
    for (std::size_t i = 0; i < size; ++i) {
        if ((i & mask) == keep) {
            amps[i] *= scale;
        } else {
            amps[i] = Complex{0.0, 0.0};
        }
    }
}

} // namespace swapdec::kernels::detail
