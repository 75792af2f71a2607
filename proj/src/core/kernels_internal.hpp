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

namespace swapdec::kernels::detail {

void apply_1q_scalar(Complex *amps, std::size_t num_qubits, std::size_t target, const Mat2 &u);
void cnot_scalar(Complex *amps, std::size_t num_qubits, std::size_t control, std::size_t target);
double norm_squared_scalar(const Complex *amps, std::size_t size);
double prob_one_scalar(const Complex *amps, std::size_t num_qubits, std::size_t target);
void collapse_scalar(Complex *amps, std::size_t num_qubits, std::size_t target, int outcome,
                     double scale);

#ifdef SWAPDEC_HAVE_AVX2
void apply_1q_avx2(Complex *amps, std::size_t num_qubits, std::size_t target, const Mat2 &u);
void cnot_avx2(Complex *amps, std::size_t num_qubits, std::size_t control, std::size_t target);
double norm_squared_avx2(const Complex *amps, std::size_t size);
double prob_one_avx2(const Complex *amps, std::size_t num_qubits, std::size_t target);
void collapse_avx2(Complex *amps, std::size_t num_qubits, std::size_t target, int outcome,
                   double scale);
#endif

} // namespace swapdec::kernels::detail
