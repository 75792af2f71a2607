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

#include <complex>
#include <cstddef>
#include <string_view>

/// Inner loops over dense amplitude arrays. Amplitudes are interleaved
/// (re, im) doubles indexed by bitstring, qubit 0 the least significant bit.
/// Every kernel exists as a portable scalar reference and, on x86-64, as an
/// AVX2/FMA variant; the variant is chosen once at runtime from CPUID.
namespace swapdec::kernels {

using Complex = std::complex<double>;

/// Row-major 2x2 complex matrix.
struct Mat2 {
    Complex m00, m01, m10, m11;
};

enum class Backend { Scalar, Avx2 };

struct KernelTable {
    Backend backend;
    std::string_view name;

    void (*apply_1q)(Complex *amps, std::size_t num_qubits, std::size_t target, const Mat2 &u);
    void (*cnot)(Complex *amps, std::size_t num_qubits, std::size_t control, std::size_t target);
    double (*norm_squared)(const Complex *amps, std::size_t size);
    /// Sum of |a_i|^2 over indices with bit `target` set.
    double (*prob_one)(const Complex *amps, std::size_t num_qubits, std::size_t target);
    /// Zero amplitudes whose `target` bit differs from `outcome`; scale the rest.
    void (*collapse)(Complex *amps, std::size_t num_qubits, std::size_t target, int outcome,
                     double scale);
};

const KernelTable &scalar_table();

/// nullptr when the AVX2 variants were not compiled in.
const KernelTable *avx2_table();

/// True when the AVX2 variants are compiled in and the CPU reports AVX2+FMA.
bool avx2_available();

/// The table used by StateVector. Defaults to AVX2 when available unless the
/// environment variable SWAPDEC_KERNELS is set to "scalar".
const KernelTable &active();

/// Force a backend; returns false (and changes nothing) if unavailable.
bool select(Backend backend);

} // namespace swapdec::kernels
