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

#include <cmath>

namespace swapdec::gates {

using kernels::Complex;
using kernels::Mat2;

inline Mat2 identity() { return {1.0, 0.0, 0.0, 1.0}; }
inline Mat2 pauli_x() { return {0.0, 1.0, 1.0, 0.0}; }
inline Mat2 pauli_y() { return {0.0, Complex{0.0, -1.0}, Complex{0.0, 1.0}, 0.0}; }
inline Mat2 pauli_z() { return {1.0, 0.0, 0.0, -1.0}; }

inline Mat2 hadamard() {
    const double h = 1.0 / std::sqrt(2.0);
    return {h, h, h, -h};
}

/// exp(-i angle X / 2)
inline Mat2 rx(double angle) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    return {c, Complex{0.0, -s}, Complex{0.0, -s}, c};
}

/// Maps |0> to cos(theta/2)|0> + e^{i phi} sin(theta/2)|1> and |1> to the
/// antipodal Bloch state.
inline Mat2 bloch(double theta, double phi) {
    const double c = std::cos(theta / 2.0);
    const double s = std::sin(theta / 2.0);
    const Complex phase = std::polar(1.0, phi);
    return {c, -s, phase * s, phase * c};
}

inline Mat2 adjoint(const Mat2 &u) {
    return {std::conj(u.m00), std::conj(u.m10), std::conj(u.m01), std::conj(u.m11)};
}

inline Mat2 multiply(const Mat2 &a, const Mat2 &b) {
    return {a.m00 * b.m00 + a.m01 * b.m10, a.m00 * b.m01 + a.m01 * b.m11,
            a.m10 * b.m00 + a.m11 * b.m10, a.m10 * b.m01 + a.m11 * b.m11};
}

/// Largest elementwise deviation of u^dagger u from the identity.
inline double unitarity_error(const Mat2 &u) {
    const Mat2 p = multiply(adjoint(u), u);
    return std::max({std::abs(p.m00 - 1.0), std::abs(p.m01), std::abs(p.m10),
                     std::abs(p.m11 - 1.0)});
}

} // namespace swapdec::gates
