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

#include <immintrin.h>

// Two complex doubles per __m256d: [re0, im0, re1, im1].

namespace swapdec::kernels::detail {

namespace {

inline double *as_doubles(Complex *p) { return reinterpret_cast<double *>(p); }
inline const double *as_doubles(const Complex *p) { return reinterpret_cast<const double *>(p); }

/// Broadcast one complex scalar into both lanes.
inline __m256d splat(Complex c) { return _mm256_setr_pd(c.real(), c.imag(), c.real(), c.imag()); }

/// Lane-wise complex product.
inline __m256d cmul(__m256d v, __m256d c) {
    const __m256d c_re = _mm256_movedup_pd(c);
    const __m256d c_im = _mm256_permute_pd(c, 0b1111);
    const __m256d v_swap = _mm256_permute_pd(v, 0b0101);
    return _mm256_fmaddsub_pd(v, c_re, _mm256_mul_pd(v_swap, c_im));
}

inline double hsum(__m256d v) {
    const __m128d lo = _mm256_castpd256_pd128(v);
    const __m128d hi = _mm256_extractf128_pd(v, 1);
    const __m128d s = _mm_add_pd(lo, hi);
    return _mm_cvtsd_f64(_mm_add_sd(s, _mm_unpackhi_pd(s, s)));
}

} // namespace

void apply_1q_avx2(Complex *amps, std::size_t num_qubits, std::size_t target, const Mat2 &u) {
    const std::size_t size = std::size_t{1} << num_qubits;
    double *data = as_doubles(amps);
    if (target == 0) {
        // Both members of a pair share one register.
        const __m256d col0 = _mm256_setr_pd(u.m00.real(), u.m00.imag(), u.m10.real(), u.m10.imag());
        const __m256d col1 = _mm256_setr_pd(u.m01.real(), u.m01.imag(), u.m11.real(), u.m11.imag());
        for (std::size_t i = 0; i < size; i += 2) {
            const __m256d v = _mm256_loadu_pd(data + 2 * i);
            const __m256d a0 = _mm256_permute2f128_pd(v, v, 0x00);
            const __m256d a1 = _mm256_permute2f128_pd(v, v, 0x11);
            _mm256_storeu_pd(data + 2 * i, _mm256_add_pd(cmul(a0, col0), cmul(a1, col1)));
        }
        return;
    }
    const std::size_t stride = std::size_t{1} << target;
    const __m256d u00 = splat(u.m00);
    const __m256d u01 = splat(u.m01);
    const __m256d u10 = splat(u.m10);
    const __m256d u11 = splat(u.m11);
    for (std::size_t base = 0; base < size; base += 2 * stride) {
        for (std::size_t j = 0; j < stride; j += 2) {
            double *p0 = data + 2 * (base + j);
            double *p1 = data + 2 * (base + j + stride);
            const __m256d a0 = _mm256_loadu_pd(p0);
            const __m256d a1 = _mm256_loadu_pd(p1);
            _mm256_storeu_pd(p0, _mm256_add_pd(cmul(a0, u00), cmul(a1, u01)));
            _mm256_storeu_pd(p1, _mm256_add_pd(cmul(a0, u10), cmul(a1, u11)));
        }
    }
}

void cnot_avx2(Complex *amps, std::size_t num_qubits, std::size_t control, std::size_t target) {
    if (control == 0 || target == 0) {
        cnot_scalar(amps, num_qubits, control, target);
        return;
    }
    const std::size_t size = std::size_t{1} << num_qubits;
    const std::size_t cmask = std::size_t{1} << control;
    const std::size_t tmask = std::size_t{1} << target;
    double *data = as_doubles(amps);
    for (std::size_t i = 0; i < size; i += 2) {
        if ((i & cmask) != 0 && (i & tmask) == 0) {
            double *p0 = data + 2 * i;
            double *p1 = data + 2 * (i | tmask);
            const __m256d a0 = _mm256_loadu_pd(p0);
            const __m256d a1 = _mm256_loadu_pd(p1);
            _mm256_storeu_pd(p0, a1);
            _mm256_storeu_pd(p1, a0);
        }
    }
}

double norm_squared_avx2(const Complex *amps, std::size_t size) {
    const double *data = as_doubles(amps);
    const std::size_t doubles = 2 * size;
    __m256d acc0 = _mm256_setzero_pd();
    __m256d acc1 = _mm256_setzero_pd();
    std::size_t k = 0;
    for (; k + 8 <= doubles; k += 8) {
        const __m256d v0 = _mm256_loadu_pd(data + k);
        const __m256d v1 = _mm256_loadu_pd(data + k + 4);
        acc0 = _mm256_fmadd_pd(v0, v0, acc0);
        acc1 = _mm256_fmadd_pd(v1, v1, acc1);
    }
    double sum = hsum(_mm256_add_pd(acc0, acc1));
    for (; k < doubles; ++k) {
        sum += data[k] * data[k];
    }
    return sum;
}

double prob_one_avx2(const Complex *amps, std::size_t num_qubits, std::size_t target) {
    const std::size_t size = std::size_t{1} << num_qubits;
    const double *data = as_doubles(amps);
    __m256d acc = _mm256_setzero_pd();
    if (target == 0) {
        const __m256d zero = _mm256_setzero_pd();
        for (std::size_t i = 0; i < size; i += 2) {
            const __m256d v = _mm256_loadu_pd(data + 2 * i);
            acc = _mm256_add_pd(acc, _mm256_blend_pd(zero, _mm256_mul_pd(v, v), 0b1100));
        }
        return hsum(acc);
    }
    const std::size_t stride = std::size_t{1} << target;
    for (std::size_t base = stride; base < size; base += 2 * stride) {
        for (std::size_t j = 0; j < stride; j += 2) {
            const __m256d v = _mm256_loadu_pd(data + 2 * (base + j));
            acc = _mm256_fmadd_pd(v, v, acc);
        }
    }
    return hsum(acc);
}

void collapse_avx2(Complex *amps, std::size_t num_qubits, std::size_t target, int outcome,
                   double scale) {
    const std::size_t size = std::size_t{1} << num_qubits;
    double *data = as_doubles(amps);
    if (target == 0) {
        const __m256d factor = outcome != 0 ? _mm256_setr_pd(0.0, 0.0, scale, scale)
                                            : _mm256_setr_pd(scale, scale, 0.0, 0.0);
        for (std::size_t i = 0; i < size; i += 2) {
            double *p = data + 2 * i;
            _mm256_storeu_pd(p, _mm256_mul_pd(_mm256_loadu_pd(p), factor));
        }
        return;
    }
    const std::size_t stride = std::size_t{1} << target;
    const __m256d factor = _mm256_set1_pd(scale);
    const __m256d zero = _mm256_setzero_pd();
    const std::size_t kept_offset = outcome != 0 ? stride : 0;
    const std::size_t dropped_offset = outcome != 0 ? 0 : stride;
    for (std::size_t base = 0; base < size; base += 2 * stride) {
        for (std::size_t j = 0; j < stride; j += 2) {
            double *kept = data + 2 * (base + kept_offset + j);
            _mm256_storeu_pd(kept, _mm256_mul_pd(_mm256_loadu_pd(kept), factor));
            _mm256_storeu_pd(data + 2 * (base + dropped_offset + j), zero);
        }
    }
}

} // namespace swapdec::kernels::detail
