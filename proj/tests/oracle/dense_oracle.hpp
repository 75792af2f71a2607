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

// Test-only reference computations. Everything here works on explicit dense
// matrices built from outer products and shares no code with the library's
// reduced-state or eigenvalue routines.

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <random>
#include <vector>

namespace oracle {

using Complex = std::complex<double>;
using Matrix = std::vector<std::vector<Complex>>;

inline Matrix zeros(std::size_t n) { return Matrix(n, std::vector<Complex>(n, Complex{})); }

/// |psi><psi|
inline Matrix outer(const std::vector<Complex> &psi) {
    Matrix m = zeros(psi.size());
    for (std::size_t i = 0; i < psi.size(); ++i) {
        for (std::size_t j = 0; j < psi.size(); ++j) {
            m[i][j] = psi[i] * std::conj(psi[j]);
        }
    }
    return m;
}

/// Trace the full density matrix down to `keep` (keep[k] -> bit k) by
/// summing over every index assignment of the traced qubits.
inline Matrix reduce(const Matrix &full, std::size_t num_qubits, const std::vector<std::size_t> &keep) {
    const std::size_t kd = std::size_t{1} << keep.size();
    Matrix out = zeros(kd);
    const std::size_t dim = std::size_t{1} << num_qubits;
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            bool traced_equal = true;
            for (std::size_t q = 0; q < num_qubits; ++q) {
                if (std::find(keep.begin(), keep.end(), q) != keep.end()) {
                    continue;
                }
                if (((i >> q) & 1U) != ((j >> q) & 1U)) {
                    traced_equal = false;
                    break;
                }
            }
            if (!traced_equal) {
                continue;
            }
            std::size_t a = 0;
            std::size_t b = 0;
            for (std::size_t k = 0; k < keep.size(); ++k) {
                a |= ((i >> keep[k]) & 1U) << k;
                b |= ((j >> keep[k]) & 1U) << k;
            }
            out[a][b] += full[i][j];
        }
    }
    return out;
}

inline double purity(const Matrix &rho) {
    // tr(rho rho) by explicit matrix product.
    Complex tr{};
    for (std::size_t i = 0; i < rho.size(); ++i) {
        for (std::size_t k = 0; k < rho.size(); ++k) {
            tr += rho[i][k] * rho[k][i];
        }
    }
    return tr.real();
}

/// Partial transpose over the qubits at bit positions `bits`.
inline Matrix transpose_bits(const Matrix &rho, const std::vector<std::size_t> &bits) {
    const std::size_t n = rho.size();
    Matrix out = zeros(n);
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            std::size_t i2 = i;
            std::size_t j2 = j;
            for (const std::size_t b : bits) {
                const std::size_t bi = (i >> b) & 1U;
                const std::size_t bj = (j >> b) & 1U;
                i2 = (i2 & ~(std::size_t{1} << b)) | (bj << b);
                j2 = (j2 & ~(std::size_t{1} << b)) | (bi << b);
            }
            out[i][j] = rho[i2][j2];
        }
    }
    return out;
}

/// Eigenvalues of a Hermitian matrix via cyclic Jacobi on the real symmetric
/// embedding [[A, -B], [B, A]], whose spectrum is that of A + iB doubled.
inline std::vector<double> hermitian_eigenvalues(const Matrix &h) {
    const std::size_t n = h.size();
    const std::size_t m = 2 * n;
    std::vector<std::vector<double>> a(m, std::vector<double>(m, 0.0));
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t j = 0; j < n; ++j) {
            const double re = 0.5 * (h[i][j].real() + h[j][i].real());
            const double im = 0.5 * (h[i][j].imag() - h[j][i].imag());
            a[i][j] = re;
            a[i + n][j + n] = re;
            a[i][j + n] = -im;
            a[i + n][j] = im;
        }
    }
    for (int sweep = 0; sweep < 100; ++sweep) {
        double off = 0.0;
        for (std::size_t p = 0; p < m; ++p) {
            for (std::size_t q = p + 1; q < m; ++q) {
                off += a[p][q] * a[p][q];
            }
        }
        if (off < 1e-30) {
            break;
        }
        for (std::size_t p = 0; p < m; ++p) {
            for (std::size_t q = p + 1; q < m; ++q) {
                if (std::abs(a[p][q]) < 1e-300) {
                    continue;
                }
                const double theta = (a[q][q] - a[p][p]) / (2.0 * a[p][q]);
                const double t = (theta >= 0 ? 1.0 : -1.0) /
                                 (std::abs(theta) + std::sqrt(theta * theta + 1.0));
                const double c = 1.0 / std::sqrt(t * t + 1.0);
                const double s = t * c;
                for (std::size_t k = 0; k < m; ++k) {
                    const double akp = a[k][p];
                    const double akq = a[k][q];
                    a[k][p] = c * akp - s * akq;
                    a[k][q] = s * akp + c * akq;
                }
                for (std::size_t k = 0; k < m; ++k) {
                    const double apk = a[p][k];
                    const double aqk = a[q][k];
                    a[p][k] = c * apk - s * aqk;
                    a[q][k] = s * apk + c * aqk;
                }
            }
        }
    }
    std::vector<double> diag(m);
    for (std::size_t i = 0; i < m; ++i) {
        diag[i] = a[i][i];
    }
    std::sort(diag.begin(), diag.end());
    std::vector<double> out;
    for (std::size_t i = 0; i < m; i += 2) {
        out.push_back(0.5 * (diag[i] + diag[i + 1]));
    }
    return out;
}

/// Negativity of the pure state `psi` for parties a and b (others traced).
inline double negativity(const std::vector<Complex> &psi, std::size_t num_qubits,
                         const std::vector<std::size_t> &a, const std::vector<std::size_t> &b) {
    std::vector<std::size_t> keep = a;
    keep.insert(keep.end(), b.begin(), b.end());
    const Matrix rho = reduce(outer(psi), num_qubits, keep);
    std::vector<std::size_t> bits;
    for (std::size_t k = 0; k < b.size(); ++k) {
        bits.push_back(a.size() + k);
    }
    double sum = 0.0;
    for (const double e : hermitian_eigenvalues(transpose_bits(rho, bits))) {
        if (e < 0.0) {
            sum -= e;
        }
    }
    return sum;
}

/// Haar-like random pure state from normalized complex Gaussians.
inline std::vector<Complex> random_state(std::size_t num_qubits, std::mt19937_64 &gen) {
    std::normal_distribution<double> normal(0.0, 1.0);
    std::vector<Complex> psi(std::size_t{1} << num_qubits);
    double norm = 0.0;
    for (auto &c : psi) {
        c = Complex{normal(gen), normal(gen)};
        norm += std::norm(c);
    }
    for (auto &c : psi) {
        c /= std::sqrt(norm);
    }
    return psi;
}

/// Apply a 2x2 matrix to `target` by building the full Kronecker operator.
inline std::vector<Complex> apply_full(const std::vector<Complex> &psi, std::size_t num_qubits,
                                       std::size_t target, const Complex u[2][2]) {
    const std::size_t dim = std::size_t{1} << num_qubits;
    std::vector<Complex> out(dim);
    for (std::size_t i = 0; i < dim; ++i) {
        for (std::size_t j = 0; j < dim; ++j) {
            // Operator element is u[bit_i][bit_j] if all other bits agree.
            if ((i & ~(std::size_t{1} << target)) != (j & ~(std::size_t{1} << target))) {
                continue;
            }
            out[i] += u[(i >> target) & 1U][(j >> target) & 1U] * psi[j];
        }
    }
    return out;
}

/// Binomial 3-sigma half-width for `trials` draws of probability p.
inline double three_sigma(double p, double trials) { return 3.0 * std::sqrt(p * (1.0 - p) / trials); }

} // namespace oracle
