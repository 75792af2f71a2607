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

#include <atomic>
#include <cstdlib>
#include <string_view>

namespace swapdec::kernels {

namespace {

constexpr KernelTable kScalar{Backend::Scalar,
                              "scalar",
                              &detail::apply_1q_scalar,
                              &detail::cnot_scalar,
                              &detail::norm_squared_scalar,
                              &detail::prob_one_scalar,
                              &detail::collapse_scalar};

#ifdef SWAPDEC_HAVE_AVX2
constexpr KernelTable kAvx2{Backend::Avx2,
                            "avx2",
                            &detail::apply_1q_avx2,
                            &detail::cnot_avx2,
                            &detail::norm_squared_avx2,
                            &detail::prob_one_avx2,
                            &detail::collapse_avx2};
#endif

const KernelTable *initial_table() {
    if (const char *env = std::getenv("SWAPDEC_KERNELS"); env != nullptr) {
        if (std::string_view(env) == "scalar") {
            return &kScalar;
        }
    }
    if (avx2_available()) {
        return avx2_table();
    }
    return &kScalar;
}

std::atomic<const KernelTable *> &current() {
    static std::atomic<const KernelTable *> table{initial_table()};
    return table;
}

} // namespace

const KernelTable &scalar_table() { return kScalar; }

const KernelTable *avx2_table() {
#ifdef SWAPDEC_HAVE_AVX2
    return &kAvx2;
#else
    return nullptr;
#endif
}

bool avx2_available() {
#if defined(SWAPDEC_HAVE_AVX2) && (defined(__GNUC__) || defined(__clang__))
    static const bool supported = __builtin_cpu_supports("avx2") && __builtin_cpu_supports("fma");
    return supported;
#else
    return false;
#endif
}

const KernelTable &active() { return *current().load(std::memory_order_acquire); }

bool select(Backend backend) {
    if (backend == Backend::Scalar) {
        current().store(&kScalar, std::memory_order_release);
        return true;
    }
    if (!avx2_available()) {
        return false;
    }
    current().store(avx2_table(), std::memory_order_release);
    return true;
}

} // namespace swapdec::kernels
