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

#include <algorithm>
#include <atomic>
#include <cstdint>
#include <exception>
#include <mutex>
#include <thread>
#include <vector>

namespace swapdec::detail {

inline unsigned resolve_threads(unsigned requested) {
    if (requested == 0) {
        requested = std::max(1U, std::thread::hardware_concurrency());
    }
    return requested;
}

/// Runs body(i) for i in [0, count) on up to `threads` workers. If any call
/// throws, the exception from the lowest index is rethrown, so failures do
/// not depend on scheduling.
template <typename Body>
void parallel_for(std::uint64_t count, unsigned threads, Body &&body) {
    threads = static_cast<unsigned>(
        std::min<std::uint64_t>(resolve_threads(threads), std::max<std::uint64_t>(count, 1)));
    std::atomic<std::uint64_t> next{0};
    std::mutex error_mutex;
    std::uint64_t error_index = UINT64_MAX;
    std::exception_ptr error;

    auto worker = [&] {
        for (std::uint64_t i = next.fetch_add(1); i < count; i = next.fetch_add(1)) {
            try {
                body(i);
            } catch (...) {
                const std::lock_guard<std::mutex> lock(error_mutex);
                if (i < error_index) {
                    error_index = i;
                    error = std::current_exception();
                }
            }
        }
    };

    if (threads <= 1) {
        worker();
    } else {
        std::vector<std::thread> pool;
        pool.reserve(threads);
        for (unsigned t = 0; t < threads; ++t) {
            pool.emplace_back(worker);
        }
        for (auto &t : pool) {
            t.join();
        }
    }
    if (error) {
        std::rethrow_exception(error);
    }
}

} // namespace swapdec::detail
