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

#include <cstdint>
#include <random>

namespace swapdec {

/// Seeded random stream. Streams for distinct `(seed, index)` pairs are
/// independent; the construction only uses generators whose output the
/// standard pins down exactly, so sequences are identical on every platform.
class RngStream {
  public:
    explicit RngStream(std::uint64_t seed, std::uint64_t index = 0);

    /// Uniform double in [0, 1) built from the top 53 bits of one draw.
    double uniform();
    bool bernoulli(double p) { return uniform() < p; }
    /// Uniform integer in [0, n).
    std::uint64_t below(std::uint64_t n);
    std::uint64_t next() { return engine_(); }

    /// Independent child stream, e.g. one per trial.
    [[nodiscard]] RngStream split(std::uint64_t index) const {
        return RngStream(seed_, (index_ + 1) * 0x9E3779B97F4A7C15ULL ^ index);
    }

  private:
    std::uint64_t seed_;
    std::uint64_t index_;
    std::mt19937_64 engine_;
};

} // namespace swapdec
