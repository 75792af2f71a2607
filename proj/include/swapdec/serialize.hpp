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

#include "swapdec/analysis.hpp"
#include "swapdec/dynamics.hpp"

#include <json.hpp>

#include <filesystem>
#include <ostream>
#include <string>
#include <vector>

namespace swapdec::serialize {

/// %.17g rendering used for every floating-point CSV cell.
std::string format_double(double value);

/// Fixed CSV schemas. Comma separated, header row, LF line endings.
void write_decay_csv(std::ostream &out, const DecayResult &result);
void write_swap_csv(std::ostream &out, const SwapTrace &trace);

struct LgRow {
    double theta;
    LGStats stats;
};
void write_lg_csv(std::ostream &out, const std::vector<LgRow> &rows);
void write_zeno_csv(std::ostream &out, const ZenoResult &result);
void write_sieve_csv(std::ostream &out, const SieveReport &report);

/// Creates `dir` if needed; ValidationError when it cannot be written.
void ensure_directory(const std::filesystem::path &dir);
/// Writes `content` to `path` in binary mode; ValidationError on failure.
void write_file(const std::filesystem::path &path, const std::string &content);

/// Summary JSON with sorted keys and 2-space indentation, newline terminated.
std::string dump_summary(const nlohmann::json &summary);

} // namespace swapdec::serialize
