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

#include "swapdec/serialize.hpp"

#include "swapdec/errors.hpp"

#include <cstdio>
#include <fstream>

namespace swapdec::serialize {

std::string format_double(double value) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", value);
    return buf;
}

void write_decay_csv(std::ostream &out, const DecayResult &result) {
    out << "cycle,fraction_pure,mean_coherence,analytic_pure\n";
    for (const auto &c : result.cycles) {
        out << c.cycle << ',' << format_double(c.fraction_pure) << ','
            << format_double(c.mean_coherence) << ',' << format_double(c.analytic_pure) << '\n';
    }
}

void write_swap_csv(std::ostream &out, const SwapTrace &trace) {
    out << "step,label,negativity_or,negativity_op,separable_or,separable_op\n";
    for (const auto &s : trace.steps) {
        out << s.step << ',' << to_char(s.label) << ',' << format_double(s.negativity_or) << ','
            << format_double(s.negativity_op) << ',' << (s.separable_or ? "true" : "false") << ','
            << (s.separable_op ? "true" : "false") << '\n';
    }
}

void write_lg_csv(std::ostream &out, const std::vector<LgRow> &rows) {
    out << "theta,c21,c32,c31,k_value,k_stderr\n";
    for (const auto &r : rows) {
        out << format_double(r.theta) << ',' << format_double(r.stats.c21) << ','
            << format_double(r.stats.c32) << ',' << format_double(r.stats.c31) << ','
            << format_double(r.stats.k_value) << ',' << format_double(r.stats.k_stderr) << '\n';
    }
}

void write_zeno_csv(std::ostream &out, const ZenoResult &result) {
    out << "trial,outcomes,constant_after_first,survived_initial\n";
    for (std::size_t i = 0; i < result.trials.size(); ++i) {
        const auto &t = result.trials[i];
        out << i << ',';
        for (const int o : t.outcomes) {
            out << o;
        }
        out << ',' << (t.constant ? "true" : "false") << ',' << (t.survived ? "true" : "false")
            << '\n';
    }
}

void write_sieve_csv(std::ostream &out, const SieveReport &report) {
    out << "first,second,first_kind,second_kind,commutator_norm,violation\n";
    for (const auto &c : report.checked) {
        out << c.first << ',' << c.second << ',' << to_string(c.first_kind) << ','
            << to_string(c.second_kind) << ',' << format_double(c.norm) << ','
            << (c.violation ? "true" : "false") << '\n';
    }
}

void ensure_directory(const std::filesystem::path &dir) {
    std::error_code ec;
    std::filesystem::create_directories(dir, ec);
    if (ec || !std::filesystem::is_directory(dir)) {
        throw ValidationError("cannot create output directory '" + dir.string() + "'");
    }
}

void write_file(const std::filesystem::path &path, const std::string &content) {
    std::ofstream out(path, std::ios::binary | std::ios::trunc);
    if (!out) {
        throw ValidationError("cannot write '" + path.string() + "'");
    }
    out << content;
    out.flush();
    if (!out) {
        throw ValidationError("failed writing '" + path.string() + "'");
    }
}

std::string dump_summary(const nlohmann::json &summary) { return summary.dump(2) + "\n"; }

} // namespace swapdec::serialize
