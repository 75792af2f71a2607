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

#include "swapdec/observer.hpp"

#include "swapdec/errors.hpp"
#include "swapdec/gates.hpp"

#include <Eigen/Dense>

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

namespace swapdec {

ObservableCatalog::ObservableCatalog(std::vector<BinaryObservable> entries) {
    for (auto &e : entries) {
        add(std::move(e));
    }
}

void ObservableCatalog::add(BinaryObservable obs) {
    if (obs.id.empty()) {
        throw ValidationError("observable id must not be empty");
    }
    if (contains(obs.id)) {
        throw ValidationError("duplicate observable id '" + obs.id + "'");
    }
    obs.validate();
    entries_.push_back(std::move(obs));
}

std::size_t ObservableCatalog::reference_count() const noexcept {
    return static_cast<std::size_t>(std::count_if(entries_.begin(), entries_.end(), [](const auto &e) {
        return e.kind == ObservableKind::Reference;
    }));
}

std::size_t ObservableCatalog::pointer_count() const noexcept {
    return entries_.size() - reference_count();
}

const BinaryObservable &ObservableCatalog::at(std::size_t index) const {
    if (index >= entries_.size()) {
        throw BoundsError("observable index out of range");
    }
    return entries_[index];
}

bool ObservableCatalog::contains(const std::string &id) const {
    return std::any_of(entries_.begin(), entries_.end(), [&](const auto &e) { return e.id == id; });
}

std::size_t ObservableCatalog::index_of(const std::string &id) const {
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (entries_[i].id == id) {
            return i;
        }
    }
    throw LookupError("unknown observable id '" + id + "'");
}

const BinaryObservable &ObservableCatalog::find(const std::string &id) const {
    return entries_[index_of(id)];
}

void ReferenceSpec::validate(const ObservableCatalog &catalog) const {
    for (const auto &[id, bit] : expected) {
        if (catalog.find(id).kind != ObservableKind::Reference) {
            throw ValidationError("reference spec key '" + id + "' is not a reference observable");
        }
        if (bit != 0 && bit != 1) {
            throw ValidationError("expected outcome for '" + id + "' must be 0 or 1");
        }
    }
}

Schedule Schedule::uniform(std::size_t observables, std::size_t ticks) {
    if (observables == 0) {
        throw ValidationError("schedule needs at least one observable");
    }
    Schedule s;
    s.rows.assign(ticks, std::vector<double>(observables, 1.0 / static_cast<double>(observables)));
    return s;
}

Schedule Schedule::round_robin(std::size_t observables) {
    if (observables == 0) {
        throw ValidationError("schedule needs at least one observable");
    }
    Schedule s;
    s.cyclic = true;
    s.rows.assign(observables, std::vector<double>(observables, 0.0));
    for (std::size_t k = 0; k < observables; ++k) {
        s.rows[k][k] = 1.0;
    }
    return s;
}

void Schedule::validate(std::size_t observables) const {
    if (rows.empty()) {
        throw ValidationError("schedule has no rows");
    }
    if (!(dt > 0.0)) {
        throw ValidationError("schedule dt must be positive");
    }
    for (std::size_t t = 0; t < rows.size(); ++t) {
        const auto &r = rows[t];
        if (r.size() != observables) {
            throw ValidationError("schedule row " + std::to_string(t) + " has " +
                                  std::to_string(r.size()) + " entries, expected " +
                                  std::to_string(observables));
        }
        double sum = 0.0;
        for (const double a : r) {
            if (!(a >= 0.0)) {
                throw ValidationError("schedule row " + std::to_string(t) + " has a negative entry");
            }
            sum += a;
        }
        if (std::abs(sum - 1.0) > kRowTolerance) {
            throw ValidationError("schedule row " + std::to_string(t) + " sums to " +
                                  std::to_string(sum) + ", not 1");
        }
    }
}

const std::vector<double> &Schedule::row(std::uint64_t t) const {
    if (rows.empty()) {
        throw ValidationError("schedule has no rows");
    }
    if (cyclic) {
        return rows[t % rows.size()];
    }
    if (t >= rows.size()) {
        throw BoundsError("tick " + std::to_string(t) + " is beyond the schedule's " +
                          std::to_string(rows.size()) + " rows");
    }
    return rows[t];
}

std::size_t next_observable(const Schedule &schedule, std::uint64_t t, RngStream &rng) {
    const auto &r = schedule.row(t);
    double sum = 0.0;
    for (const double a : r) {
        if (!(a >= 0.0)) {
            throw ValidationError("schedule row " + std::to_string(t) + " has a negative entry");
        }
        sum += a;
    }
    if (std::abs(sum - 1.0) > Schedule::kRowTolerance) {
        throw ValidationError("schedule row " + std::to_string(t) + " is not normalized");
    }
    const double u = rng.uniform();
    double cumulative = 0.0;
    std::size_t last_positive = 0;
    for (std::size_t k = 0; k < r.size(); ++k) {
        if (r[k] > 0.0) {
            cumulative += r[k];
            last_positive = k;
            if (u < cumulative) {
                return k;
            }
        }
    }
    // u fell in the rounding gap below 1.
    return last_positive;
}

void MemoryTape::append(MemoryRecord record) {
    if (!records_.empty() && record.t < records_.back().t) {
        throw ValidationError("memory records must be appended in nondecreasing tick order");
    }
    if (record.outcome != 0 && record.outcome != 1) {
        throw ValidationError("memory record outcome must be 0 or 1");
    }
    records_.push_back(std::move(record));
}

void MemoryTape::write_csv(std::ostream &out) const {
    out << "t,observable_id,kind,outcome\n";
    for (const auto &r : records_) {
        out << r.t << ',' << r.observable_id << ','
            << (r.kind == ObservableKind::Reference ? 'R' : 'P') << ',' << r.outcome << '\n';
    }
}

DissipationLedger::DissipationLedger(double efficiency, double temperature, Units units, double dt)
    : c_(efficiency), temperature_(temperature), units_(units), dt_(dt) {
    // Allow the literal ln 2 written with fewer digits.
    if (!(efficiency >= std::log(2.0) - 1e-15)) {
        throw ValidationError("efficiency factor c must be >= ln 2");
    }
    if (!(temperature > 0.0)) {
        throw ValidationError("temperature must be positive");
    }
    if (!(dt > 0.0)) {
        throw ValidationError("dt must be positive");
    }
}

double DissipationLedger::boltzmann() const noexcept {
    return units_ == Units::Physical ? kBoltzmann : 1.0;
}

double DissipationLedger::energy_per_observation() const noexcept {
    const double t = units_ == Units::Physical ? temperature_ : 1.0;
    return c_ * boltzmann() * t;
}

double DissipationLedger::total_energy() const noexcept {
    return static_cast<double>(observations_) * energy_per_observation();
}

double DissipationLedger::total_action() const noexcept { return total_energy() * dt_; }

std::optional<MemoryRecord> perform_measurement(StateVector &state, const BinaryObservable &obs,
                                                std::size_t observer, MeasurementMode mode,
                                                MemoryTape &tape, DissipationLedger &ledger,
                                                RngStream &rng, std::uint64_t t) {
    if (observer >= state.num_qubits()) {
        throw LookupError("observer qubit " + std::to_string(observer) + " is not allocated");
    }
    if (state.position(obs.target) == observer) {
        throw ValidationError("observable '" + obs.id + "' targets the observer qubit itself");
    }
    premeasure(state, obs, observer);
    if (mode == MeasurementMode::Unitary) {
        return std::nullopt;
    }
    const double p1 = state.prob_one(observer);
    const int outcome = rng.uniform() < p1 ? 1 : 0;
    state.collapse(observer, outcome);
    if (outcome == 1) {
        state.apply_unitary(observer, gates::pauli_x());
    }
    MemoryRecord record{t, obs.id, outcome, obs.kind};
    tape.append(record);
    ledger.record_observation();
    return record;
}

std::string_view to_string(Identification status) {
    switch (status) {
    case Identification::Identified:
        return "identified";
    case Identification::NotIdentified:
        return "not_identified";
    case Identification::Incomplete:
        return "incomplete";
    }
    return "incomplete";
}

Identification identify_system(const MemoryTape &tape, const ReferenceSpec &spec, TickWindow window) {
    std::map<std::string, int> latest;
    for (const auto &r : tape.records()) {
        if (r.t < window.begin || r.t > window.end) {
            continue;
        }
        if (spec.expected.count(r.observable_id) != 0) {
            latest[r.observable_id] = r.outcome;
        }
    }
    bool mismatch = false;
    for (const auto &[id, bit] : spec.expected) {
        const auto it = latest.find(id);
        if (it == latest.end()) {
            return Identification::Incomplete;
        }
        mismatch = mismatch || it->second != bit;
    }
    return mismatch ? Identification::NotIdentified : Identification::Identified;
}

namespace {

Eigen::Matrix2cd to_eigen(const kernels::Mat2 &m) {
    Eigen::Matrix2cd out;
    out << m.m00, m.m01, m.m10, m.m11;
    return out;
}

/// Spectral operator of `obs` on the joint register spanned by `targets`
/// (targets[k] is bit k, so it is the rightmost Kronecker factor for k = 0).
Eigen::MatrixXcd embed(const BinaryObservable &obs, const std::vector<std::string> &targets) {
    Eigen::MatrixXcd op = Eigen::MatrixXcd::Identity(1, 1);
    for (const auto &t : targets) {
        const Eigen::Matrix2cd factor =
            t == obs.target ? to_eigen(spectral_operator(obs.axis)) : Eigen::Matrix2cd::Identity();
        Eigen::MatrixXcd next(op.rows() * 2, op.cols() * 2);
        for (Eigen::Index i = 0; i < 2; ++i) {
            for (Eigen::Index j = 0; j < 2; ++j) {
                next.block(i * op.rows(), j * op.cols(), op.rows(), op.cols()) = factor(i, j) * op;
            }
        }
        op = std::move(next);
    }
    return op;
}

} // namespace

std::vector<CommutatorCheck> SieveReport::violations() const {
    std::vector<CommutatorCheck> out;
    std::copy_if(checked.begin(), checked.end(), std::back_inserter(out),
                 [](const auto &c) { return c.violation; });
    return out;
}

bool SieveReport::passed() const {
    return std::none_of(checked.begin(), checked.end(), [](const auto &c) { return c.violation; });
}

SieveReport verify_predictability_sieve(const ObservableCatalog &catalog) {
    constexpr double kCommutatorTolerance = 1e-10;
    SieveReport report;
    const auto &e = catalog.entries();
    for (std::size_t i = 0; i < e.size(); ++i) {
        for (std::size_t j = i + 1; j < e.size(); ++j) {
            if (e[i].kind == ObservableKind::Pointer && e[j].kind == ObservableKind::Pointer) {
                continue;
            }
            std::vector<std::string> targets{e[i].target};
            if (e[j].target != e[i].target) {
                targets.push_back(e[j].target);
            }
            const Eigen::MatrixXcd a = embed(e[i], targets);
            const Eigen::MatrixXcd b = embed(e[j], targets);
            const double norm = (a * b - b * a).norm();
            report.checked.push_back(
                {e[i].id, e[j].id, e[i].kind, e[j].kind, norm, norm > kCommutatorTolerance});
        }
    }
    return report;
}

std::vector<ObservableKind> classify_coarse_grained(const MemoryTape &tape) {
    std::vector<ObservableKind> out;
    out.reserve(tape.size());
    for (const auto &r : tape.records()) {
        out.push_back(r.kind);
    }
    return out;
}

std::string coarse_grained_string(const std::vector<ObservableKind> &labels) {
    std::string out;
    out.reserve(labels.size());
    for (const auto k : labels) {
        out.push_back(k == ObservableKind::Reference ? 'R' : 'P');
    }
    return out;
}

} // namespace swapdec
