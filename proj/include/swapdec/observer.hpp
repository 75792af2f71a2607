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

#include "swapdec/observable.hpp"
#include "swapdec/rng.hpp"
#include "swapdec/state_vector.hpp"

#include <cstdint>
#include <map>
#include <optional>
#include <ostream>
#include <string>
#include <vector>

namespace swapdec {

/// Ordered set of reference and pointer observables with unique ids.
class ObservableCatalog {
  public:
    ObservableCatalog() = default;
    explicit ObservableCatalog(std::vector<BinaryObservable> entries);

    void add(BinaryObservable obs);

    [[nodiscard]] const std::vector<BinaryObservable> &entries() const noexcept { return entries_; }
    [[nodiscard]] std::size_t size() const noexcept { return entries_.size(); }
    [[nodiscard]] std::size_t reference_count() const noexcept;
    [[nodiscard]] std::size_t pointer_count() const noexcept;
    [[nodiscard]] const BinaryObservable &at(std::size_t index) const;
    /// LookupError if absent.
    [[nodiscard]] const BinaryObservable &find(const std::string &id) const;
    [[nodiscard]] bool contains(const std::string &id) const;
    [[nodiscard]] std::size_t index_of(const std::string &id) const;

  private:
    std::vector<BinaryObservable> entries_;
};

/// Expected outcome bit per reference observable id.
struct ReferenceSpec {
    std::map<std::string, int> expected;

    /// Every key must name a Reference observable; bits must be 0/1.
    void validate(const ObservableCatalog &catalog) const;
};

/**
 * Per-tick deployment probabilities alpha_k(t) over a catalog of N
 * observables. Row t holds the distribution used at tick t; a cyclic schedule
 * repeats its rows with period rows.size().
 */
struct Schedule {
    static constexpr double kRowTolerance = 1e-12;

    std::vector<std::vector<double>> rows;
    double dt = 1.0;
    bool cyclic = false;

    bool operator==(const Schedule &) const = default;

    static Schedule uniform(std::size_t observables, std::size_t ticks);
    /// One-hot rows selecting k = t mod N.
    static Schedule round_robin(std::size_t observables);

    void validate(std::size_t observables) const;
    [[nodiscard]] std::size_t width() const noexcept { return rows.empty() ? 0 : rows.front().size(); }
    /// BoundsError when t is outside a non-cyclic schedule.
    [[nodiscard]] const std::vector<double> &row(std::uint64_t t) const;
};

/// Index of the observable deployed at tick t, drawn from row t.
std::size_t next_observable(const Schedule &schedule, std::uint64_t t, RngStream &rng);

struct MemoryRecord {
    std::uint64_t t = 0;
    std::string observable_id;
    int outcome = 0;
    ObservableKind kind = ObservableKind::Pointer;

    bool operator==(const MemoryRecord &) const = default;
};

/// Append-only, time-ordered outcome memory.
class MemoryTape {
  public:
    void append(MemoryRecord record);
    [[nodiscard]] const std::vector<MemoryRecord> &records() const noexcept { return records_; }
    [[nodiscard]] std::size_t size() const noexcept { return records_.size(); }
    [[nodiscard]] bool empty() const noexcept { return records_.empty(); }

    /// Columns t, observable_id, kind, outcome; kind written as R or P.
    void write_csv(std::ostream &out) const;

  private:
    std::vector<MemoryRecord> records_;
};

enum class Units { Physical, Natural };

/// Landauer cost bookkeeping: each recorded observation dissipates c k_B T.
class DissipationLedger {
  public:
    /// Exact SI value, J/K.
    static constexpr double kBoltzmann = 1.380649e-23;

    /// c must be at least ln 2; temperature must be positive.
    DissipationLedger(double efficiency = 0.6931471805599453, double temperature = 300.0,
                      Units units = Units::Physical, double dt = 1.0);

    void record_observation() noexcept { ++observations_; }

    [[nodiscard]] double efficiency() const noexcept { return c_; }
    [[nodiscard]] double temperature() const noexcept { return temperature_; }
    [[nodiscard]] Units units() const noexcept { return units_; }
    [[nodiscard]] std::uint64_t observation_count() const noexcept { return observations_; }
    /// k_B (physical) or 1 (natural).
    [[nodiscard]] double boltzmann() const noexcept;
    [[nodiscard]] double energy_per_observation() const noexcept;
    [[nodiscard]] double total_energy() const noexcept;
    /// Energy integrated over each observation window (x dt).
    [[nodiscard]] double total_action() const noexcept;

  private:
    double c_;
    double temperature_;
    Units units_;
    double dt_;
    std::uint64_t observations_ = 0;
};

enum class MeasurementMode { Unitary, Recorded };

/**
 * One observation by the observer qubit at `observer`.
 *
 * Unitary mode applies the entangling premeasurement only: nothing is
 * written to the tape and the ledger is untouched. Recorded mode follows the
 * premeasurement with a projective readout of the observer qubit, appends the
 * outcome to the tape, charges the ledger one observation and resets the
 * observer qubit to |0> for reuse.
 */
std::optional<MemoryRecord> perform_measurement(StateVector &state, const BinaryObservable &obs,
                                                std::size_t observer, MeasurementMode mode,
                                                MemoryTape &tape, DissipationLedger &ledger,
                                                RngStream &rng, std::uint64_t t = 0);

enum class Identification { Identified, NotIdentified, Incomplete };

std::string_view to_string(Identification status);

/// Inclusive tick range.
struct TickWindow {
    std::uint64_t begin = 0;
    std::uint64_t end = UINT64_MAX;

    bool operator==(const TickWindow &) const = default;
};

/// Latest record per reference id inside the window decides the match.
Identification identify_system(const MemoryTape &tape, const ReferenceSpec &spec,
                               TickWindow window = {});

struct CommutatorCheck {
    std::string first;
    std::string second;
    ObservableKind first_kind;
    ObservableKind second_kind;
    /// Frobenius norm of [A, B] for the +-1 spectral forms A = n.sigma.
    double norm;
    bool violation;
};

struct SieveReport {
    std::vector<CommutatorCheck> checked;

    [[nodiscard]] std::vector<CommutatorCheck> violations() const;
    [[nodiscard]] bool passed() const;
};

/// Checks every Reference-Reference and Reference-Pointer pair; pointer
/// pairs are exempt. Pairs with commutator norm above 1e-10 are violations.
SieveReport verify_predictability_sieve(const ObservableCatalog &catalog);

std::vector<ObservableKind> classify_coarse_grained(const MemoryTape &tape);
/// "RRP..." rendering of a coarse-grained sequence.
std::string coarse_grained_string(const std::vector<ObservableKind> &labels);

} // namespace swapdec
