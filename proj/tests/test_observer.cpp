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

#include "oracle/dense_oracle.hpp"

#include "swapdec/density_matrix.hpp"
#include "swapdec/errors.hpp"
#include "swapdec/gates.hpp"
#include "swapdec/observer.hpp"

#include <doctest.h>

#include <cmath>
#include <sstream>

using namespace swapdec;
namespace gates = swapdec::gates;

namespace {

BinaryObservable ref(const std::string &id, const std::string &target, Axis a = Axis::z_axis()) {
    return {id, ObservableKind::Reference, target, a};
}

BinaryObservable ptr(const std::string &id, const std::string &target, Axis a = Axis::z_axis()) {
    return {id, ObservableKind::Pointer, target, a};
}

MemoryRecord rec(std::uint64_t t, const std::string &id, int outcome,
                 ObservableKind kind = ObservableKind::Reference) {
    return {t, id, outcome, kind};
}

} // namespace

TEST_CASE("catalog bookkeeping") {
    ObservableCatalog c;
    c.add(ref("R1", "a"));
    c.add(ref("R2", "b"));
    c.add(ptr("P1", "c"));
    CHECK(c.size() == 3);
    CHECK(c.reference_count() == 2);
    CHECK(c.pointer_count() == 1);
    CHECK(c.reference_count() + c.pointer_count() == c.size());
    CHECK(c.index_of("P1") == 2);
    CHECK(c.contains("R2"));
    CHECK_FALSE(c.contains("R3"));
    CHECK_THROWS_AS((void)c.find("R3"), LookupError);
    CHECK_THROWS_AS(c.add(ptr("R1", "d")), ValidationError);
    CHECK_THROWS_AS(c.add(ptr("bad", "d", {0.5, 0.0, 0.0})), ValidationError);
}

TEST_CASE("reference spec keys must be reference observables") {
    ObservableCatalog c({ref("R1", "a"), ptr("P1", "b")});
    CHECK_NOTHROW(ReferenceSpec{{{"R1", 1}}}.validate(c));
    CHECK_THROWS(ReferenceSpec{{{"P1", 1}}}.validate(c));
    CHECK_THROWS(ReferenceSpec{{{"R9", 0}}}.validate(c));
    CHECK_THROWS(ReferenceSpec{{{"R1", 2}}}.validate(c));
}

TEST_CASE("next_observable with a degenerate row") {
    Schedule s;
    s.rows = {{1.0, 0.0, 0.0}};
    RngStream rng(1);
    for (int i = 0; i < 100; ++i) {
        CHECK(next_observable(s, 0, rng) == 0);
    }
}

TEST_CASE("next_observable uniform frequencies within 3 sigma") {
    const Schedule s = Schedule::uniform(4, 1);
    RngStream rng(2024);
    std::array<int, 4> counts{};
    const int draws = 10000;
    for (int i = 0; i < draws; ++i) {
        ++counts.at(next_observable(s, 0, rng));
    }
    const double band = oracle::three_sigma(0.25, draws);
    for (const int c : counts) {
        CHECK(std::abs(c / static_cast<double>(draws) - 0.25) <= band);
    }
}

TEST_CASE("round-robin schedule cycles deterministically") {
    const Schedule s = Schedule::round_robin(3);
    RngStream rng(5);
    for (std::uint64_t t = 0; t < 30; ++t) {
        CHECK(next_observable(s, t, rng) == t % 3);
    }
}

TEST_CASE("schedule validation") {
    Schedule s;
    s.rows = {{0.5, 0.4}};
    RngStream rng(0);
    CHECK_THROWS_AS(next_observable(s, 0, rng), ValidationError);
    CHECK_THROWS_AS(s.validate(2), ValidationError);
    s.rows = {{1.2, -0.2}};
    CHECK_THROWS_AS(s.validate(2), ValidationError);
    s.rows = {{1.0, 0.0}};
    CHECK_THROWS_AS(s.validate(3), ValidationError);
    CHECK_THROWS((void)s.row(1));
}

TEST_CASE("schedule sampling is reproducible") {
    const Schedule s = Schedule::uniform(5, 50);
    RngStream a(77);
    RngStream b(77);
    for (std::uint64_t t = 0; t < 50; ++t) {
        CHECK(next_observable(s, t, a) == next_observable(s, t, b));
    }
}

TEST_CASE("recorded measurement of an eigenstate") {
    StateVector state({"o", "x"});
    state.apply_unitary(1, gates::pauli_x());
    MemoryTape tape;
    DissipationLedger ledger;
    RngStream rng(3);
    const auto record = perform_measurement(state, ref("R1", "x"), 0, MeasurementMode::Recorded,
                                            tape, ledger, rng, 4);
    REQUIRE(record.has_value());
    CHECK(record->outcome == 1);
    CHECK(record->t == 4);
    CHECK(tape.size() == 1);
    CHECK(ledger.observation_count() == 1);
    CHECK(ledger.total_energy() == doctest::Approx(std::log(2.0) * 1.380649e-23 * 300.0).epsilon(1e-12));
    // Observer is reset for reuse.
    CHECK(state.prob_one(0) < 1e-12);
}

TEST_CASE("unitary measurement leaves a Bell pair and no record") {
    StateVector state({"o", "x"});
    state.apply_unitary(1, gates::hadamard());
    MemoryTape tape;
    DissipationLedger ledger;
    RngStream rng(3);
    const auto record = perform_measurement(state, ptr("P", "x"), 0, MeasurementMode::Unitary, tape,
                                            ledger, rng);
    CHECK_FALSE(record.has_value());
    CHECK(tape.empty());
    CHECK(ledger.observation_count() == 0);
    const std::vector<std::size_t> o{0};
    const std::vector<std::size_t> x{1};
    const std::vector<Complex> amps(state.amplitudes().begin(), state.amplitudes().end());
    CHECK(std::abs(negativity(state, o, x) - 0.5) < 1e-10);
    CHECK(std::abs(oracle::negativity(amps, 2, {0}, {1}) - 0.5) < 1e-10);
}

TEST_CASE("perform_measurement errors") {
    StateVector state({"o", "x"});
    MemoryTape tape;
    DissipationLedger ledger;
    RngStream rng(3);
    CHECK_THROWS_AS(perform_measurement(state, ref("R", "x"), 5, MeasurementMode::Recorded, tape,
                                        ledger, rng),
                    LookupError);
    CHECK_THROWS_AS(perform_measurement(state, ref("R", "y"), 0, MeasurementMode::Recorded, tape,
                                        ledger, rng),
                    LookupError);
}

TEST_CASE("unitary-mode sequences keep the global state pure") {
    StateVector state({"o1", "o2", "a", "b"});
    state.apply_unitary(2, gates::bloch(0.7, 0.3));
    state.apply_unitary(3, gates::hadamard());
    MemoryTape tape;
    DissipationLedger ledger;
    RngStream rng(9);
    perform_measurement(state, ref("R", "a", Axis::x_axis()), 0, MeasurementMode::Unitary, tape,
                        ledger, rng);
    perform_measurement(state, ptr("P", "b"), 1, MeasurementMode::Unitary, tape, ledger, rng);
    const std::vector<std::size_t> all{0, 1, 2, 3};
    CHECK(std::abs(purity(partial_trace(state, all)) - 1.0) < 1e-9);
}

TEST_CASE("dissipation ledger") {
    DissipationLedger ledger;
    for (int i = 0; i < 100; ++i) {
        ledger.record_observation();
    }
    // 100 * ln2 * k_B * 300, evaluated independently.
    const double expected = 100.0 * 0.6931471805599453 * 1.380649e-23 * 300.0;
    CHECK(std::abs(ledger.total_energy() - expected) <= 1e-12 * expected);
    CHECK(std::abs(ledger.total_energy() - 2.8709788850787244e-19) <= 1e-12 * expected);
    CHECK(ledger.total_action() == doctest::Approx(expected));

    CHECK_THROWS_AS(DissipationLedger(0.5), ValidationError);
    CHECK_THROWS_AS(DissipationLedger(1.0, -1.0), ValidationError);

    DissipationLedger natural(1.0, 300.0, Units::Natural);
    natural.record_observation();
    natural.record_observation();
    CHECK(natural.total_energy() == doctest::Approx(2.0));
}

TEST_CASE("ledger energy does not depend on which observables were deployed") {
    auto run = [](std::uint64_t seed, const Schedule &schedule) {
        ObservableCatalog c({ref("R1", "a"), ref("R2", "b"), ptr("P1", "c", Axis::x_axis())});
        StateVector state({"q0", "q1", "q2", "a", "b", "c"});
        state.apply_unitary(state.position("c"), gates::hadamard());
        MemoryTape tape;
        DissipationLedger ledger;
        RngStream rng(seed);
        for (std::uint64_t t = 0; t < 40; ++t) {
            const std::size_t k = next_observable(schedule, t, rng);
            perform_measurement(state, c.at(k), k, MeasurementMode::Recorded, tape, ledger, rng, t);
        }
        return ledger.total_energy();
    };
    const double a = run(1, Schedule::round_robin(3));
    const double b = run(2, Schedule::uniform(3, 40));
    CHECK(a == b);
}

TEST_CASE("identify_system examples") {
    MemoryTape empty;
    CHECK(identify_system(empty, ReferenceSpec{}) == Identification::Identified);

    MemoryTape one;
    one.append(rec(3, "R1", 1));
    CHECK(identify_system(one, ReferenceSpec{{{"R1", 1}}}) == Identification::Identified);
    CHECK(identify_system(one, ReferenceSpec{{{"R1", 1}, {"R2", 0}}}) == Identification::Incomplete);
    CHECK(identify_system(one, ReferenceSpec{{{"R1", 0}}}) == Identification::NotIdentified);

    MemoryTape later;
    later.append(rec(1, "R1", 0));
    later.append(rec(5, "R1", 1));
    CHECK(identify_system(later, ReferenceSpec{{{"R1", 1}}}) == Identification::Identified);
    CHECK(identify_system(later, ReferenceSpec{{{"R1", 1}}}, TickWindow{0, 2}) ==
          Identification::NotIdentified);
    CHECK(identify_system(later, ReferenceSpec{{{"R1", 1}}}, TickWindow{6, 9}) ==
          Identification::Incomplete);
}

TEST_CASE("tape ordering") {
    MemoryTape tape;
    tape.append(rec(2, "R1", 0));
    tape.append(rec(2, "R2", 1));
    CHECK_THROWS_AS(tape.append(rec(1, "R1", 0)), ValidationError);
    CHECK_THROWS_AS(tape.append(rec(3, "R1", 2)), ValidationError);
}

TEST_CASE("tape csv") {
    MemoryTape tape;
    tape.append(rec(0, "R1", 1));
    tape.append(rec(1, "P1", 0, ObservableKind::Pointer));
    std::ostringstream out;
    tape.write_csv(out);
    CHECK(out.str() == "t,observable_id,kind,outcome\n0,R1,R,1\n1,P1,P,0\n");
}

TEST_CASE("sieve: disjoint z observables commute") {
    ObservableCatalog c({ref("R1", "a"), ref("R2", "b"), ptr("P1", "c")});
    const SieveReport report = verify_predictability_sieve(c);
    CHECK(report.passed());
    CHECK(report.checked.size() == 3);
}

TEST_CASE("sieve: Z and X on one qubit violate with norm 2 sqrt 2") {
    ObservableCatalog c({ref("R1", "a"), ptr("P1", "a", Axis::x_axis())});
    const SieveReport report = verify_predictability_sieve(c);
    REQUIRE(report.violations().size() == 1);
    CHECK(std::abs(report.violations().front().norm - 2.0 * std::sqrt(2.0)) < 1e-10);
}

TEST_CASE("sieve: pointer pairs are exempt") {
    ObservableCatalog c({ptr("P1", "a"), ptr("P2", "a", Axis::x_axis())});
    const SieveReport report = verify_predictability_sieve(c);
    CHECK(report.passed());
    CHECK(report.checked.empty());
}

TEST_CASE("sieve: reference pair on one qubit with tilted axes") {
    // [n.s, m.s] = 2i (n x m).s, so the Frobenius norm is 2 sqrt(2) |n x m|.
    const double s = std::sin(0.4);
    ObservableCatalog c({ref("R1", "a"), ref("R2", "a", {s, 0.0, std::cos(0.4)})});
    const SieveReport report = verify_predictability_sieve(c);
    REQUIRE(report.violations().size() == 1);
    CHECK(std::abs(report.violations().front().norm - 2.0 * std::sqrt(2.0) * s) < 1e-10);
}

TEST_CASE("coarse-grained classification") {
    MemoryTape tape;
    tape.append(rec(0, "R1", 0));
    tape.append(rec(1, "P1", 0, ObservableKind::Pointer));
    tape.append(rec(2, "R2", 1));
    CHECK(coarse_grained_string(classify_coarse_grained(tape)) == "RPR");
    CHECK(classify_coarse_grained(MemoryTape{}).empty());

    MemoryTape cycles;
    for (std::uint64_t t = 0; t < 6; ++t) {
        const bool pointer = t % 3 == 2;
        cycles.append(rec(t, pointer ? "P" : "R", 0,
                          pointer ? ObservableKind::Pointer : ObservableKind::Reference));
    }
    CHECK(coarse_grained_string(classify_coarse_grained(cycles)) == "RRPRRP");
}
