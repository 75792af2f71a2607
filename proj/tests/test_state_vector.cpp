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
#include "swapdec/observable.hpp"
#include "swapdec/state_vector.hpp"

#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

using namespace swapdec;
namespace gates = swapdec::gates;

namespace {

StateVector random_state(std::size_t n, std::mt19937_64 &gen) {
    std::vector<std::string> roles;
    for (std::size_t i = 0; i < n; ++i) {
        roles.push_back("q" + std::to_string(i));
    }
    return StateVector::from_amplitudes(roles, oracle::random_state(n, gen));
}

StateVector bell() {
    StateVector s({"a", "b"});
    s.apply_unitary(0, gates::hadamard());
    s.apply_cnot(0, 1);
    return s;
}

} // namespace

TEST_CASE("apply_single_qubit_unitary examples") {
    const StateVector zero({"q"});
    const StateVector same = apply_single_qubit_unitary(zero, 0, gates::identity());
    CHECK(same.amplitude(0) == Complex{1.0, 0.0});

    const StateVector one = apply_single_qubit_unitary(zero, 0, gates::pauli_x());
    CHECK(one.amplitude(0) == Complex{0.0, 0.0});
    CHECK(one.amplitude(1) == Complex{1.0, 0.0});

    const StateVector plus = apply_single_qubit_unitary(zero, 0, gates::hadamard());
    CHECK(std::abs(plus.amplitude(0) - 0.7071067811865475) < 1e-12);
    CHECK(std::abs(plus.amplitude(1) - 0.7071067811865475) < 1e-12);
}

TEST_CASE("apply_single_qubit_unitary rejects bad input") {
    StateVector s({"q"});
    CHECK_THROWS_AS(s.apply_unitary(0, kernels::Mat2{1.0, 1.0, 0.0, 1.0}), ValidationError);
    CHECK_THROWS_AS(s.apply_unitary(1, gates::identity()), BoundsError);
}

TEST_CASE("apply_cnot examples") {
    const StateVector zz({"c", "t"});
    CHECK(apply_cnot(zz, 0, 1).amplitude(0) == Complex{1.0, 0.0});

    const StateVector b = bell();
    const double h = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(b.amplitude(0) - h) < 1e-12);
    CHECK(std::abs(b.amplitude(3) - h) < 1e-12);
    CHECK(std::abs(b.amplitude(1)) < 1e-15);
    CHECK(std::abs(b.amplitude(2)) < 1e-15);

    std::mt19937_64 gen(5);
    const StateVector r = random_state(3, gen);
    const StateVector twice = apply_cnot(apply_cnot(r, 2, 0), 2, 0);
    CHECK(fidelity(r, twice) > 1.0 - 1e-12);
    for (std::size_t i = 0; i < r.size(); ++i) {
        CHECK(std::abs(r.amplitude(i) - twice.amplitude(i)) < 1e-12);
    }

    StateVector s({"a", "b"});
    CHECK_THROWS_AS(s.apply_cnot(1, 1), ValidationError);
    CHECK_THROWS_AS(s.apply_cnot(0, 2), BoundsError);
}

TEST_CASE("norm preservation under random gate sequences") {
    std::mt19937_64 gen(99);
    std::uniform_real_distribution<double> angle(0.0, 6.3);
    for (int trial = 0; trial < 20; ++trial) {
        const std::size_t n = 1 + static_cast<std::size_t>(trial % 8);
        StateVector s = random_state(n, gen);
        for (int g = 0; g < 30; ++g) {
            const std::size_t t = gen() % n;
            s.apply_unitary(t, gates::bloch(angle(gen), angle(gen)));
            if (n > 1) {
                std::size_t c = gen() % n;
                if (c == t) {
                    c = (c + 1) % n;
                }
                s.apply_cnot(c, t);
            }
        }
        CHECK(std::abs(s.norm() - 1.0) < 1e-10);
    }
}

TEST_CASE("born_probabilities examples") {
    const BinaryObservable z{"Z", ObservableKind::Pointer, "q", Axis::z_axis()};
    const StateVector zero({"q"});
    auto p = born_probabilities(zero, z);
    CHECK(p.p0 == 1.0);
    CHECK(p.p1 == 0.0);

    const StateVector plus = apply_single_qubit_unitary(zero, 0, gates::hadamard());
    p = born_probabilities(plus, z);
    CHECK(p.p0 == doctest::Approx(0.5).epsilon(1e-12));
    CHECK(p.p1 == doctest::Approx(0.5).epsilon(1e-12));

    // cos^2(pi/6) = 3/4 by direct evaluation.
    const StateVector bloch = apply_single_qubit_unitary(zero, 0, gates::bloch(std::numbers::pi / 3, 0.0));
    p = born_probabilities(bloch, z);
    CHECK(std::abs(p.p0 - 0.75) < 1e-12);
    CHECK(std::abs(p.p1 - 0.25) < 1e-12);

    const BinaryObservable missing{"Z", ObservableKind::Pointer, "nope", Axis::z_axis()};
    CHECK_THROWS_AS(born_probabilities(zero, missing), LookupError);
}

TEST_CASE("born probabilities along rotated axes") {
    // |+> along x is the outcome-0 eigenvector; along -x the outcome-1 eigenvector.
    const StateVector plus = apply_single_qubit_unitary(StateVector({"q"}), 0, gates::hadamard());
    const auto px = born_probabilities(plus, {"X", ObservableKind::Pointer, "q", Axis::x_axis()});
    CHECK(std::abs(px.p0 - 1.0) < 1e-12);
    const auto pmx = born_probabilities(plus, {"mX", ObservableKind::Pointer, "q", {-1.0, 0.0, 0.0}});
    CHECK(std::abs(pmx.p1 - 1.0) < 1e-12);

    std::mt19937_64 gen(3);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    for (int i = 0; i < 50; ++i) {
        const StateVector s = random_state(3, gen);
        Axis a{u(gen), u(gen), u(gen)};
        const double n = std::sqrt(a.x * a.x + a.y * a.y + a.z * a.z);
        a = {a.x / n, a.y / n, a.z / n};
        const auto b = born_probabilities(s, {"A", ObservableKind::Pointer, "q1", a});
        CHECK(std::abs(b.p0 + b.p1 - 1.0) < 1e-10);
        CHECK(b.p0 >= 0.0);
        CHECK(b.p1 >= 0.0);
    }
}

TEST_CASE("projective_measure examples") {
    RngStream rng(17);
    const BinaryObservable z{"Z", ObservableKind::Pointer, "a", Axis::z_axis()};

    const StateVector one = apply_single_qubit_unitary(StateVector({"a"}), 0, gates::pauli_x());
    for (int i = 0; i < 20; ++i) {
        const MeasureResult r = projective_measure(one, z, rng);
        CHECK(r.outcome == 1);
        CHECK(std::abs(r.state.amplitude(1) - 1.0) < 1e-12);
    }

    // Bell state, first qubit reads 0 -> |00>.
    bool saw_zero = false;
    for (int i = 0; i < 64 && !saw_zero; ++i) {
        const MeasureResult r = projective_measure(bell(), z, rng);
        if (r.outcome == 0) {
            saw_zero = true;
            CHECK(std::abs(r.state.amplitude(0) - 1.0) < 1e-12);
            CHECK(std::abs(r.state.norm() - 1.0) < 1e-10);
        } else {
            CHECK(std::abs(r.state.amplitude(3) - 1.0) < 1e-12);
        }
    }
    CHECK(saw_zero);
}

TEST_CASE("projective_measure frequency on |+> stays within 3 sigma") {
    RngStream rng(2718);
    const StateVector plus = apply_single_qubit_unitary(StateVector({"q"}), 0, gates::hadamard());
    const BinaryObservable z{"Z", ObservableKind::Pointer, "q", Axis::z_axis()};
    int ones = 0;
    const int draws = 10000;
    for (int i = 0; i < draws; ++i) {
        ones += projective_measure(plus, z, rng).outcome;
    }
    CHECK(std::abs(ones / static_cast<double>(draws) - 0.5) <= 0.015);
}

TEST_CASE("measurement idempotence property") {
    std::mt19937_64 gen(8);
    std::uniform_real_distribution<double> u(-1.0, 1.0);
    RngStream rng(8);
    for (int i = 0; i < 200; ++i) {
        StateVector s = random_state(1 + i % 4, gen);
        Axis a{u(gen), u(gen), u(gen)};
        const double n = std::sqrt(a.x * a.x + a.y * a.y + a.z * a.z);
        a = {a.x / n, a.y / n, a.z / n};
        const BinaryObservable obs{"A", ObservableKind::Pointer, "q0", a};
        const int first = measure_in_place(s, obs, rng);
        CHECK(std::abs(s.norm() - 1.0) < 1e-10);
        const auto p = born_probabilities(s, obs);
        CHECK((first == 0 ? p.p0 : p.p1) > 1.0 - 1e-10);
        CHECK(measure_in_place(s, obs, rng) == first);
    }
}

TEST_CASE("collapse of a numerically empty branch is a numerical error") {
    StateVector s({"q"});
    CHECK_THROWS_AS(s.collapse(0, 1), NumericalError);
}

TEST_CASE("extend_with_fresh_qubit examples") {
    const StateVector one = apply_single_qubit_unitary(StateVector({"a"}), 0, gates::pauli_x());
    const StateVector ext = extend_with_fresh_qubit(one, "b");
    CHECK(ext.num_qubits() == 2);
    CHECK(std::abs(ext.amplitude(1) - 1.0) < 1e-15);
    CHECK(ext.position("b") == 1);

    const StateVector b = extend_with_fresh_qubit(bell(), "c");
    const std::vector<std::size_t> a0{0};
    const std::vector<std::size_t> a1{1};
    CHECK(std::abs(negativity(b, a0, a1) - 0.5) < 1e-10);

    std::mt19937_64 gen(4);
    for (int i = 0; i < 10; ++i) {
        const StateVector e = extend_with_fresh_qubit(random_state(4, gen), "x");
        CHECK(std::abs(e.norm() - 1.0) < 1e-12);
    }
}

TEST_CASE("qubit cap") {
    std::vector<std::string> roles;
    for (std::size_t i = 0; i < StateVector::kMaxQubits; ++i) {
        roles.push_back("q" + std::to_string(i));
    }
    StateVector full(roles);
    CHECK_THROWS_AS(full.extend("extra"), ResourceError);
    roles.push_back("q20");
    CHECK_THROWS_AS(StateVector{roles}, ResourceError);
}

TEST_CASE("labels are a bijection") {
    CHECK_THROWS_AS(StateVector({"a", "a"}), ValidationError);
    StateVector s({"a", "b", "c"});
    for (std::size_t i = 0; i < s.num_qubits(); ++i) {
        CHECK(s.position(s.role(i)) == i);
    }
    CHECK_THROWS_AS(s.extend("b"), ValidationError);
}

TEST_CASE("release removes a |0> qubit and relabels") {
    StateVector s({"a", "b", "c"});
    s.apply_unitary(0, gates::hadamard());
    s.apply_cnot(0, 2);
    s.release("b");
    CHECK(s.num_qubits() == 2);
    CHECK(s.position("c") == 1);
    const double h = 1.0 / std::sqrt(2.0);
    CHECK(std::abs(s.amplitude(0) - h) < 1e-12);
    CHECK(std::abs(s.amplitude(3) - h) < 1e-12);

    StateVector t = bell();
    CHECK_THROWS_AS(t.release("a"), ValidationError);
}
