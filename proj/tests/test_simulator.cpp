// Copyright 2026 The qprep Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include <cstring>

#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace qprep;
using Catch::Matchers::WithinAbs;

namespace {

RegisterLayout bare(std::size_t qubits) {
    RegisterLayout layout;
    layout.data = qubits;
    return layout;
}

} // namespace

TEST_CASE("zero state", "[simulator]") {
    const StateVector one = StateVector::zero(1);
    REQUIRE(one.dimension() == 2);
    REQUIRE(one[0] == Amplitude{1.0, 0.0});
    REQUIRE(one[1] == Amplitude{0.0, 0.0});

    const StateVector three = StateVector::zero(3);
    REQUIRE(three.dimension() == 8);
    REQUIRE(three[0] == Amplitude{1.0, 0.0});
    REQUIRE_THAT(three.norm(), WithinAbs(1.0, 1e-15));

    REQUIRE_THROWS_AS(StateVector::zero(0), std::invalid_argument);
    REQUIRE_THROWS_AS(StateVector::zero(25), std::invalid_argument);
}

TEST_CASE("basic gate semantics", "[simulator]") {
    SECTION("H on |0>") {
        Circuit circuit(bare(1));
        circuit.append(Gate::h(0));
        const StateVector state = apply(circuit, StateVector::zero(1));
        const double r = 1.0 / std::sqrt(2.0);
        REQUIRE_THAT(state[0].real(), WithinAbs(r, 1e-15));
        REQUIRE_THAT(state[1].real(), WithinAbs(r, 1e-15));
    }
    SECTION("CCX flips |110> to |111>") {
        Circuit circuit(bare(3));
        circuit.append(Gate::x(0));
        circuit.append(Gate::x(1));
        circuit.append(Gate::ccx(0, 1, 2));
        const StateVector state = apply(circuit, StateVector::zero(3));
        REQUIRE_THAT(state[0b111].real(), WithinAbs(1.0, 1e-15));
    }
    SECTION("gradient ladder for n=2 gives the one-hot state") {
        const StateVector state = apply(build_prepare_gradient(2), StateVector::zero(3));
        REQUIRE_THAT(state[0b100].real(), WithinAbs(1.0 / std::sqrt(2.0), 1e-15));
        REQUIRE_THAT(state[0b010].real(), WithinAbs(0.5, 1e-15));
        REQUIRE_THAT(state[0b001].real(), WithinAbs(0.5, 1e-15));
        REQUIRE_THAT(state[0b000].real(), WithinAbs(0.0, 1e-15));
    }
    SECTION("circuit and state sizes must match") {
        Circuit circuit(bare(2));
        circuit.append(Gate::h(0));
        StateVector state = StateVector::zero(3);
        REQUIRE_THROWS_AS(apply_in_place(circuit, state), std::invalid_argument);
    }
}

TEST_CASE("postselect", "[simulator]") {
    // (|00> + |11>)/sqrt(2)
    Circuit bell(bare(2));
    bell.append(Gate::h(0));
    bell.append(Gate::cx(0, 1));
    const StateVector state = apply(bell, StateVector::zero(2));

    SECTION("constrain first qubit to 0") {
        const PostSelection sel = postselect(state, {{0, 0}});
        REQUIRE_THAT(sel.probability, WithinAbs(0.5, 1e-12));
        REQUIRE(sel.collapsed);
        REQUIRE_THAT((*sel.collapsed)[0b00].real(), WithinAbs(1.0, 1e-12));
    }
    SECTION("empty constraint set keeps the state") {
        const PostSelection sel = postselect(state, {});
        REQUIRE_THAT(sel.probability, WithinAbs(1.0, 1e-12));
        REQUIRE_THAT(fidelity(*sel.collapsed, state), WithinAbs(1.0, 1e-12));
    }
    SECTION("impossible constraint reports zero probability without a state") {
        Circuit x0(bare(2));
        x0.append(Gate::x(0));
        const StateVector s = apply(x0, StateVector::zero(2));
        const PostSelection sel = postselect(s, {{0, 0}});
        REQUIRE(sel.probability == 0.0);
        REQUIRE_FALSE(sel.collapsed);
    }
    SECTION("probabilities over a complete constraint set sum to one") {
        std::mt19937_64 rng(3);
        const Circuit circuit = qprep_test::random_circuit(bare(4), 30, rng);
        const StateVector s = apply(circuit, StateVector::zero(4));
        double total = 0.0;
        for (int b0 = 0; b0 < 2; ++b0) {
            for (int b1 = 0; b1 < 2; ++b1) {
                total += postselect(s, {{0, b0}, {2, b1}}).probability;
            }
        }
        REQUIRE_THAT(total, WithinAbs(1.0, 1e-10));
    }
    SECTION("bad constraints are rejected") {
        REQUIRE_THROWS_AS(postselect(state, {{5, 0}}), std::invalid_argument);
        REQUIRE_THROWS_AS(postselect(state, {{0, 2}}), std::invalid_argument);
    }
}

TEST_CASE("fidelity", "[simulator]") {
    const StateVector a = StateVector::zero(2);
    REQUIRE_THAT(fidelity(a, a), WithinAbs(1.0, 1e-15));

    Circuit x0(bare(2));
    x0.append(Gate::x(0));
    const StateVector b = apply(x0, StateVector::zero(2));
    REQUIRE(fidelity(a, b) == 0.0);
    REQUIRE(fidelity(b, a) == fidelity(a, b));

    // Global phase does not matter.
    StateVector c = a;
    c[0] = Amplitude{-1.0, 0.0};
    REQUIRE_THAT(fidelity(a, c), WithinAbs(1.0, 1e-15));

    REQUIRE_THROWS_AS(fidelity(a, StateVector::zero(3)), std::invalid_argument);
}

TEST_CASE("full unitary", "[simulator]") {
    SECTION("empty circuit is the identity") {
        const UnitaryMatrix u = full_unitary(Circuit(bare(2)));
        for (std::size_t col = 0; col < 4; ++col) {
            for (std::size_t row = 0; row < 4; ++row) {
                REQUIRE(u[col][row] == Amplitude{(row == col) ? 1.0 : 0.0, 0.0});
            }
        }
    }
    SECTION("X is the bit flip") {
        Circuit circuit(bare(1));
        circuit.append(Gate::x(0));
        const UnitaryMatrix u = full_unitary(circuit);
        REQUIRE(u[0][1] == Amplitude{1.0, 0.0});
        REQUIRE(u[1][0] == Amplitude{1.0, 0.0});
        REQUIRE(u[0][0] == Amplitude{0.0, 0.0});
    }
    SECTION("qubit limit") {
        REQUIRE_THROWS_AS(full_unitary(Circuit(bare(11))), std::invalid_argument);
    }
}

TEST_CASE("norm is preserved through long circuits", "[simulator]") {
    std::mt19937_64 rng(17);
    const Circuit circuit = qprep_test::random_circuit(bare(8), 500, rng);
    const StateVector state = apply(circuit, StateVector::zero(8));
    REQUIRE_THAT(state.norm(), WithinAbs(1.0, 1e-10));
}

TEST_CASE("gate application is linear", "[simulator]") {
    std::mt19937_64 rng(29);
    const Circuit circuit = qprep_test::random_circuit(bare(4), 25, rng);
    std::uniform_real_distribution<double> coef(-1.0, 1.0);

    std::vector<Amplitude> a_amps(16), b_amps(16);
    for (std::size_t i = 0; i < 16; ++i) {
        a_amps[i] = Amplitude{coef(rng), coef(rng)};
        b_amps[i] = Amplitude{coef(rng), coef(rng)};
    }
    const Amplitude alpha{coef(rng), coef(rng)};
    const Amplitude beta{coef(rng), coef(rng)};
    std::vector<Amplitude> mix(16);
    for (std::size_t i = 0; i < 16; ++i) {
        mix[i] = alpha * a_amps[i] + beta * b_amps[i];
    }
    const StateVector ua = apply(circuit, StateVector::from_amplitudes(a_amps));
    const StateVector ub = apply(circuit, StateVector::from_amplitudes(b_amps));
    const StateVector umix = apply(circuit, StateVector::from_amplitudes(mix));
    for (std::size_t i = 0; i < 16; ++i) {
        REQUIRE(std::abs(umix[i] - (alpha * ua[i] + beta * ub[i])) < 1e-10);
    }
}

TEST_CASE("apply is bit-reproducible", "[simulator]") {
    std::mt19937_64 rng(31);
    const Circuit circuit = qprep_test::random_circuit(bare(6), 120, rng);
    const StateVector first = apply(circuit, StateVector::zero(6));
    const StateVector second = apply(circuit, StateVector::zero(6));
    REQUIRE(std::memcmp(first.amplitudes().data(), second.amplitudes().data(),
                        first.dimension() * sizeof(Amplitude)) == 0);
}
