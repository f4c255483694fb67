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

#include <catch2/catch_amalgamated.hpp>

#include "test_helpers.hpp"

using namespace qprep;
using qprep_test::random_circuit;

namespace {

RegisterLayout bare(std::size_t qubits) {
    RegisterLayout layout;
    layout.data = qubits;
    return layout;
}

} // namespace

TEST_CASE("append extends the gate list and validates", "[circuit]") {
    Circuit circuit(bare(2));
    REQUIRE(circuit.size() == 0);
    circuit.append(Gate::h(0));
    REQUIRE(circuit.size() == 1);
    REQUIRE(circuit.gates().front().kind == GateKind::H);

    SECTION("out-of-range target") {
        REQUIRE_THROWS_AS(circuit.append(Gate::h(2)), std::invalid_argument);
        REQUIRE_THROWS_AS(circuit.append(Gate::cx(0, 5)), std::invalid_argument);
    }
    SECTION("duplicate control/target indices") {
        Circuit three(bare(3));
        REQUIRE_THROWS_AS(three.append(Gate::ccx(0, 1, 1)), std::invalid_argument);
        REQUIRE_THROWS_AS(three.append(Gate::ccx(2, 2, 0)), std::invalid_argument);
    }
    SECTION("pattern arity") {
        Circuit three(bare(3));
        REQUIRE_THROWS_AS(three.append(Gate::mcx({0, 1}, {1}, 2)), std::invalid_argument);
        REQUIRE_THROWS_AS(three.append(Gate::mcx({0, 1}, {1, 2}, 2)), std::invalid_argument);
        REQUIRE_THROWS_AS(three.append(Gate::mcx({}, {}, 2)), std::invalid_argument);
    }
    SECTION("non-finite rotation angle") {
        REQUIRE_THROWS_AS(circuit.append(Gate::ry(std::nan(""), 0)), std::invalid_argument);
    }
    SECTION("appending never mutates earlier gates") {
        const Gate first = circuit.gates().front();
        circuit.append(Gate::x(1));
        REQUIRE(circuit.gates().front().kind == first.kind);
        REQUIRE(circuit.size() == 2);
    }
}

TEST_CASE("inverse reverses and flips rotations", "[circuit]") {
    Circuit circuit(bare(2));
    circuit.append(Gate::h(0));
    const Circuit inv_h = circuit.inverse();
    REQUIRE(inv_h.size() == 1);
    REQUIRE(inv_h.gates()[0].kind == GateKind::H);

    Circuit two(bare(2));
    two.append(Gate::ry(0.3, 0));
    two.append(Gate::cx(0, 1));
    const Circuit inv = two.inverse();
    REQUIRE(inv.gates()[0].kind == GateKind::CX);
    REQUIRE(inv.gates()[1].kind == GateKind::Ry);
    REQUIRE(inv.gates()[1].angle == -0.3);
}

TEST_CASE("circuit followed by its inverse is the identity", "[circuit]") {
    std::mt19937_64 rng(20260810);
    for (int trial = 0; trial < 4; ++trial) {
        Circuit circuit = random_circuit(bare(4), 20, rng);
        circuit.append(circuit.inverse());
        const UnitaryMatrix u = full_unitary(circuit);
        for (std::size_t col = 0; col < u.size(); ++col) {
            for (std::size_t row = 0; row < u.size(); ++row) {
                const double expected = (row == col) ? 1.0 : 0.0;
                REQUIRE(std::abs(u[col][row] - expected) < 1e-12);
            }
        }
    }
}

TEST_CASE("gate counting", "[circuit]") {
    SECTION("empty circuit counts zero") {
        const GateCounts counts = count(Circuit(bare(3)));
        REQUIRE(counts.toffoli == 0);
        REQUIRE(counts.cnot == 0);
        REQUIRE(counts.single_qubit == 0);
        REQUIRE(counts.total_gates == 0);
    }
    SECTION("modified transduction for n=2 has two Toffolis") {
        const AmplitudeSpec spec({0.25, 0.5}, 2);
        REQUIRE(count(build_transduce_modified(spec)).toffoli == 2);
    }
    SECTION("decomposed standard cascade for n=4") {
        const AmplitudeSpec spec({0.25, 0.5}, 4);
        const GateCounts counts = count(build_transduce_standard(spec, true));
        REQUIRE(counts.toffoli == 8);
        REQUIRE(counts.cnot == 2);
    }
    SECTION("two-control MCX counts as Toffoli, one-control as CNOT") {
        Circuit circuit(bare(4));
        circuit.append(Gate::mcx({0, 1}, {0, 1}, 2));
        circuit.append(Gate::mcx({3}, {0}, 2));
        circuit.append(Gate::mcx({0, 1, 2}, {1, 1, 1}, 3));
        const GateCounts counts = count(circuit);
        REQUIRE(counts.toffoli == 1);
        REQUIRE(counts.cnot == 1);
        REQUIRE(counts.mcx_by_arity.at(3) == 1);
    }
}

TEST_CASE("count distributes over concatenation", "[circuit]") {
    std::mt19937_64 rng(7);
    for (int trial = 0; trial < 6; ++trial) {
        const Circuit a = random_circuit(bare(4), 15, rng);
        const Circuit b = random_circuit(bare(4), 11, rng);
        Circuit both = a;
        both.append(b);
        REQUIRE(count(both) == count(a) + count(b));
    }
}

TEST_CASE("register layout blocks are disjoint and cover the total", "[circuit]") {
    const RegisterLayout layout{.address = 2, .data = 3, .control = 2, .flag = 1, .ancilla = 2};
    REQUIRE(layout.total() == 10);
    std::vector<std::size_t> seen;
    for (std::size_t i = 0; i < layout.address; ++i) seen.push_back(layout.address_qubit(i));
    for (std::size_t i = 0; i < layout.data; ++i) seen.push_back(layout.data_qubit(i));
    for (std::size_t i = 0; i < layout.control; ++i) seen.push_back(layout.control_qubit(i));
    seen.push_back(layout.flag_qubit());
    for (std::size_t i = 0; i < layout.ancilla; ++i) seen.push_back(layout.ancilla_qubit(i));
    for (std::size_t i = 0; i < seen.size(); ++i) {
        REQUIRE(seen[i] == i);
    }
}

TEST_CASE("ancilla register can grow without renumbering", "[circuit]") {
    Circuit circuit(RegisterLayout{.address = 1, .data = 2, .control = 1, .flag = 1});
    circuit.append(Gate::cx(0, 4));
    const Circuit grown = circuit.with_ancillas(3);
    REQUIRE(grown.qubits() == 8);
    REQUIRE(grown.gates()[0].controls[0] == 0);
    REQUIRE(grown.gates()[0].target() == 4);
    REQUIRE_THROWS_AS(grown.with_ancillas(1), std::invalid_argument);
}
