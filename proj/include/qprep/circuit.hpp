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

/**
 * @file
 * Gate-level circuit representation: gates, register layout, circuits,
 * inversion and gate counting.
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <map>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <utility>
#include <vector>

namespace qprep {

enum class GateKind : std::uint8_t {
    X,
    H,
    Ry,   // Ry(theta) = [[cos(theta/2), -sin(theta/2)], [sin(theta/2), cos(theta/2)]]
    CX,
    CZ,
    CH,
    CRy,  // controlled Ry, same target convention as Ry
    CCX,  // Toffoli
    MCX,  // multi-controlled X with per-control required bit values (control-on-0 allowed)
    MCZ,  // multi-controlled Z, same pattern convention
};

inline const char *to_string(GateKind kind) {
    switch (kind) {
    case GateKind::X: return "x";
    case GateKind::H: return "h";
    case GateKind::Ry: return "ry";
    case GateKind::CX: return "cx";
    case GateKind::CZ: return "cz";
    case GateKind::CH: return "ch";
    case GateKind::CRy: return "cry";
    case GateKind::CCX: return "ccx";
    case GateKind::MCX: return "mcx";
    case GateKind::MCZ: return "mcz";
    }
    return "?";
}

/// A single gate. Immutable by convention: build via the factories, never mutate.
struct Gate {
    GateKind kind;
    std::vector<std::size_t> controls;
    std::vector<std::size_t> targets;      // all supported kinds have exactly one target
    std::vector<std::uint8_t> pattern;     // MCX/MCZ only: required value per control
    double angle = 0.0;                    // Ry/CRy only, radians

    static Gate x(std::size_t q) { return {GateKind::X, {}, {q}, {}, 0.0}; }
    static Gate h(std::size_t q) { return {GateKind::H, {}, {q}, {}, 0.0}; }
    static Gate ry(double angle, std::size_t q) { return {GateKind::Ry, {}, {q}, {}, angle}; }
    static Gate cx(std::size_t c, std::size_t t) { return {GateKind::CX, {c}, {t}, {}, 0.0}; }
    static Gate cz(std::size_t c, std::size_t t) { return {GateKind::CZ, {c}, {t}, {}, 0.0}; }
    static Gate ch(std::size_t c, std::size_t t) { return {GateKind::CH, {c}, {t}, {}, 0.0}; }
    static Gate cry(double angle, std::size_t c, std::size_t t) {
        return {GateKind::CRy, {c}, {t}, {}, angle};
    }
    static Gate ccx(std::size_t c0, std::size_t c1, std::size_t t) {
        return {GateKind::CCX, {c0, c1}, {t}, {}, 0.0};
    }
    static Gate mcx(std::vector<std::size_t> controls, std::vector<std::uint8_t> pattern,
                    std::size_t t) {
        return {GateKind::MCX, std::move(controls), {t}, std::move(pattern), 0.0};
    }
    static Gate mcz(std::vector<std::size_t> controls, std::vector<std::uint8_t> pattern,
                    std::size_t t) {
        return {GateKind::MCZ, std::move(controls), {t}, std::move(pattern), 0.0};
    }

    std::size_t target() const { return targets.front(); }

    /// Ry/CRy flip the angle sign; every other supported gate is self-inverse.
    Gate inverse() const {
        Gate g = *this;
        if (kind == GateKind::Ry || kind == GateKind::CRy) {
            g.angle = -angle;
        }
        return g;
    }
};

/// Fixed register order: Address, Data, Control, Flag, Ancilla. Qubit 0 is the
/// most significant bit of the basis-state index, so a basis label reads
/// |address>|data>|control>|flag>|ancilla> left to right.
struct RegisterLayout {
    std::size_t address = 0;
    std::size_t data = 0;
    std::size_t control = 0;
    std::size_t flag = 0;
    std::size_t ancilla = 0;

    std::size_t total() const { return address + data + control + flag + ancilla; }

    std::size_t address_qubit(std::size_t i) const { return i; }
    std::size_t data_qubit(std::size_t i) const { return address + i; }
    std::size_t control_qubit(std::size_t i) const { return address + data + i; }
    std::size_t flag_qubit() const { return address + data + control; }
    std::size_t ancilla_qubit(std::size_t i) const { return address + data + control + flag + i; }

    bool operator==(const RegisterLayout &) const = default;
};

namespace detail {

inline void validate_gate(const Gate &gate, std::size_t total_qubits) {
    std::size_t expected_controls = 0;
    switch (gate.kind) {
    case GateKind::X:
    case GateKind::H:
    case GateKind::Ry:
        expected_controls = 0;
        break;
    case GateKind::CX:
    case GateKind::CZ:
    case GateKind::CH:
    case GateKind::CRy:
        expected_controls = 1;
        break;
    case GateKind::CCX:
        expected_controls = 2;
        break;
    case GateKind::MCX:
    case GateKind::MCZ:
        if (gate.controls.empty()) {
            throw std::invalid_argument("mcx/mcz requires at least one control");
        }
        if (gate.pattern.size() != gate.controls.size()) {
            throw std::invalid_argument("mcx/mcz pattern length must equal control count");
        }
        for (auto bit : gate.pattern) {
            if (bit != 0 && bit != 1) {
                throw std::invalid_argument("mcx/mcz pattern entries must be 0 or 1");
            }
        }
        expected_controls = gate.controls.size();
        break;
    }
    if (gate.controls.size() != expected_controls) {
        throw std::invalid_argument(std::string("wrong control count for gate ") +
                                    to_string(gate.kind));
    }
    if (gate.targets.size() != 1) {
        throw std::invalid_argument("every supported gate has exactly one target");
    }
    if ((gate.kind == GateKind::Ry || gate.kind == GateKind::CRy) && !std::isfinite(gate.angle)) {
        throw std::invalid_argument("ry angle must be finite");
    }
    std::unordered_set<std::size_t> seen;
    for (auto q : gate.controls) {
        if (q >= total_qubits) {
            throw std::invalid_argument("control qubit index " + std::to_string(q) +
                                        " out of range (circuit has " +
                                        std::to_string(total_qubits) + " qubits)");
        }
        if (!seen.insert(q).second) {
            throw std::invalid_argument("duplicate qubit index " + std::to_string(q) + " in gate");
        }
    }
    for (auto q : gate.targets) {
        if (q >= total_qubits) {
            throw std::invalid_argument("target qubit index " + std::to_string(q) +
                                        " out of range (circuit has " +
                                        std::to_string(total_qubits) + " qubits)");
        }
        if (!seen.insert(q).second) {
            throw std::invalid_argument("duplicate qubit index " + std::to_string(q) + " in gate");
        }
    }
}

} // namespace detail

/// Append-only gate list over a fixed register layout. Value type; copies are
/// independent and instances are safe to share across threads once built.
class Circuit {
  public:
    explicit Circuit(RegisterLayout layout) : layout_(layout) {}

    const RegisterLayout &layout() const { return layout_; }
    const std::vector<Gate> &gates() const { return gates_; }
    std::size_t size() const { return gates_.size(); }
    std::size_t qubits() const { return layout_.total(); }

    Circuit &append(Gate gate) {
        detail::validate_gate(gate, layout_.total());
        gates_.push_back(std::move(gate));
        return *this;
    }

    /// Concatenate another circuit over the same qubit count.
    Circuit &append(const Circuit &other) {
        if (other.layout_.total() != layout_.total()) {
            throw std::invalid_argument("cannot concatenate circuits with different qubit counts");
        }
        gates_.insert(gates_.end(), other.gates_.begin(), other.gates_.end());
        return *this;
    }

    /// Reversed gate list with each gate inverted.
    Circuit inverse() const {
        Circuit inv(layout_);
        inv.gates_.reserve(gates_.size());
        for (auto it = gates_.rbegin(); it != gates_.rend(); ++it) {
            inv.gates_.push_back(it->inverse());
        }
        return inv;
    }

    /// Copy with the ancilla register grown to `count` qubits. The ancilla
    /// block sits last in the layout, so existing gate indices stay valid.
    Circuit with_ancillas(std::size_t count) const {
        if (count < layout_.ancilla) {
            throw std::invalid_argument("cannot shrink the ancilla register");
        }
        Circuit grown(*this);
        grown.layout_.ancilla = count;
        return grown;
    }

  private:
    RegisterLayout layout_;
    std::vector<Gate> gates_;
};

struct GateCounts {
    std::size_t toffoli = 0;      // CCX plus 2-control MCX of any polarity
    std::size_t cnot = 0;         // CX plus 1-control MCX
    std::size_t single_qubit = 0; // X, H, Ry
    std::size_t ch = 0;
    std::size_t cz = 0;           // CZ plus 1-control MCZ
    std::size_t cry = 0;
    std::map<std::size_t, std::size_t> mcx_by_arity; // control count >= 3
    std::map<std::size_t, std::size_t> mcz_by_arity; // control count >= 2
    std::size_t total_qubits = 0;
    std::size_t total_gates = 0;

    GateCounts &operator+=(const GateCounts &other) {
        toffoli += other.toffoli;
        cnot += other.cnot;
        single_qubit += other.single_qubit;
        ch += other.ch;
        cz += other.cz;
        cry += other.cry;
        for (const auto &[arity, n] : other.mcx_by_arity) {
            mcx_by_arity[arity] += n;
        }
        for (const auto &[arity, n] : other.mcz_by_arity) {
            mcz_by_arity[arity] += n;
        }
        total_gates += other.total_gates;
        total_qubits = std::max(total_qubits, other.total_qubits);
        return *this;
    }

    friend GateCounts operator+(GateCounts lhs, const GateCounts &rhs) {
        lhs += rhs;
        return lhs;
    }

    bool operator==(const GateCounts &) const = default;
};

inline GateCounts count(const Circuit &circuit) {
    GateCounts counts;
    counts.total_qubits = circuit.qubits();
    counts.total_gates = circuit.size();
    for (const Gate &gate : circuit.gates()) {
        switch (gate.kind) {
        case GateKind::X:
        case GateKind::H:
        case GateKind::Ry:
            ++counts.single_qubit;
            break;
        case GateKind::CX:
            ++counts.cnot;
            break;
        case GateKind::CZ:
            ++counts.cz;
            break;
        case GateKind::CH:
            ++counts.ch;
            break;
        case GateKind::CRy:
            ++counts.cry;
            break;
        case GateKind::CCX:
            ++counts.toffoli;
            break;
        case GateKind::MCX:
            if (gate.controls.size() == 1) {
                ++counts.cnot;
            } else if (gate.controls.size() == 2) {
                ++counts.toffoli;
            } else {
                ++counts.mcx_by_arity[gate.controls.size()];
            }
            break;
        case GateKind::MCZ:
            if (gate.controls.size() == 1) {
                ++counts.cz;
            } else {
                ++counts.mcz_by_arity[gate.controls.size()];
            }
            break;
        }
    }
    return counts;
}

} // namespace qprep
