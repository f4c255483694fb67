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
 * Dense statevector engine: gate application, post-selection, fidelity, and
 * full-unitary extraction for brute-force equivalence checks.
 *
 * Gates are applied in place by stride iteration over amplitude pairs, in a
 * fixed order, so results are bit-reproducible for identical inputs. MCX/MCZ
 * patterns are applied directly, without lowering.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

#include "qprep/circuit.hpp"

namespace qprep {

using Amplitude = std::complex<double>;

/// Largest supported register; 2^24 amplitudes of complex binary64 (256 MiB).
inline constexpr std::size_t kMaxSimQubits = 24;

class StateVector {
  public:
    static StateVector zero(std::size_t qubits) {
        if (qubits == 0 || qubits > kMaxSimQubits) {
            throw std::invalid_argument("qubit count must be in [1, " +
                                        std::to_string(kMaxSimQubits) + "]");
        }
        StateVector state;
        state.qubits_ = qubits;
        state.amps_.assign(std::size_t{1} << qubits, Amplitude{0.0, 0.0});
        state.amps_[0] = Amplitude{1.0, 0.0};
        return state;
    }

    static StateVector from_amplitudes(std::vector<Amplitude> amps) {
        std::size_t q = 0;
        while ((std::size_t{1} << q) < amps.size()) {
            ++q;
        }
        if ((std::size_t{1} << q) != amps.size() || amps.empty()) {
            throw std::invalid_argument("amplitude count must be a power of two");
        }
        StateVector state;
        state.qubits_ = q;
        state.amps_ = std::move(amps);
        return state;
    }

    std::size_t qubits() const { return qubits_; }
    std::size_t dimension() const { return amps_.size(); }

    Amplitude &operator[](std::size_t i) { return amps_[i]; }
    const Amplitude &operator[](std::size_t i) const { return amps_[i]; }
    const std::vector<Amplitude> &amplitudes() const { return amps_; }

    double norm() const {
        double sum = 0.0;
        for (const auto &a : amps_) {
            sum += std::norm(a);
        }
        return std::sqrt(sum);
    }

    /// Bit mask of qubit `q` in a basis index (qubit 0 is the most significant).
    std::size_t mask(std::size_t q) const { return std::size_t{1} << (qubits_ - 1 - q); }

  private:
    StateVector() = default;
    std::size_t qubits_ = 0;
    std::vector<Amplitude> amps_;
};

namespace detail {

struct Matrix2 {
    Amplitude u00, u01, u10, u11;
};

inline Matrix2 ry_matrix(double angle) {
    const double c = std::cos(angle / 2.0);
    const double s = std::sin(angle / 2.0);
    return {Amplitude{c, 0}, Amplitude{-s, 0}, Amplitude{s, 0}, Amplitude{c, 0}};
}

inline Matrix2 h_matrix() {
    const double r = 1.0 / std::sqrt(2.0);
    return {Amplitude{r, 0}, Amplitude{r, 0}, Amplitude{r, 0}, Amplitude{-r, 0}};
}

// Control predicate as (index & mask) == value over the full basis index.
struct ControlMask {
    std::size_t mask = 0;
    std::size_t value = 0;
};

inline ControlMask control_mask(const StateVector &state, const Gate &gate) {
    ControlMask cm;
    for (std::size_t i = 0; i < gate.controls.size(); ++i) {
        const std::size_t bit = state.mask(gate.controls[i]);
        cm.mask |= bit;
        const bool required = gate.pattern.empty() ? true : gate.pattern[i] != 0;
        if (required) {
            cm.value |= bit;
        }
    }
    return cm;
}

inline void apply_controlled_1q(StateVector &state, const ControlMask &cm, std::size_t target,
                                const Matrix2 &u) {
    const std::size_t dim = state.dimension();
    const std::size_t tmask = state.mask(target);
    for (std::size_t i = 0; i < dim; ++i) {
        if ((i & tmask) == 0 && (i & cm.mask) == cm.value) {
            const std::size_t j = i | tmask;
            const Amplitude a = state[i];
            const Amplitude b = state[j];
            state[i] = u.u00 * a + u.u01 * b;
            state[j] = u.u10 * a + u.u11 * b;
        }
    }
}

inline void apply_controlled_x(StateVector &state, const ControlMask &cm, std::size_t target) {
    const std::size_t dim = state.dimension();
    const std::size_t tmask = state.mask(target);
    for (std::size_t i = 0; i < dim; ++i) {
        if ((i & tmask) == 0 && (i & cm.mask) == cm.value) {
            std::swap(state[i], state[i | tmask]);
        }
    }
}

inline void apply_controlled_z(StateVector &state, const ControlMask &cm, std::size_t target) {
    const std::size_t dim = state.dimension();
    const std::size_t tmask = state.mask(target);
    for (std::size_t i = 0; i < dim; ++i) {
        if ((i & tmask) != 0 && (i & cm.mask) == cm.value) {
            state[i] = -state[i];
        }
    }
}

} // namespace detail

inline void apply_in_place(const Gate &gate, StateVector &state) {
    const detail::ControlMask cm = detail::control_mask(state, gate);
    switch (gate.kind) {
    case GateKind::X:
    case GateKind::CX:
    case GateKind::CCX:
    case GateKind::MCX:
        detail::apply_controlled_x(state, cm, gate.target());
        break;
    case GateKind::CZ:
    case GateKind::MCZ:
        detail::apply_controlled_z(state, cm, gate.target());
        break;
    case GateKind::H:
    case GateKind::CH:
        detail::apply_controlled_1q(state, cm, gate.target(), detail::h_matrix());
        break;
    case GateKind::Ry:
    case GateKind::CRy:
        detail::apply_controlled_1q(state, cm, gate.target(), detail::ry_matrix(gate.angle));
        break;
    }
}

inline void apply_in_place(const Circuit &circuit, StateVector &state) {
    if (circuit.qubits() != state.qubits()) {
        throw std::invalid_argument("circuit acts on " + std::to_string(circuit.qubits()) +
                                    " qubits but state has " + std::to_string(state.qubits()));
    }
    for (const Gate &gate : circuit.gates()) {
        apply_in_place(gate, state);
    }
}

inline StateVector apply(const Circuit &circuit, StateVector state) {
    apply_in_place(circuit, state);
    return state;
}

/// One (qubit, required bit) measurement constraint.
using Constraint = std::pair<std::size_t, int>;

struct PostSelection {
    std::vector<Constraint> constraints;
    double probability = 0.0;
    std::optional<StateVector> collapsed; // absent when probability underflows
};

inline PostSelection postselect(const StateVector &state, std::vector<Constraint> constraints) {
    std::size_t mask = 0;
    std::size_t value = 0;
    for (const auto &[qubit, bit] : constraints) {
        if (qubit >= state.qubits()) {
            throw std::invalid_argument("constraint qubit out of range");
        }
        if (bit != 0 && bit != 1) {
            throw std::invalid_argument("constraint bit must be 0 or 1");
        }
        const std::size_t b = state.mask(qubit);
        mask |= b;
        if (bit) {
            value |= b;
        }
    }
    PostSelection result;
    result.constraints = std::move(constraints);
    double prob = 0.0;
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        if ((i & mask) == value) {
            prob += std::norm(state[i]);
        }
    }
    result.probability = prob;
    if (prob < 1e-300) {
        return result;
    }
    std::vector<Amplitude> amps(state.dimension(), Amplitude{0.0, 0.0});
    const double scale = 1.0 / std::sqrt(prob);
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        if ((i & mask) == value) {
            amps[i] = state[i] * scale;
        }
    }
    result.collapsed = StateVector::from_amplitudes(std::move(amps));
    return result;
}

/// |<a|b>|^2 — phase-insensitive and symmetric.
inline double fidelity(const StateVector &a, const StateVector &b) {
    if (a.dimension() != b.dimension()) {
        throw std::invalid_argument("fidelity requires equal-size states");
    }
    Amplitude overlap{0.0, 0.0};
    for (std::size_t i = 0; i < a.dimension(); ++i) {
        overlap += std::conj(a[i]) * b[i];
    }
    return std::norm(overlap);
}

/// Column-major unitary: column k is the circuit applied to basis state k.
using UnitaryMatrix = std::vector<std::vector<Amplitude>>;

inline UnitaryMatrix full_unitary(const Circuit &circuit) {
    if (circuit.qubits() > 10) {
        throw std::invalid_argument("full_unitary supports at most 10 qubits");
    }
    const std::size_t dim = std::size_t{1} << circuit.qubits();
    UnitaryMatrix columns;
    columns.reserve(dim);
    for (std::size_t k = 0; k < dim; ++k) {
        StateVector basis = StateVector::zero(circuit.qubits());
        basis[0] = Amplitude{0.0, 0.0};
        basis[k] = Amplitude{1.0, 0.0};
        apply_in_place(circuit, basis);
        columns.push_back(basis.amplitudes());
    }
    return columns;
}

} // namespace qprep
