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
 * Modified-LCU amplitude transduction: the one-hot gradient state built by a
 * controlled-H/CNOT ladder, n Toffoli kick-backs, and the ladder inverse.
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "qprep/circuit.hpp"
#include "qprep/encoding.hpp"

namespace qprep {

namespace detail {

// X on control[0], then for i = 0..n-1 the pair CH(control[i] -> control[i+1]),
// CX(control[i+1] -> control[i]). On |0^{n+1}> this yields the gradient state
// of one-hot terms: control qubit i carries coefficient 2^{-(i+1)/2}, plus the
// unused tail 2^{-n/2} on qubit n.
inline void append_gradient_ladder(Circuit &circuit, const RegisterLayout &layout, std::size_t n,
                                   bool inverted) {
    std::vector<Gate> gates;
    gates.push_back(Gate::x(layout.control_qubit(0)));
    for (std::size_t i = 0; i < n; ++i) {
        gates.push_back(Gate::ch(layout.control_qubit(i), layout.control_qubit(i + 1)));
        gates.push_back(Gate::cx(layout.control_qubit(i + 1), layout.control_qubit(i)));
    }
    if (inverted) {
        for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
            circuit.append(it->inverse());
        }
    } else {
        for (auto &gate : gates) {
            circuit.append(std::move(gate));
        }
    }
}

} // namespace detail

/// Standalone gradient-state ladder over n+1 qubits (1 X, n CH, n CX gates).
inline Circuit build_prepare_gradient(std::size_t n) {
    if (n < 1) {
        throw std::invalid_argument("gradient ladder requires n >= 1");
    }
    RegisterLayout layout;
    layout.control = n + 1;
    Circuit circuit(layout);
    detail::append_gradient_ladder(circuit, layout, n, false);
    return circuit;
}

/// Exactly n Toffoli gates: gate i is controlled on control qubit i (weight
/// 2^{-(i+1)/2}) and data qubit i (bit x_{j,n-1-i}), targeting Flag. The tail
/// qubit n has no kick-back.
inline Circuit build_kickback_modified(std::size_t n, const RegisterLayout &layout) {
    if (layout.control != n + 1) {
        throw std::invalid_argument("layout control size must be n + 1");
    }
    if (layout.data != n || layout.flag != 1) {
        throw std::invalid_argument("layout must provide n data qubits and one flag qubit");
    }
    Circuit circuit(layout);
    for (std::size_t i = 0; i < n; ++i) {
        circuit.append(
            Gate::ccx(layout.control_qubit(i), layout.data_qubit(i), layout.flag_qubit()));
    }
    return circuit;
}

inline RegisterLayout modified_layout(const AmplitudeSpec &spec) {
    RegisterLayout layout;
    layout.address = spec.address_bits();
    layout.data = spec.bits();
    layout.control = spec.bits() + 1;
    layout.flag = 1;
    return layout;
}

/// Gradient ladder, kick-backs, inverse ladder. Given the post-oracle state,
/// post-selecting Control = |0^{n+1}>, Flag = |1> leaves amplitude
/// x_j / sqrt(d) on address j — no normalization-constant penalty.
inline Circuit build_transduce_modified(const AmplitudeSpec &spec, const RegisterLayout &layout) {
    if (layout.control != spec.bits() + 1) {
        throw std::invalid_argument("layout control size must be n + 1");
    }
    Circuit circuit(layout);
    detail::append_gradient_ladder(circuit, layout, spec.bits(), false);
    circuit.append(build_kickback_modified(spec.bits(), layout));
    detail::append_gradient_ladder(circuit, layout, spec.bits(), true);
    return circuit;
}

inline Circuit build_transduce_modified(const AmplitudeSpec &spec) {
    return build_transduce_modified(spec, modified_layout(spec));
}

/// Generalized ladder for arbitrary positive LCU coefficients: controlled-Ry
/// gates replace the controlled-H ones, with angles chosen so the output is
/// sum_i sqrt(a_i / a) |one-hot at i> over L qubits, a = sum a_i. There is no
/// unused tail; the last coefficient takes whatever amplitude remains.
inline Circuit build_prepare_lcu_coefficients(const std::vector<double> &coefficients) {
    if (coefficients.empty()) {
        throw std::invalid_argument("at least one coefficient is required");
    }
    double total = 0.0;
    for (double c : coefficients) {
        if (!(c > 0.0) || !std::isfinite(c)) {
            throw std::invalid_argument("coefficients must be positive and finite");
        }
        total += c;
    }
    const std::size_t count = coefficients.size();
    RegisterLayout layout;
    layout.control = count;
    Circuit circuit(layout);
    circuit.append(Gate::x(layout.control_qubit(0)));
    double leftover_sq = 1.0; // squared amplitude still sitting on the current one-hot qubit
    for (std::size_t i = 0; i + 1 < count; ++i) {
        const double keep_sq = coefficients[i] / total;
        double cos_half = std::sqrt(std::max(0.0, keep_sq / leftover_sq));
        cos_half = std::min(1.0, cos_half);
        const double angle = 2.0 * std::acos(cos_half);
        circuit.append(Gate::cry(angle, layout.control_qubit(i), layout.control_qubit(i + 1)));
        circuit.append(Gate::cx(layout.control_qubit(i + 1), layout.control_qubit(i)));
        leftover_sq = std::max(0.0, leftover_sq - keep_sq);
    }
    return circuit;
}

} // namespace qprep
