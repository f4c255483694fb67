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
 * Standard-LCU amplitude transduction |x> -> x|x>: the Ry product-state
 * preparation A, the multi-controlled kick-back cascade, its merged
 * Toffoli/CNOT decomposition, and the full A-cascade-A^dag builder.
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <numbers>
#include <stdexcept>
#include <vector>

#include "qprep/circuit.hpp"
#include "qprep/encoding.hpp"

namespace qprep {

inline std::size_t ceil_log2(std::size_t n) {
    std::size_t bits = 0;
    while ((std::size_t{1} << bits) < n) {
        ++bits;
    }
    return bits;
}

/// The m = ceil(log2 n) rotation half-angles theta_i of the product state
/// (1/sqrt(a)) sum_i 2^{-(i+1)/2} |i>, with a = 1 - 2^{-2^m}. Control qubit i
/// (most significant first) is rotated by Ry(2 theta_i).
struct RyAngleSet {
    std::size_t m = 0;
    std::vector<double> angles; // theta_i in (0, pi/4), radians
    double normalization = 0.0; // a
};

/// Angles computed as theta_i = atan(2^{-2^{m-1-i}/2}); the cosine form
/// sqrt(2^{2^{m-1-i}} / (2^{2^{m-1-i}} + 1)) is algebraically identical but
/// overflows binary64 once 2^{m-1} exceeds ~1024.
inline RyAngleSet ry_angles(std::size_t n) {
    if (n < 2) {
        throw std::invalid_argument("standard transduction requires precision n >= 2");
    }
    RyAngleSet set;
    set.m = ceil_log2(n);
    set.angles.reserve(set.m);
    for (std::size_t i = 0; i < set.m; ++i) {
        const double exponent = static_cast<double>(std::size_t{1} << (set.m - 1 - i));
        set.angles.push_back(std::atan(std::exp2(-exponent / 2.0)));
    }
    set.normalization = 1.0 - std::exp2(-static_cast<double>(std::size_t{1} << set.m));
    return set;
}

/// Floor each omega_i = theta_i / pi to k fractional bits (one-sided
/// truncation; omega_i lies in (0, 1/4)).
inline RyAngleSet truncate_angles(const RyAngleSet &set, std::size_t k) {
    if (k == 0) {
        throw std::invalid_argument("angle precision must be at least one bit");
    }
    RyAngleSet truncated = set;
    for (double &theta : truncated.angles) {
        const double omega = theta / std::numbers::pi;
        const double snapped = std::floor(std::ldexp(omega, static_cast<int>(k)));
        theta = std::ldexp(snapped, -static_cast<int>(k)) * std::numbers::pi;
    }
    return truncated;
}

namespace detail {

inline void append_prepare_a(Circuit &circuit, const RegisterLayout &layout, const RyAngleSet &set,
                             bool inverted) {
    if (layout.control != set.m) {
        throw std::invalid_argument("layout control size does not match angle count");
    }
    for (std::size_t i = 0; i < set.m; ++i) {
        const double angle = 2.0 * set.angles[i] * (inverted ? -1.0 : 1.0);
        circuit.append(Gate::ry(angle, layout.control_qubit(i)));
    }
}

inline std::vector<std::uint8_t> value_pattern(std::size_t value, std::size_t bits) {
    std::vector<std::uint8_t> pattern(bits);
    for (std::size_t t = 0; t < bits; ++t) {
        pattern[t] = static_cast<std::uint8_t>((value >> (bits - 1 - t)) & 1u);
    }
    return pattern;
}

} // namespace detail

/// Standalone operator A over an m-qubit register: simulating on |0^m> yields
/// |psi_A> = (1/sqrt(a)) sum_i 2^{-(i+1)/2} |i>.
inline Circuit build_prepare_a(const RyAngleSet &set) {
    RegisterLayout layout;
    layout.control = set.m;
    Circuit circuit(layout);
    detail::append_prepare_a(circuit, layout, set, false);
    return circuit;
}

inline Circuit build_prepare_a(std::size_t n) { return build_prepare_a(ry_angles(n)); }

/// The n kick-back gates of the standard algorithm: gate i is an MCX
/// controlled on the control register holding value i (per-bit polarity) and
/// on data qubit i (the bit of weight 2^-(i+1)), targeting Flag.
inline Circuit build_kickback(std::size_t n, const RegisterLayout &layout) {
    const std::size_t m = ceil_log2(n);
    if (n < 2) {
        throw std::invalid_argument("standard transduction requires precision n >= 2");
    }
    if (layout.control != m) {
        throw std::invalid_argument("layout control size must be ceil(log2 n)");
    }
    if (layout.data != n || layout.flag != 1) {
        throw std::invalid_argument("layout must provide n data qubits and one flag qubit");
    }
    Circuit circuit(layout);
    for (std::size_t i = 0; i < n; ++i) {
        std::vector<std::size_t> controls;
        std::vector<std::uint8_t> pattern = detail::value_pattern(i, m);
        controls.reserve(m + 1);
        for (std::size_t t = 0; t < m; ++t) {
            controls.push_back(layout.control_qubit(t));
        }
        controls.push_back(layout.data_qubit(i));
        pattern.push_back(1);
        circuit.append(Gate::mcx(std::move(controls), std::move(pattern), layout.flag_qubit()));
    }
    return circuit;
}

/// Merged decomposition of the kick-back cascade over {CCX, CX} (with control
/// polarity), unitarily equal to build_kickback on the non-ancilla qubits with
/// ancillas returned to |0>. Uses m-1 ladder ancillas; gate counts are exactly
/// 3n-4 Toffoli and n-2 CNOT.
///
/// The walk visits the control-register values in order, keeping ancilla a_k
/// equal to the AND of the first k+1 matched control bits. Moving between
/// siblings under the same parent replaces an uncompute/recompute pair by a
/// single CNOT from the parent.
inline Circuit decompose_cascade(std::size_t n, const RegisterLayout &layout) {
    if (n < 2 || (n & (n - 1)) != 0) {
        throw std::invalid_argument("the merged cascade requires n to be a power of two");
    }
    const std::size_t m = ceil_log2(n);
    if (layout.control != m) {
        throw std::invalid_argument("layout control size must be log2 n");
    }
    if (layout.data != n || layout.flag != 1) {
        throw std::invalid_argument("layout must provide n data qubits and one flag qubit");
    }
    if (layout.ancilla < m - 1) {
        throw std::invalid_argument("merged cascade needs " + std::to_string(m - 1) +
                                    " ladder ancillas, layout has " +
                                    std::to_string(layout.ancilla));
    }
    Circuit circuit(layout);
    if (m == 1) {
        // Each kick-back is already a 2-controlled NOT.
        for (std::size_t i = 0; i < 2; ++i) {
            circuit.append(Gate::mcx({layout.control_qubit(0), layout.data_qubit(i)},
                                     {static_cast<std::uint8_t>(i), 1}, layout.flag_qubit()));
        }
        return circuit;
    }

    // Ancilla a_k (k = 1..m-1) holds AND of (c_0 = b_0) .. (c_k = b_k).
    const auto anc = [&](std::size_t k) { return layout.ancilla_qubit(k - 1); };
    const auto ctrl = [&](std::size_t t) { return layout.control_qubit(t); };
    const auto bits = [&](std::size_t i) { return detail::value_pattern(i, m); };
    const auto toggle_chain = [&](std::size_t k, const std::vector<std::uint8_t> &b) {
        if (k == 1) {
            circuit.append(Gate::mcx({ctrl(0), ctrl(1)}, {b[0], b[1]}, anc(1)));
        } else {
            circuit.append(Gate::mcx({anc(k - 1), ctrl(k)}, {1, b[k]}, anc(k)));
        }
    };

    auto b = bits(0);
    for (std::size_t k = 1; k < m; ++k) {
        toggle_chain(k, b);
    }
    for (std::size_t i = 0; i < n; ++i) {
        b = bits(i);
        circuit.append(Gate::ccx(anc(m - 1), layout.data_qubit(i), layout.flag_qubit()));
        if (i + 1 == n) {
            break;
        }
        std::size_t trailing_ones = 0;
        for (std::size_t v = i; v & 1; v >>= 1) {
            ++trailing_ones;
        }
        if (trailing_ones == 0) {
            // Deepest sibling move: a_{m-1} ^= parent AND.
            if (m >= 3) {
                circuit.append(Gate::cx(anc(m - 2), anc(m - 1)));
            } else {
                circuit.append(Gate::mcx({ctrl(0)}, {b[0]}, anc(1)));
            }
            continue;
        }
        const std::size_t flip = m - 1 - trailing_ones; // lowest changed bit position
        const auto next = bits(i + 1);
        const std::size_t lowest_kept = (flip == 0) ? 0 : flip;
        for (std::size_t k = m - 1; k > lowest_kept; --k) {
            toggle_chain(k, b); // CCX is self-inverse: uncompute a_k
        }
        if (flip == 0) {
            for (std::size_t k = 1; k < m; ++k) {
                toggle_chain(k, next);
            }
        } else {
            if (flip >= 2) {
                circuit.append(Gate::cx(anc(flip - 1), anc(flip)));
            } else {
                circuit.append(Gate::mcx({ctrl(0)}, {next[0]}, anc(1)));
            }
            for (std::size_t k = flip + 1; k < m; ++k) {
                toggle_chain(k, next);
            }
        }
    }
    b = bits(n - 1);
    for (std::size_t k = m - 1; k >= 1; --k) {
        toggle_chain(k, b);
    }
    return circuit;
}

/// Layout for the standard algorithm: m control qubits plus, when decomposed,
/// m-1 ladder ancillas.
inline RegisterLayout standard_layout(const AmplitudeSpec &spec, bool decomposed) {
    const std::size_t m = ceil_log2(spec.bits());
    RegisterLayout layout;
    layout.address = spec.address_bits();
    layout.data = spec.bits();
    layout.control = m;
    layout.flag = 1;
    layout.ancilla = decomposed ? m - 1 : 0;
    return layout;
}

/// A then the kick-back cascade then A^dag, over the given layout. Given the
/// post-oracle state, post-selecting Control = |0^m>, Flag = |1> leaves
/// amplitude x_j / (a sqrt(d)) on address j.
inline Circuit build_transduce_standard(const AmplitudeSpec &spec, const RegisterLayout &layout,
                                        bool decomposed, const RyAngleSet &angles) {
    Circuit circuit(layout);
    detail::append_prepare_a(circuit, layout, angles, false);
    circuit.append(decomposed ? decompose_cascade(spec.bits(), layout)
                              : build_kickback(spec.bits(), layout));
    detail::append_prepare_a(circuit, layout, angles, true);
    return circuit;
}

inline Circuit build_transduce_standard(const AmplitudeSpec &spec, bool decomposed = false) {
    const RegisterLayout layout = standard_layout(spec, decomposed);
    return build_transduce_standard(spec, layout, decomposed, ry_angles(spec.bits()));
}

} // namespace qprep
