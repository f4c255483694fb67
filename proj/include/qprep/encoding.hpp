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
 * Fixed-point quantization of classical amplitudes and synthesis of the
 * data-loading oracle |j>|y> -> |j>|y XOR x_j>.
 */

#pragma once

#include <cmath>
#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <vector>

#include "qprep/circuit.hpp"

namespace qprep {

/// An n-bit unsigned word read as the binary fraction 0.b_{n-1}...b_0.
struct FixedPointWord {
    std::uint64_t bits = 0;
    std::size_t precision = 0;
};

/// Truncating quantization: floor(value * 2^bits). Truncation, not rounding,
/// so that dequantize(result) <= value < dequantize(result) + 2^-bits.
inline FixedPointWord quantize(double value, std::size_t bits) {
    if (bits == 0 || bits > 62) {
        throw std::invalid_argument("precision must be in [1, 62] bits");
    }
    if (!(value >= 0.0) || value >= 1.0) {
        throw std::invalid_argument("value " + std::to_string(value) + " outside [0, 1)");
    }
    const auto word = static_cast<std::uint64_t>(std::floor(std::ldexp(value, static_cast<int>(bits))));
    return {word, bits};
}

inline double dequantize(const FixedPointWord &word) {
    return std::ldexp(static_cast<double>(word.bits), -static_cast<int>(word.precision));
}

/// The classical input: d values in [0, 1) quantized to n bits. d must be a
/// power of two (pad with zeros otherwise) and at least one quantized word
/// must be nonzero.
class AmplitudeSpec {
  public:
    AmplitudeSpec(std::vector<double> values, std::size_t bits) : values_(std::move(values)), bits_(bits) {
        if (values_.empty() || (values_.size() & (values_.size() - 1)) != 0) {
            throw std::invalid_argument("amplitude count must be a nonzero power of two");
        }
        words_.reserve(values_.size());
        double sum_sq = 0.0;
        for (double v : values_) {
            const FixedPointWord w = quantize(v, bits_);
            words_.push_back(w.bits);
            const double q = dequantize(w);
            sum_sq += q * q;
        }
        l2_norm_ = std::sqrt(sum_sq);
        if (!(l2_norm_ > 0.0)) {
            throw std::invalid_argument("all amplitudes quantize to zero");
        }
        address_bits_ = 0;
        while ((std::size_t{1} << address_bits_) < values_.size()) {
            ++address_bits_;
        }
    }

    std::size_t dimension() const { return values_.size(); } // d
    std::size_t bits() const { return bits_; }               // n
    std::size_t address_bits() const { return address_bits_; }
    const std::vector<double> &values() const { return values_; }

    std::uint64_t word(std::size_t j) const { return words_.at(j); }
    double quantized(std::size_t j) const {
        return dequantize({words_.at(j), bits_});
    }
    double l2_norm() const { return l2_norm_; }

  private:
    std::vector<double> values_;
    std::size_t bits_;
    std::vector<std::uint64_t> words_;
    double l2_norm_ = 0.0;
    std::size_t address_bits_ = 0;
};

/// XOR-loading oracle: for each address value j and each set bit b of x_j,
/// one MCX controlled on the address pattern of j targeting data qubit b.
/// Self-inverse, so a second application resets the data register.
///
/// Data qubit b holds bit x_{j,n-1-b} (weight 2^-(b+1)); the data register
/// read MSB-first therefore equals the quantized word of x_j.
inline Circuit build_oracle(const AmplitudeSpec &spec, const RegisterLayout &layout) {
    if ((std::size_t{1} << layout.address) != spec.dimension()) {
        throw std::invalid_argument("layout address size does not match spec dimension");
    }
    if (layout.data != spec.bits()) {
        throw std::invalid_argument("layout data size does not match spec precision");
    }
    const std::size_t n = spec.bits();
    const std::size_t abits = layout.address;
    Circuit oracle(layout);
    for (std::size_t j = 0; j < spec.dimension(); ++j) {
        const std::uint64_t word = spec.word(j);
        for (std::size_t b = 0; b < n; ++b) {
            if (((word >> (n - 1 - b)) & 1u) == 0) {
                continue;
            }
            if (abits == 0) {
                oracle.append(Gate::x(layout.data_qubit(b)));
                continue;
            }
            std::vector<std::size_t> controls(abits);
            std::vector<std::uint8_t> pattern(abits);
            for (std::size_t t = 0; t < abits; ++t) {
                controls[t] = layout.address_qubit(t);
                pattern[t] = static_cast<std::uint8_t>((j >> (abits - 1 - t)) & 1u);
            }
            oracle.append(Gate::mcx(std::move(controls), std::move(pattern), layout.data_qubit(b)));
        }
    }
    return oracle;
}

} // namespace qprep
