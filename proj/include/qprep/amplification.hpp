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
 * Amplitude amplification around a transduction circuit: good-state and
 * initial-state reflections, round scheduling, the end-to-end pipeline with
 * data-register reset, and seeded shot sampling.
 */

#pragma once

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <cstdint>
#include <iterator>
#include <map>
#include <numbers>
#include <optional>
#include <random>
#include <stdexcept>
#include <vector>

#include "qprep/circuit.hpp"
#include "qprep/encoding.hpp"
#include "qprep/simulator.hpp"
#include "qprep/transduce_modified.hpp"
#include "qprep/transduce_standard.hpp"

namespace qprep {

enum class Algorithm { standard, modified };

inline const char *to_string(Algorithm algorithm) {
    return algorithm == Algorithm::standard ? "standard" : "modified";
}

struct PipelineConfig {
    AmplitudeSpec spec;
    Algorithm algorithm = Algorithm::standard;
    std::optional<std::size_t> rounds; // nullopt: pick optimal_rounds automatically
    bool decomposed = false;           // standard only: use the merged cascade
    std::uint64_t seed = 0;            // shot sampling
};

inline RegisterLayout pipeline_layout(const AmplitudeSpec &spec, Algorithm algorithm,
                                      bool decomposed) {
    return algorithm == Algorithm::standard ? standard_layout(spec, decomposed)
                                            : modified_layout(spec);
}

/// Success probability of the bare transduction, from the quantized spec:
/// (||x||_2 / (a sqrt(d)))^2 for standard, (||x||_2 / sqrt(d))^2 for modified.
inline double analytic_success_probability(const AmplitudeSpec &spec, Algorithm algorithm) {
    const double d = static_cast<double>(spec.dimension());
    double amp = spec.l2_norm() / std::sqrt(d);
    if (algorithm == Algorithm::standard) {
        amp /= ry_angles(spec.bits()).normalization;
    }
    return amp * amp;
}

/// sin^2((2r+1) asin(sqrt(p0))).
inline double amplified_probability(double p0, std::size_t rounds) {
    const double theta = std::asin(std::sqrt(p0));
    const double s = std::sin(static_cast<double>(2 * rounds + 1) * theta);
    return s * s;
}

/// r = max(0, round(pi / (4 asin(sqrt(p0))) - 1/2)); the post-round success
/// probability sin^2((2r+1) asin(sqrt(p0))) is never below p0.
inline std::size_t optimal_rounds(double p0) {
    if (!(p0 > 0.0) || p0 > 1.0) {
        throw std::invalid_argument("initial success probability must be in (0, 1]");
    }
    const double theta = std::asin(std::sqrt(p0));
    const long r = std::lround(std::numbers::pi / (4.0 * theta) - 0.5);
    return r > 0 ? static_cast<std::size_t>(r) : 0;
}

/// Phase -1 exactly on basis states with the Control register all-zero and
/// Flag = 1: an MCZ with control-on-0 pattern over the control register,
/// targeting Flag.
inline Circuit build_good_reflection(const RegisterLayout &layout) {
    if (layout.control == 0 || layout.flag != 1) {
        throw std::invalid_argument("good-state reflection needs control and flag registers");
    }
    std::vector<std::size_t> controls;
    controls.reserve(layout.control);
    for (std::size_t t = 0; t < layout.control; ++t) {
        controls.push_back(layout.control_qubit(t));
    }
    Circuit circuit(layout);
    circuit.append(Gate::mcz(std::move(controls),
                             std::vector<std::uint8_t>(layout.control, 0), layout.flag_qubit()));
    return circuit;
}

/// S (phase flip on the all-zero state) S^dag, acting as 2|init><init| - 1 up
/// to a global phase. The flip spans the address, data, control and flag
/// registers; ancillas are excluded since every reachable state holds them
/// in |0>.
inline Circuit build_initial_reflection(const Circuit &state_prep) {
    const RegisterLayout &layout = state_prep.layout();
    Circuit circuit = state_prep.inverse();
    std::vector<std::size_t> controls;
    for (std::size_t t = 0; t < layout.address; ++t) {
        controls.push_back(layout.address_qubit(t));
    }
    for (std::size_t t = 0; t < layout.data; ++t) {
        controls.push_back(layout.data_qubit(t));
    }
    for (std::size_t t = 0; t < layout.control; ++t) {
        controls.push_back(layout.control_qubit(t));
    }
    const std::size_t target = layout.flag_qubit();
    circuit.append(Gate::x(target));
    circuit.append(
        Gate::mcz(std::move(controls), std::vector<std::uint8_t>(layout.address + layout.data + layout.control, 0), target));
    circuit.append(Gate::x(target));
    circuit.append(state_prep);
    return circuit;
}

/// The state-preparation unitary S: Hadamards on Address, the oracle, then the
/// transduction.
inline Circuit build_state_prep(const AmplitudeSpec &spec, Algorithm algorithm, bool decomposed,
                                const RegisterLayout &layout) {
    Circuit circuit(layout);
    for (std::size_t t = 0; t < layout.address; ++t) {
        circuit.append(Gate::h(layout.address_qubit(t)));
    }
    circuit.append(build_oracle(spec, layout));
    if (algorithm == Algorithm::standard) {
        circuit.append(build_transduce_standard(spec, layout, decomposed, ry_angles(spec.bits())));
    } else {
        circuit.append(build_transduce_modified(spec, layout));
    }
    return circuit;
}

inline std::size_t resolved_rounds(const PipelineConfig &config) {
    if (config.rounds) {
        return *config.rounds;
    }
    return optimal_rounds(analytic_success_probability(config.spec, config.algorithm));
}

/// The demonstration pipeline: S, r Grover iterations (good reflection then
/// initial reflection), and one final oracle call that resets the Data
/// register on the post-selected branch.
inline Circuit build_pipeline(const PipelineConfig &config) {
    const RegisterLayout layout =
        pipeline_layout(config.spec, config.algorithm, config.decomposed);
    Circuit prep = build_state_prep(config.spec, config.algorithm, config.decomposed, layout);
    Circuit circuit = prep;
    const std::size_t rounds = resolved_rounds(config);
    if (rounds > 0) {
        const Circuit good = build_good_reflection(layout);
        const Circuit diffusion = build_initial_reflection(prep);
        for (std::size_t r = 0; r < rounds; ++r) {
            circuit.append(good);
            circuit.append(diffusion);
        }
    }
    circuit.append(build_oracle(config.spec, layout));
    return circuit;
}

/// Post-selection constraints for the success branch: Control all-zero,
/// Flag = 1.
inline std::vector<Constraint> success_constraints(const RegisterLayout &layout) {
    std::vector<Constraint> constraints;
    for (std::size_t t = 0; t < layout.control; ++t) {
        constraints.emplace_back(layout.control_qubit(t), 0);
    }
    constraints.emplace_back(layout.flag_qubit(), 1);
    return constraints;
}

struct SampleResult {
    std::map<std::uint64_t, std::uint64_t> counts; // basis index -> occurrences
    std::size_t shots = 0;
    double success_fraction = 0.0; // Control all-zero and Flag = 1
};

/// Draw basis-state outcomes from the squared amplitudes of the pipeline's
/// final state. The generator is seeded mt19937_64 with inverse-CDF draws, so
/// a fixed seed reproduces the histogram bit for bit.
inline SampleResult sample(const Circuit &pipeline, std::size_t shots, std::uint64_t seed) {
    if (shots == 0) {
        throw std::invalid_argument("shot count must be positive");
    }
    StateVector state = apply(pipeline, StateVector::zero(pipeline.qubits()));
    std::vector<double> cumulative(state.dimension());
    double acc = 0.0;
    for (std::size_t i = 0; i < state.dimension(); ++i) {
        acc += std::norm(state[i]);
        cumulative[i] = acc;
    }
    std::size_t success_mask = 0;
    std::size_t success_value = 0;
    for (const auto &[qubit, bit] : success_constraints(pipeline.layout())) {
        const std::size_t b = state.mask(qubit);
        success_mask |= b;
        if (bit) {
            success_value |= b;
        }
    }
    std::mt19937_64 rng(seed);
    SampleResult result;
    result.shots = shots;
    std::uint64_t successes = 0;
    for (std::size_t s = 0; s < shots; ++s) {
        // 53-bit uniform in [0, 1); avoids distribution objects so draws are
        // identical across standard-library implementations.
        const double u = static_cast<double>(rng() >> 11) * 0x1.0p-53 * acc;
        const auto it = std::lower_bound(cumulative.begin(), cumulative.end(), u,
                                         [](double c, double v) { return c <= v; });
        const auto outcome =
            static_cast<std::uint64_t>(std::distance(cumulative.begin(), it));
        ++result.counts[outcome];
        if ((outcome & success_mask) == success_value) {
            ++successes;
        }
    }
    result.success_fraction = static_cast<double>(successes) / static_cast<double>(shots);
    return result;
}

} // namespace qprep
