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
 * JSON schemas of the external surface: the amplitude input file, run
 * reports, cost/bound records, and the plain-text gate listing.
 */

#pragma once

#include <cmath>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>

#include <json.hpp>

#include "qprep/amplification.hpp"
#include "qprep/analysis.hpp"
#include "qprep/circuit.hpp"
#include "qprep/encoding.hpp"
#include "qprep/simulator.hpp"

namespace qprep {

using Json = nlohmann::json;

/// Input schema: {"amplitudes": [real...], "bits": n} with a power-of-two
/// number of amplitudes, each in [0, 1), and bits >= 2.
inline AmplitudeSpec parse_amplitude_file(const Json &doc) {
    if (!doc.is_object() || !doc.contains("amplitudes") || !doc.contains("bits")) {
        throw std::invalid_argument(
            R"(amplitude file must be {"amplitudes": [...], "bits": n})");
    }
    if (!doc["amplitudes"].is_array() || doc["amplitudes"].empty()) {
        throw std::invalid_argument("\"amplitudes\" must be a nonempty array of reals");
    }
    if (!doc["bits"].is_number_unsigned() || doc["bits"].get<std::size_t>() < 2) {
        throw std::invalid_argument("\"bits\" must be an integer >= 2");
    }
    std::vector<double> values;
    values.reserve(doc["amplitudes"].size());
    for (const auto &v : doc["amplitudes"]) {
        if (!v.is_number()) {
            throw std::invalid_argument("amplitudes must be numbers");
        }
        values.push_back(v.get<double>());
    }
    return AmplitudeSpec(values, doc["bits"].get<std::size_t>());
}

inline AmplitudeSpec read_amplitude_file(const std::string &path) {
    std::ifstream in(path);
    if (!in) {
        throw std::invalid_argument("cannot open input file: " + path);
    }
    Json doc;
    try {
        in >> doc;
    } catch (const Json::parse_error &err) {
        throw std::invalid_argument("invalid JSON in " + path + ": " + err.what());
    }
    return parse_amplitude_file(doc);
}

inline Json to_json(const GateCounts &counts) {
    Json by_arity_x = Json::object();
    for (const auto &[arity, n] : counts.mcx_by_arity) {
        by_arity_x[std::to_string(arity)] = n;
    }
    Json by_arity_z = Json::object();
    for (const auto &[arity, n] : counts.mcz_by_arity) {
        by_arity_z[std::to_string(arity)] = n;
    }
    return Json{{"toffoli", counts.toffoli},
                {"cnot", counts.cnot},
                {"single_qubit", counts.single_qubit},
                {"ch", counts.ch},
                {"cz", counts.cz},
                {"cry", counts.cry},
                {"mcx_by_arity", by_arity_x},
                {"mcz_by_arity", by_arity_z},
                {"total_qubits", counts.total_qubits},
                {"total_gates", counts.total_gates}};
}

inline Json to_json(const CostRow &row) {
    Json j{{"algorithm", to_string(row.algorithm)},
           {"additional_qubits", row.additional_qubits},
           {"toffoli", row.toffoli},
           {"convention_note", row.convention_note}};
    j["cnot"] = row.cnot ? Json(*row.cnot) : Json(nullptr);
    j["sqrt_swap"] = row.sqrt_swap ? Json(*row.sqrt_swap) : Json(nullptr);
    return j;
}

inline Json to_json(const ReflectionCostRow &row) {
    return Json{{"algorithm", to_string(row.algorithm)},
                {"ancillas", row.ancillas},
                {"toffoli_oracle", row.toffoli_oracle},
                {"toffoli_diffusion", row.toffoli_diffusion},
                {"convention_note", row.convention_note}};
}

inline Json to_json(const ErrorBound &bound) {
    return Json{{"n", bound.n},         {"m", bound.m},
                {"k", bound.k},         {"eps_zero", bound.eps_zero},
                {"eps_top", bound.eps_top}, {"eps_x", bound.eps_x}};
}

inline Json to_json(const AngleErrorMeasurement &m) {
    Json j = to_json(m.bound);
    j["measured_zero"] = m.measured_zero;
    j["measured_top"] = m.measured_top;
    j["measured_x"] = m.measured_x;
    j["any_truncated"] = m.any_truncated;
    return j;
}

inline Json gate_to_json(const Gate &gate) {
    Json j{{"kind", to_string(gate.kind)},
           {"controls", gate.controls},
           {"target", gate.target()}};
    if (!gate.pattern.empty()) {
        j["pattern"] = gate.pattern;
    }
    if (gate.kind == GateKind::Ry || gate.kind == GateKind::CRy) {
        j["angle"] = gate.angle;
    }
    return j;
}

/// Human-readable one-gate-per-line listing.
inline std::string format_gate_listing(const Circuit &circuit) {
    std::ostringstream out;
    const RegisterLayout &layout = circuit.layout();
    const auto reg_name = [&](std::size_t q) -> std::string {
        if (q < layout.address) return "addr" + std::to_string(q);
        q -= layout.address;
        if (q < layout.data) return "data" + std::to_string(q);
        q -= layout.data;
        if (q < layout.control) return "ctrl" + std::to_string(q);
        q -= layout.control;
        if (q < layout.flag) return "flag";
        q -= layout.flag;
        return "anc" + std::to_string(q);
    };
    for (const Gate &gate : circuit.gates()) {
        out << to_string(gate.kind);
        if (gate.kind == GateKind::Ry || gate.kind == GateKind::CRy) {
            char angle[64];
            std::snprintf(angle, sizeof(angle), "%.12g", gate.angle);
            out << "(" << angle << ")";
        }
        out << " ";
        for (std::size_t i = 0; i < gate.controls.size(); ++i) {
            out << reg_name(gate.controls[i]);
            if (!gate.pattern.empty()) {
                out << (gate.pattern[i] ? "=1" : "=0");
            }
            out << " ";
        }
        if (!gate.controls.empty()) {
            out << "-> ";
        }
        out << reg_name(gate.target()) << "\n";
    }
    return out.str();
}

/// Simulates the configured pipeline and assembles the run report. The
/// analytic and simulated success probabilities must agree to 1e-9 or the
/// report is refused.
inline Json make_run_report(const PipelineConfig &config, std::size_t shots) {
    const std::size_t rounds = resolved_rounds(config);
    const Circuit pipeline = build_pipeline(config);
    const RegisterLayout &layout = pipeline.layout();
    const StateVector final_state = apply(pipeline, StateVector::zero(pipeline.qubits()));
    const PostSelection selection = postselect(final_state, success_constraints(layout));

    const double p0 = analytic_success_probability(config.spec, config.algorithm);
    const double analytic = amplified_probability(p0, rounds);
    if (std::abs(analytic - selection.probability) > 1e-9) {
        throw std::logic_error("simulated success probability deviates from the analytic value");
    }

    // Expected post-selected state: the normalized quantized amplitudes on the
    // address register, everything else reset.
    std::vector<Amplitude> expected(final_state.dimension(), Amplitude{0.0, 0.0});
    for (std::size_t j = 0; j < config.spec.dimension(); ++j) {
        const std::size_t low_qubits = layout.total() - layout.address;
        std::size_t index = (j << low_qubits);
        index |= std::size_t{1} << (layout.ancilla); // flag bit sits above the ancilla block
        expected[index] = Amplitude{config.spec.quantized(j) / config.spec.l2_norm(), 0.0};
    }
    const double target_fidelity =
        selection.collapsed
            ? fidelity(*selection.collapsed, StateVector::from_amplitudes(std::move(expected)))
            : 0.0;

    Json report{{"algorithm", to_string(config.algorithm)},
                {"n", config.spec.bits()},
                {"d", config.spec.dimension()},
                {"rounds", rounds},
                {"success_probability_analytic", analytic},
                {"success_probability_simulated", selection.probability},
                {"fidelity_with_target", target_fidelity},
                {"gate_counts", to_json(count(pipeline))},
                {"qubits_total", layout.total()},
                {"seed", config.seed},
                {"shots", shots}};
    if (shots > 0) {
        report["empirical_success"] = sample(pipeline, shots, config.seed).success_fraction;
    }
    return report;
}

} // namespace qprep
