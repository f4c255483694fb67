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

#include <cstdint>
#include <iostream>
#include <optional>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qprep/qprep.hpp"

namespace {

using namespace qprep;

Algorithm parse_algorithm(const std::string &name) {
    if (name == "standard") {
        return Algorithm::standard;
    }
    if (name == "modified") {
        return Algorithm::modified;
    }
    throw std::invalid_argument("unknown algorithm: " + name + " (expected standard|modified)");
}

// Transduction circuit with the ancilla register sized for QASM lowering.
Circuit synth_circuit(const AmplitudeSpec &spec, Algorithm algorithm, bool decomposed,
                      bool for_export) {
    const RegisterLayout layout = pipeline_layout(spec, algorithm, decomposed);
    Circuit circuit(layout);
    if (algorithm == Algorithm::standard) {
        circuit = build_transduce_standard(spec, layout, decomposed, ry_angles(spec.bits()));
    } else {
        circuit = build_transduce_modified(spec, layout);
    }
    if (for_export) {
        const std::size_t scratch = required_export_ancillas(circuit);
        if (scratch > layout.ancilla) {
            circuit = circuit.with_ancillas(scratch);
        }
    }
    return circuit;
}

Circuit pipeline_circuit(const PipelineConfig &config, bool for_export) {
    Circuit circuit = build_pipeline(config);
    if (for_export) {
        const std::size_t scratch = required_export_ancillas(circuit);
        if (scratch > circuit.layout().ancilla) {
            circuit = circuit.with_ancillas(scratch);
        }
    }
    return circuit;
}

std::optional<std::size_t> parse_rounds(const std::string &rounds) {
    if (rounds == "auto") {
        return std::nullopt;
    }
    std::size_t consumed = 0;
    const auto value = std::stoull(rounds, &consumed);
    if (consumed != rounds.size()) {
        throw std::invalid_argument("--rounds expects 'auto' or a nonnegative integer");
    }
    return value;
}

int run_main(const std::string &algo, const std::string &input, const std::string &rounds,
             std::size_t shots, std::uint64_t seed, bool decomposed) {
    PipelineConfig config{read_amplitude_file(input), parse_algorithm(algo), parse_rounds(rounds),
                          decomposed, seed};
    std::cout << make_run_report(config, shots).dump(2) << "\n";
    return 0;
}

int synth_main(const std::string &algo, const std::string &input, bool decomposed,
               const std::string &out) {
    const AmplitudeSpec spec = read_amplitude_file(input);
    const Algorithm algorithm = parse_algorithm(algo);
    const Circuit circuit = synth_circuit(spec, algorithm, decomposed, out == "qasm");
    if (out == "qasm") {
        std::cout << export_qasm2(circuit);
    } else if (out == "json") {
        Json doc{{"algorithm", to_string(algorithm)},
                 {"n", spec.bits()},
                 {"d", spec.dimension()},
                 {"qubits_total", circuit.qubits()},
                 {"gate_counts", to_json(count(circuit))}};
        Json gates = Json::array();
        for (const Gate &gate : circuit.gates()) {
            gates.push_back(gate_to_json(gate));
        }
        doc["gates"] = gates;
        std::cout << doc.dump(2) << "\n";
    } else if (out == "listing") {
        std::cout << format_gate_listing(circuit);
    } else {
        throw std::invalid_argument("--out expects listing, qasm or json");
    }
    return 0;
}

int cost_main(const std::string &algo, std::size_t bits, bool reflections) {
    std::vector<CostAlgorithm> algorithms;
    if (algo == "all") {
        algorithms = {CostAlgorithm::sanders, CostAlgorithm::bausch, CostAlgorithm::standard_lcu,
                      CostAlgorithm::modified_lcu};
    } else if (algo == "sanders") {
        algorithms = {CostAlgorithm::sanders};
    } else if (algo == "bausch") {
        algorithms = {CostAlgorithm::bausch};
    } else if (algo == "standard") {
        algorithms = {CostAlgorithm::standard_lcu};
    } else if (algo == "modified") {
        algorithms = {CostAlgorithm::modified_lcu};
    } else {
        throw std::invalid_argument("unknown algorithm: " + algo);
    }
    Json table1 = Json::array();
    Json table2 = Json::array();
    for (const auto algorithm : algorithms) {
        table1.push_back(to_json(cost_table(algorithm, bits)));
        if (reflections) {
            table2.push_back(to_json(reflection_cost(algorithm, bits)));
        }
    }
    Json doc{{"bits", bits}, {"transduction", table1}};
    if (reflections) {
        doc["reflections"] = table2;
    }
    std::cout << doc.dump(2) << "\n";
    return 0;
}

int bound_main(std::size_t bits, std::size_t angle_bits, bool empirical) {
    Json doc;
    if (empirical) {
        doc = to_json(empirical_angle_error(bits, angle_bits));
    } else {
        doc = to_json(angle_truncation_bounds(bits, angle_bits));
    }
    std::cout << doc.dump(2) << "\n";
    return 0;
}

int export_main(const std::string &algo, const std::string &input, const std::string &format,
                bool pipeline, const std::string &rounds, bool decomposed,
                std::uint64_t seed) {
    if (format != "qasm2") {
        throw std::invalid_argument("only --format qasm2 is supported");
    }
    const AmplitudeSpec spec = read_amplitude_file(input);
    const Algorithm algorithm = parse_algorithm(algo);
    Circuit circuit(RegisterLayout{});
    if (pipeline) {
        PipelineConfig config{spec, algorithm, parse_rounds(rounds), decomposed, seed};
        circuit = pipeline_circuit(config, true);
    } else {
        circuit = synth_circuit(spec, algorithm, decomposed, true);
    }
    std::cout << export_qasm2(circuit);
    return 0;
}

} // namespace

int main(int argc, char **argv) {
    CLI::App app{"Black-box quantum state preparation via linear combination of unitaries"};
    app.require_subcommand(1);

    std::string algo = "standard";
    std::string cost_algo = "all";
    std::string input;
    std::string rounds = "auto";
    std::string out = "listing";
    std::string format = "qasm2";
    std::size_t shots = 0;
    std::uint64_t seed = 0;
    std::size_t bits = 0;
    std::size_t angle_bits = 0;
    bool decomposed = false;
    bool reflections = false;
    bool empirical = false;
    bool pipeline = false;

    auto *synth = app.add_subcommand("synth", "Build a transduction circuit");
    synth->add_option("--algo", algo, "standard|modified")->required();
    synth->add_option("--input", input, "amplitude JSON file")->required();
    synth->add_flag("--decompose", decomposed, "merge the cascade into Toffoli/CNOT gates");
    synth->add_option("--out", out, "listing|qasm|json");

    auto *run = app.add_subcommand("run", "Simulate the full pipeline and report");
    run->add_option("--algo", algo, "standard|modified")->required();
    run->add_option("--input", input, "amplitude JSON file")->required();
    run->add_option("--rounds", rounds, "auto or an explicit round count");
    run->add_option("--shots", shots, "sample the final state this many times");
    run->add_option("--seed", seed, "sampling seed");
    run->add_flag("--decompose", decomposed, "merge the cascade into Toffoli/CNOT gates");

    auto *cost = app.add_subcommand("cost", "Print the resource model rows");
    cost->add_option("--algo", cost_algo, "all|sanders|bausch|standard|modified");
    cost->add_option("--bits", bits, "precision n")->required();
    cost->add_flag("--reflections", reflections, "include the per-iteration reflection costs");

    auto *bound = app.add_subcommand("bound", "Print angle-truncation error bounds");
    bound->add_option("--bits", bits, "precision n")->required();
    bound->add_option("--angle-bits", angle_bits, "angle precision k")->required();
    bound->add_flag("--empirical", empirical, "also measure the realized errors");

    auto *exp = app.add_subcommand("export", "Emit OpenQASM 2.0");
    exp->add_option("--algo", algo, "standard|modified")->required();
    exp->add_option("--input", input, "amplitude JSON file")->required();
    exp->add_option("--format", format, "qasm2")->required();
    exp->add_flag("--pipeline", pipeline, "export the full pipeline instead of the transduction");
    exp->add_option("--rounds", rounds, "auto or an explicit round count (pipeline only)");
    exp->add_flag("--decompose", decomposed, "merge the cascade into Toffoli/CNOT gates");

    CLI11_PARSE(app, argc, argv);

    try {
        if (synth->parsed()) {
            return synth_main(algo, input, decomposed, out);
        }
        if (run->parsed()) {
            return run_main(algo, input, rounds, shots, seed, decomposed);
        }
        if (cost->parsed()) {
            return cost_main(cost_algo, bits, reflections);
        }
        if (bound->parsed()) {
            return bound_main(bits, angle_bits, empirical);
        }
        if (exp->parsed()) {
            return export_main(algo, input, format, pipeline, rounds, decomposed, seed);
        }
    } catch (const std::exception &err) {
        std::cerr << "error: " << err.what() << "\n";
        return 1;
    }
    return 0;
}
