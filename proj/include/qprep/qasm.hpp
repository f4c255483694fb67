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
 * OpenQASM 2.0 export lowered to {x, h, ry, cx, cz, ccx}, and a reader for
 * exactly that subset so exported circuits can be re-simulated. The reader is
 * not a general QASM front end.
 *
 * Lowering conventions: control-on-0 patterns are X-conjugated; CH becomes a
 * ry(-pi/4), cz, ry(pi/4) conjugation on the target; a k-controlled NOT with
 * k >= 3 becomes 2k-3 Toffolis over k-2 ancilla qubits; multi-controlled Z is
 * H-conjugated onto the X form. Output ordering and number formatting are
 * deterministic.
 */

#pragma once

#include <cstdio>
#include <cstdlib>
#include <numbers>
#include <sstream>
#include <stdexcept>
#include <string>
#include <unordered_set>
#include <vector>

#include "qprep/circuit.hpp"

namespace qprep {

namespace detail {

inline std::string format_angle(double angle) {
    char buffer[64];
    std::snprintf(buffer, sizeof(buffer), "%.17g", angle);
    return buffer;
}

struct QubitNamer {
    const RegisterLayout &layout;

    std::string operator()(std::size_t q) const {
        if (q < layout.address) {
            return "addr[" + std::to_string(q) + "]";
        }
        q -= layout.address;
        if (q < layout.data) {
            return "data[" + std::to_string(q) + "]";
        }
        q -= layout.data;
        if (q < layout.control) {
            return "ctrl[" + std::to_string(q) + "]";
        }
        q -= layout.control;
        if (q < layout.flag) {
            return "flag[" + std::to_string(q) + "]";
        }
        q -= layout.flag;
        return "anc[" + std::to_string(q) + "]";
    }
};

// 2k-3 Toffolis: an AND ladder over the scratch qubits, the flip, then the
// ladder uncomputed.
inline void emit_mcx_ladder(std::ostringstream &out, const QubitNamer &name,
                            const std::vector<std::size_t> &controls, std::size_t target,
                            const std::vector<std::size_t> &scratch) {
    const std::size_t k = controls.size();
    std::vector<std::string> compute;
    compute.push_back("ccx " + name(controls[0]) + "," + name(controls[1]) + "," +
                      name(scratch[0]) + ";\n");
    for (std::size_t i = 2; i + 1 < k; ++i) {
        compute.push_back("ccx " + name(controls[i]) + "," + name(scratch[i - 2]) + "," +
                          name(scratch[i - 1]) + ";\n");
    }
    for (const auto &line : compute) {
        out << line;
    }
    out << "ccx " << name(controls[k - 1]) << "," << name(scratch[k - 3]) << "," << name(target)
        << ";\n";
    for (auto it = compute.rbegin(); it != compute.rend(); ++it) {
        out << *it;
    }
}

} // namespace detail

/// Scratch ancillas the QASM lowering needs on top of the circuit's own gates:
/// k-2 for every k-controlled X or Z with k >= 3.
inline std::size_t required_export_ancillas(const Circuit &circuit) {
    std::size_t needed = 0;
    for (const Gate &gate : circuit.gates()) {
        if ((gate.kind == GateKind::MCX || gate.kind == GateKind::MCZ) &&
            gate.controls.size() >= 3) {
            needed = std::max(needed, gate.controls.size() - 2);
        }
    }
    return needed;
}

inline std::string export_qasm2(const Circuit &circuit) {
    const RegisterLayout &layout = circuit.layout();
    const detail::QubitNamer name{layout};
    std::ostringstream out;
    out << "OPENQASM 2.0;\n";
    out << "include \"qelib1.inc\";\n";
    if (layout.address) {
        out << "qreg addr[" << layout.address << "];\n";
    }
    if (layout.data) {
        out << "qreg data[" << layout.data << "];\n";
    }
    if (layout.control) {
        out << "qreg ctrl[" << layout.control << "];\n";
    }
    if (layout.flag) {
        out << "qreg flag[" << layout.flag << "];\n";
    }
    if (layout.ancilla) {
        out << "qreg anc[" << layout.ancilla << "];\n";
    }

    const double quarter_pi = std::numbers::pi / 4.0;
    for (const Gate &gate : circuit.gates()) {
        switch (gate.kind) {
        case GateKind::X:
            out << "x " << name(gate.target()) << ";\n";
            break;
        case GateKind::H:
            out << "h " << name(gate.target()) << ";\n";
            break;
        case GateKind::Ry:
            out << "ry(" << detail::format_angle(gate.angle) << ") " << name(gate.target())
                << ";\n";
            break;
        case GateKind::CX:
            out << "cx " << name(gate.controls[0]) << "," << name(gate.target()) << ";\n";
            break;
        case GateKind::CZ:
            out << "cz " << name(gate.controls[0]) << "," << name(gate.target()) << ";\n";
            break;
        case GateKind::CH:
            out << "ry(" << detail::format_angle(-quarter_pi) << ") " << name(gate.target())
                << ";\n";
            out << "cz " << name(gate.controls[0]) << "," << name(gate.target()) << ";\n";
            out << "ry(" << detail::format_angle(quarter_pi) << ") " << name(gate.target())
                << ";\n";
            break;
        case GateKind::CRy:
            out << "cx " << name(gate.controls[0]) << "," << name(gate.target()) << ";\n";
            out << "ry(" << detail::format_angle(-gate.angle / 2.0) << ") " << name(gate.target())
                << ";\n";
            out << "cx " << name(gate.controls[0]) << "," << name(gate.target()) << ";\n";
            out << "ry(" << detail::format_angle(gate.angle / 2.0) << ") " << name(gate.target())
                << ";\n";
            break;
        case GateKind::CCX:
            out << "ccx " << name(gate.controls[0]) << "," << name(gate.controls[1]) << ","
                << name(gate.target()) << ";\n";
            break;
        case GateKind::MCX:
        case GateKind::MCZ: {
            const std::size_t k = gate.controls.size();
            std::vector<std::size_t> scratch;
            if (k >= 3) {
                std::unordered_set<std::size_t> in_use(gate.controls.begin(),
                                                       gate.controls.end());
                in_use.insert(gate.target());
                for (std::size_t i = 0; i < layout.ancilla && scratch.size() < k - 2; ++i) {
                    const std::size_t q = layout.ancilla_qubit(i);
                    if (!in_use.count(q)) {
                        scratch.push_back(q);
                    }
                }
                if (scratch.size() < k - 2) {
                    throw std::invalid_argument(
                        "circuit requires " + std::to_string(k - 2) +
                        " free ancillas to lower a " + std::to_string(k) +
                        "-controlled gate, layout provides " + std::to_string(layout.ancilla));
                }
            }
            for (std::size_t i = 0; i < k; ++i) {
                if (gate.pattern[i] == 0) {
                    out << "x " << name(gate.controls[i]) << ";\n";
                }
            }
            if (gate.kind == GateKind::MCZ) {
                out << "h " << name(gate.target()) << ";\n";
            }
            if (k == 1) {
                out << "cx " << name(gate.controls[0]) << "," << name(gate.target()) << ";\n";
            } else if (k == 2) {
                out << "ccx " << name(gate.controls[0]) << "," << name(gate.controls[1]) << ","
                    << name(gate.target()) << ";\n";
            } else {
                detail::emit_mcx_ladder(out, name, gate.controls, gate.target(), scratch);
            }
            if (gate.kind == GateKind::MCZ) {
                out << "h " << name(gate.target()) << ";\n";
            }
            for (std::size_t i = 0; i < k; ++i) {
                if (gate.pattern[i] == 0) {
                    out << "x " << name(gate.controls[i]) << ";\n";
                }
            }
            break;
        }
        }
    }
    return out.str();
}

namespace detail {

inline std::string trim(const std::string &s) {
    const auto first = s.find_first_not_of(" \t\r\n");
    if (first == std::string::npos) {
        return "";
    }
    const auto last = s.find_last_not_of(" \t\r\n");
    return s.substr(first, last - first + 1);
}

struct ParsedRegister {
    std::string name;
    std::size_t size = 0;
    std::size_t offset = 0;
};

} // namespace detail

/// Reader for the exported subset: qreg declarations plus x, h, ry, cx, cz,
/// ccx statements. Register names must be the exporter's (addr, data, ctrl,
/// flag, anc) so that the layout can be reconstructed.
inline Circuit parse_qasm2(const std::string &text) {
    // Strip comments, then split into ';'-terminated statements.
    std::string cleaned;
    cleaned.reserve(text.size());
    for (std::size_t i = 0; i < text.size(); ++i) {
        if (text[i] == '/' && i + 1 < text.size() && text[i + 1] == '/') {
            while (i < text.size() && text[i] != '\n') {
                ++i;
            }
        }
        if (i < text.size()) {
            cleaned.push_back(text[i]);
        }
    }

    std::vector<detail::ParsedRegister> registers;
    RegisterLayout layout;
    std::vector<Gate> gates;
    bool layout_done = false;

    const auto resolve = [&](const std::string &operand) -> std::size_t {
        const auto bracket = operand.find('[');
        if (bracket == std::string::npos || operand.back() != ']') {
            throw std::invalid_argument("malformed qasm operand: " + operand);
        }
        const std::string reg = operand.substr(0, bracket);
        const std::size_t index =
            std::strtoull(operand.substr(bracket + 1, operand.size() - bracket - 2).c_str(),
                          nullptr, 10);
        for (const auto &r : registers) {
            if (r.name == reg) {
                if (index >= r.size) {
                    throw std::invalid_argument("qasm operand out of register range: " + operand);
                }
                return r.offset + index;
            }
        }
        throw std::invalid_argument("unknown qasm register: " + reg);
    };

    std::size_t pos = 0;
    while (pos < cleaned.size()) {
        const auto semi = cleaned.find(';', pos);
        if (semi == std::string::npos) {
            if (!detail::trim(cleaned.substr(pos)).empty()) {
                throw std::invalid_argument("trailing qasm text without terminator");
            }
            break;
        }
        std::string stmt = detail::trim(cleaned.substr(pos, semi - pos));
        pos = semi + 1;
        if (stmt.empty() || stmt.rfind("OPENQASM", 0) == 0 || stmt.rfind("include", 0) == 0) {
            continue;
        }
        if (stmt.rfind("qreg", 0) == 0) {
            if (layout_done) {
                throw std::invalid_argument("qreg declarations must precede gates");
            }
            const std::string decl = detail::trim(stmt.substr(4));
            const auto bracket = decl.find('[');
            if (bracket == std::string::npos || decl.back() != ']') {
                throw std::invalid_argument("malformed qreg declaration: " + stmt);
            }
            detail::ParsedRegister reg;
            reg.name = detail::trim(decl.substr(0, bracket));
            reg.size = std::strtoull(decl.substr(bracket + 1, decl.size() - bracket - 2).c_str(),
                                     nullptr, 10);
            reg.offset = registers.empty() ? 0 : registers.back().offset + registers.back().size;
            // Declarations must follow the fixed layout order so that offsets
            // line up with RegisterLayout's qubit numbering.
            static constexpr const char *order[] = {"addr", "data", "ctrl", "flag", "anc"};
            std::size_t rank = 0;
            while (rank < 5 && reg.name != order[rank]) {
                ++rank;
            }
            if (rank == 5) {
                throw std::invalid_argument("unknown register name: " + reg.name);
            }
            for (const auto &seen : registers) {
                std::size_t seen_rank = 0;
                while (order[seen_rank] != seen.name) {
                    ++seen_rank;
                }
                if (seen_rank >= rank) {
                    throw std::invalid_argument("register " + reg.name + " declared out of order");
                }
            }
            switch (rank) {
            case 0: layout.address = reg.size; break;
            case 1: layout.data = reg.size; break;
            case 2: layout.control = reg.size; break;
            case 3: layout.flag = reg.size; break;
            default: layout.ancilla = reg.size; break;
            }
            registers.push_back(reg);
            continue;
        }

        layout_done = true;
        std::string head = stmt;
        double angle = 0.0;
        bool has_angle = false;
        const auto paren = stmt.find('(');
        if (paren != std::string::npos) {
            const auto close = stmt.find(')', paren);
            if (close == std::string::npos) {
                throw std::invalid_argument("malformed parameter list: " + stmt);
            }
            angle = std::strtod(stmt.substr(paren + 1, close - paren - 1).c_str(), nullptr);
            has_angle = true;
            head = detail::trim(stmt.substr(0, paren)) + " " + detail::trim(stmt.substr(close + 1));
        }
        const auto space = head.find_first_of(" \t");
        if (space == std::string::npos) {
            throw std::invalid_argument("malformed qasm statement: " + stmt);
        }
        const std::string mnemonic = head.substr(0, space);
        std::vector<std::size_t> operands;
        std::string rest = head.substr(space + 1);
        std::size_t start = 0;
        while (start <= rest.size()) {
            auto comma = rest.find(',', start);
            if (comma == std::string::npos) {
                comma = rest.size();
            }
            const std::string token = detail::trim(rest.substr(start, comma - start));
            if (!token.empty()) {
                operands.push_back(resolve(token));
            }
            start = comma + 1;
        }

        if (mnemonic == "x" && operands.size() == 1 && !has_angle) {
            gates.push_back(Gate::x(operands[0]));
        } else if (mnemonic == "h" && operands.size() == 1 && !has_angle) {
            gates.push_back(Gate::h(operands[0]));
        } else if (mnemonic == "ry" && operands.size() == 1 && has_angle) {
            gates.push_back(Gate::ry(angle, operands[0]));
        } else if (mnemonic == "cx" && operands.size() == 2 && !has_angle) {
            gates.push_back(Gate::cx(operands[0], operands[1]));
        } else if (mnemonic == "cz" && operands.size() == 2 && !has_angle) {
            gates.push_back(Gate::cz(operands[0], operands[1]));
        } else if (mnemonic == "ccx" && operands.size() == 3 && !has_angle) {
            gates.push_back(Gate::ccx(operands[0], operands[1], operands[2]));
        } else {
            throw std::invalid_argument("unsupported qasm statement: " + stmt);
        }
    }

    Circuit circuit(layout);
    for (auto &gate : gates) {
        circuit.append(std::move(gate));
    }
    return circuit;
}

} // namespace qprep
