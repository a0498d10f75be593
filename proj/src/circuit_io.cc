// Copyright 2026 The belldisc Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#include "belldisc/circuit_io.h"

#include <cstdio>
#include <filesystem>
#include <fstream>
#include <json.hpp>
#include <sstream>
#include <vector>

#include "belldisc/error.h"

namespace belldisc {

namespace {

struct ParsedLine {
    std::string op;
    std::vector<int> args;
};

int parse_index(const std::string &token, std::size_t line_no) {
    std::size_t used = 0;
    int value = -1;
    try {
        value = std::stoi(token, &used);
    } catch (const std::exception &) {
        used = 0;
    }
    if (used != token.size() || value < 0) {
        throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": bad qubit index '" + token + "'");
    }
    return value;
}

}  // namespace

Circuit parse_circuit(std::string_view text) {
    std::vector<std::pair<ParsedLine, std::size_t>> lines;
    std::optional<int> declared_width;
    int width = 0;

    std::istringstream in{std::string(text)};
    std::string raw;
    std::size_t line_no = 0;
    while (std::getline(in, raw)) {
        ++line_no;
        if (auto hash = raw.find('#'); hash != std::string::npos) {
            raw.resize(hash);
        }
        std::istringstream fields(raw);
        ParsedLine line;
        if (!(fields >> line.op)) {
            continue;
        }
        std::string token;
        while (fields >> token) {
            line.args.push_back(parse_index(token, line_no));
        }

        std::size_t arity = 1;
        if (line.op == "CNOT") {
            arity = 2;
        } else if (line.op != "H" && line.op != "X" && line.op != "S" && line.op != "SDG" && line.op != "MEAS" &&
                   line.op != "QUBITS") {
            throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": unknown instruction '" +
                                                   line.op + "'");
        }
        if (line.args.size() != arity) {
            throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": expected " +
                                                   std::to_string(arity) + " argument(s)");
        }
        if (line.op == "QUBITS") {
            if (declared_width || !lines.empty() || line.args[0] < 1) {
                throw Error(ErrorKind::ParseError, "line " + std::to_string(line_no) + ": misplaced QUBITS");
            }
            declared_width = line.args[0];
            continue;
        }
        for (int q : line.args) {
            width = std::max(width, q + 1);
        }
        lines.emplace_back(std::move(line), line_no);
    }

    if (declared_width) {
        if (width > *declared_width) {
            throw Error(ErrorKind::BadQubitIndex, "qubit index exceeds declared QUBITS");
        }
        width = *declared_width;
    }
    if (width == 0) {
        throw Error(ErrorKind::ParseError, "circuit has no qubits");
    }

    Circuit circuit(width);
    for (const auto &[line, number] : lines) {
        if (line.op == "MEAS") {
            circuit.measure(line.args[0]);
        } else if (line.op == "CNOT") {
            circuit.cnot(line.args[0], line.args[1]);
        } else {
            GateKind kind = GateKind::H;
            if (line.op == "X") {
                kind = GateKind::X;
            } else if (line.op == "S") {
                kind = GateKind::S;
            } else if (line.op == "SDG") {
                kind = GateKind::SDG;
            }
            circuit.add(Gate::single(kind, line.args[0]));
        }
    }
    return circuit;
}

std::string format_circuit(const Circuit &circuit) {
    std::ostringstream out;
    out << "QUBITS " << circuit.n_qubits() << '\n';
    for (const Gate &g : circuit.gates()) {
        out << gate_name(g.kind);
        if (g.control) {
            out << ' ' << *g.control;
        }
        out << ' ' << g.target << '\n';
    }
    for (int q : circuit.measured()) {
        out << "MEAS " << q << '\n';
    }
    return out.str();
}

Circuit read_circuit_file(const std::string &path) {
    return parse_circuit(read_text_file(path));
}

CouplingMap parse_coupling_map(std::string_view json_text) {
    nlohmann::json doc;
    try {
        doc = nlohmann::json::parse(json_text);
        std::set<QubitPair> edges;
        for (const auto &edge : doc.at("edges")) {
            if (edge.size() != 2) {
                throw Error(ErrorKind::ParseError, "edge must have two entries");
            }
            edges.emplace(edge[0].get<int>(), edge[1].get<int>());
        }
        return CouplingMap(doc.at("n_physical").get<int>(), std::move(edges));
    } catch (const nlohmann::json::exception &e) {
        throw Error(ErrorKind::ParseError, std::string("coupling map: ") + e.what());
    }
}

std::string format_coupling_map(const CouplingMap &map) {
    nlohmann::json doc;
    doc["n_physical"] = map.n_physical();
    doc["edges"] = nlohmann::json::array();
    for (const auto &[c, t] : map.allowed()) {
        doc["edges"].push_back({c, t});
    }
    return doc.dump(2) + "\n";
}

CouplingMap read_coupling_map_file(const std::string &path) {
    return parse_coupling_map(read_text_file(path));
}

std::string read_text_file(const std::string &path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw Error(ErrorKind::ParseError, "cannot open '" + path + "'");
    }
    std::ostringstream buffer;
    buffer << in.rdbuf();
    return buffer.str();
}

void write_text_file_atomic(const std::string &path, std::string_view contents) {
    namespace fs = std::filesystem;
    const fs::path target(path);
    if (target.has_parent_path()) {
        fs::create_directories(target.parent_path());
    }
    fs::path tmp = target;
    tmp += ".tmp";
    {
        std::ofstream out(tmp, std::ios::binary | std::ios::trunc);
        if (!out) {
            throw Error(ErrorKind::InvalidArgument, "cannot write '" + tmp.string() + "'");
        }
        out << contents;
        if (!out.flush()) {
            throw Error(ErrorKind::InvalidArgument, "short write to '" + tmp.string() + "'");
        }
    }
    fs::rename(tmp, target);
}

}  // namespace belldisc
