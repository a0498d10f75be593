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

#pragma once

#include <string>
#include <string_view>

#include "belldisc/circuit.h"

namespace belldisc {

/**
 * Plain-text circuit format, one instruction per line:
 *
 *     QUBITS 4        (optional; otherwise the width is the largest index + 1)
 *     H 0
 *     CNOT 1 2        (control, target)
 *     MEAS 0
 *
 * Gate names are H, X, S, SDG, CNOT. Blank lines and text after '#' are
 * ignored. A gate on an already measured qubit is rejected.
 */
Circuit parse_circuit(std::string_view text);
std::string format_circuit(const Circuit &circuit);

Circuit read_circuit_file(const std::string &path);

/// {"n_physical": 5, "edges": [[0, 2], [1, 2]]}
CouplingMap parse_coupling_map(std::string_view json_text);
std::string format_coupling_map(const CouplingMap &map);
CouplingMap read_coupling_map_file(const std::string &path);

/// Reads a whole file; throws ParseError when it cannot be opened.
std::string read_text_file(const std::string &path);
/// Writes through a temporary sibling and renames it into place.
void write_text_file_atomic(const std::string &path, std::string_view contents);

}  // namespace belldisc
