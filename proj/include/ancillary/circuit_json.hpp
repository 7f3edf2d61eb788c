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

#pragma once

#include <string>

#include <json.hpp>

#include "ancillary/circuit.hpp"

namespace anc {

/// Serializes a circuit as {"in":{"qubits":n,"bits":m},"out":{...},
/// "gates":[...]}. The wire counts only describe layouts where all qubits
/// precede all bits, so circuits whose input or output interleaves the two
/// are rejected with std::invalid_argument. Gates carry no floats, so a
/// round trip reproduces the circuit exactly.
nlohmann::json circuit_to_json(const Circuit& c);

/// Rebuilds a circuit from its JSON form, re-validating every gate. Throws
/// std::runtime_error naming the offending gate index on malformed input,
/// and verifies that the declared output counts match the rebuilt circuit.
Circuit circuit_from_json(const nlohmann::json& j);

/// circuit_to_json rendered as a single line of text.
std::string serialize_circuit(const Circuit& c);

/// Parses text produced by serialize_circuit (or any equivalent JSON).
Circuit parse_circuit(const std::string& text);

/// One gate as JSON, the same form used inside a circuit's "gates" array.
nlohmann::json gate_app_to_json(const GateApp& g);

/// Inverse of gate_app_to_json; `where` names the gate in error messages.
GateApp gate_app_from_json(const nlohmann::json& j, const std::string& where);

}  // namespace anc
