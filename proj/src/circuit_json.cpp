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

#include "ancillary/circuit_json.hpp"

#include <stdexcept>

namespace anc {

namespace {

// Counts a qubits-then-bits layout; rejects interleavings.
std::pair<std::size_t, std::size_t> split_counts(const std::vector<WireKind>& kinds,
                                                 const char* which) {
  std::size_t qubits = 0;
  while (qubits < kinds.size() && kinds[qubits] == WireKind::Qubit) ++qubits;
  for (std::size_t i = qubits; i < kinds.size(); ++i)
    if (kinds[i] == WireKind::Qubit)
      throw std::invalid_argument(std::string("circuit json: ") + which +
                                  " wires are not laid out as qubits followed by bits");
  return {qubits, kinds.size() - qubits};
}

nlohmann::json counts_to_json(std::pair<std::size_t, std::size_t> counts) {
  return nlohmann::json{{"qubits", counts.first}, {"bits", counts.second}};
}

[[noreturn]] void bad_gate(const std::string& where, const std::string& why) {
  throw std::runtime_error("circuit json: " + where + ": " + why);
}

std::size_t wire_field(const nlohmann::json& jg, const std::string& where) {
  if (!jg.contains("w") || !jg["w"].is_number_unsigned())
    bad_gate(where, "missing or non-integer wire field 'w'");
  return jg["w"].get<std::size_t>();
}

bool value_field(const nlohmann::json& jg, const std::string& where) {
  if (!jg.contains("val") || !jg["val"].is_boolean())
    bad_gate(where, "missing or non-boolean field 'val'");
  return jg["val"].get<bool>();
}

std::pair<std::size_t, std::size_t> counts_from_json(const nlohmann::json& j, const char* which) {
  if (!j.is_object() || !j.contains("qubits") || !j.contains("bits") ||
      !j["qubits"].is_number_unsigned() || !j["bits"].is_number_unsigned())
    throw std::runtime_error(std::string("circuit json: '") + which +
                             "' must be an object with unsigned 'qubits' and 'bits'");
  return {j["qubits"].get<std::size_t>(), j["bits"].get<std::size_t>()};
}

}  // namespace

nlohmann::json gate_app_to_json(const GateApp& g) {
  if (const auto* u = std::get_if<UnitaryGate>(&g))
    return {{"g", gate_kind_name(u->kind)}, {"ws", u->wires}};
  if (const auto* init = std::get_if<InitGate>(&g))
    return {{"g", "init"}, {"val", init->value}, {"w", init->wire}};
  if (const auto* meas = std::get_if<MeasGate>(&g)) return {{"g", "meas"}, {"w", meas->wire}};
  if (const auto* disc = std::get_if<DiscardGate>(&g))
    return {{"g", "discard"}, {"w", disc->wire}};
  const auto& as = std::get<AssertGate>(g);
  return {{"g", "assert"}, {"val", as.value}, {"w", as.wire}};
}

GateApp gate_app_from_json(const nlohmann::json& jg, const std::string& where) {
  if (!jg.is_object() || !jg.contains("g") || !jg["g"].is_string())
    bad_gate(where, "expected an object with a string field 'g'");
  std::string name = jg["g"].get<std::string>();
  if (name == "init") return InitGate{value_field(jg, where), wire_field(jg, where)};
  if (name == "assert") return AssertGate{value_field(jg, where), wire_field(jg, where)};
  if (name == "meas") return MeasGate{wire_field(jg, where)};
  if (name == "discard") return DiscardGate{wire_field(jg, where)};
  for (GateKind kind : {GateKind::X, GateKind::H, GateKind::Z, GateKind::CNOT, GateKind::Toffoli}) {
    if (name != gate_kind_name(kind)) continue;
    if (!jg.contains("ws") || !jg["ws"].is_array())
      bad_gate(where, "missing or non-array operand field 'ws'");
    std::vector<std::size_t> wires;
    for (const auto& w : jg["ws"]) {
      if (!w.is_number_unsigned()) bad_gate(where, "operand wires must be non-negative integers");
      wires.push_back(w.get<std::size_t>());
    }
    if (wires.size() != gate_kind_arity(kind))
      bad_gate(where, std::string(gate_kind_name(kind)) + " takes " +
                          std::to_string(gate_kind_arity(kind)) + " operands, got " +
                          std::to_string(wires.size()));
    return UnitaryGate{kind, std::move(wires)};
  }
  bad_gate(where, "unknown gate '" + name + "'");
}

nlohmann::json circuit_to_json(const Circuit& c) {
  nlohmann::json j;
  j["in"] = counts_to_json(split_counts(c.in_kinds(), "input"));
  j["out"] = counts_to_json(split_counts(c.out_kinds(), "output"));
  nlohmann::json gates = nlohmann::json::array();
  for (const GateApp& g : c.gates()) gates.push_back(gate_app_to_json(g));
  j["gates"] = std::move(gates);
  return j;
}

Circuit circuit_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("in") || !j.contains("gates") || !j["gates"].is_array())
    throw std::runtime_error("circuit json: expected an object with 'in' and a 'gates' array");
  auto [in_qubits, in_bits] = counts_from_json(j["in"], "in");
  Circuit c(WireType::tensor(WireType::qubits(in_qubits), WireType::bits(in_bits)));
  std::size_t index = 0;
  for (const auto& jg : j["gates"]) {
    std::string where = "gate " + std::to_string(index);
    try {
      c.append(gate_app_from_json(jg, where));
    } catch (const std::invalid_argument& e) {
      bad_gate(where, e.what());
    }
    ++index;
  }
  if (j.contains("out")) {
    auto declared = counts_from_json(j["out"], "out");
    auto actual = split_counts(c.out_kinds(), "output");
    if (declared != actual)
      throw std::runtime_error(
          "circuit json: declared output counts (" + std::to_string(declared.first) + " qubits, " +
          std::to_string(declared.second) + " bits) do not match the gates, which leave " +
          std::to_string(actual.first) + " qubits and " + std::to_string(actual.second) + " bits");
  }
  return c;
}

std::string serialize_circuit(const Circuit& c) { return circuit_to_json(c).dump(); }

Circuit parse_circuit(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("circuit json: ") + e.what());
  }
  return circuit_from_json(j);
}

}  // namespace anc
