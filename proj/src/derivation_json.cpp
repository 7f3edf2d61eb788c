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

#include "ancillary/derivation_json.hpp"

#include <stdexcept>

#include "ancillary/circuit_json.hpp"

namespace anc {

namespace {

UnitaryGate unitary_from_json(const nlohmann::json& j) {
  GateApp g = gate_app_from_json(j, "derivation gate");
  const auto* u = std::get_if<UnitaryGate>(&g);
  if (!u)
    throw std::runtime_error("derivation json: '" + gate_to_string(g) + "' is not a unitary gate");
  return *u;
}

const nlohmann::json& inner_field(const nlohmann::json& j) {
  if (!j.contains("inner"))
    throw std::runtime_error("derivation json: node is missing its 'inner' tree");
  return j["inner"];
}

}  // namespace

nlohmann::json derivation_to_json(const SymmetryDerivation& d) {
  using Kind = SymmetryDerivation::Kind;
  switch (d.kind()) {
    case Kind::Identity:
      return {{"node", "identity"}, {"n_source", d.n_source()}, {"n_target", d.n_target()}};
    case Kind::Conjugate:
      return {{"node", "conjugate"},
              {"gate", gate_app_to_json(GateApp{d.gate()})},
              {"inner", derivation_to_json(d.inner())}};
    case Kind::TargetGateLeft:
      return {{"node", "target_left"},
              {"gate", gate_app_to_json(GateApp{d.gate()})},
              {"inner", derivation_to_json(d.inner())}};
    case Kind::TargetGateRight:
      return {{"node", "target_right"},
              {"gate", gate_app_to_json(GateApp{d.gate()})},
              {"inner", derivation_to_json(d.inner())}};
    case Kind::Ancilla:
      return {{"node", "ancilla"},
              {"val", d.ancilla_value()},
              {"w", d.ancilla_wire()},
              {"inner", derivation_to_json(d.inner())}};
    case Kind::EquivWitness:
      return {{"node", "equiv"},
              {"witness", circuit_to_json(d.witness())},
              {"inner", derivation_to_json(d.inner())}};
  }
  throw std::runtime_error("derivation json: unreachable kind");
}

SymmetryDerivation derivation_from_json(const nlohmann::json& j) {
  if (!j.is_object() || !j.contains("node") || !j["node"].is_string())
    throw std::runtime_error("derivation json: expected an object with a string 'node' tag");
  std::string node = j["node"].get<std::string>();
  try {
    if (node == "identity") {
      if (!j.contains("n_source") || !j.contains("n_target") ||
          !j["n_source"].is_number_unsigned() || !j["n_target"].is_number_unsigned())
        throw std::runtime_error(
            "derivation json: identity needs unsigned 'n_source' and 'n_target'");
      return SymmetryDerivation::identity(j["n_source"].get<std::size_t>(),
                                          j["n_target"].get<std::size_t>());
    }
    if (node == "conjugate")
      return SymmetryDerivation::conjugate(unitary_from_json(j.at("gate")),
                                           derivation_from_json(inner_field(j)));
    if (node == "target_left")
      return SymmetryDerivation::target_gate_left(unitary_from_json(j.at("gate")),
                                                  derivation_from_json(inner_field(j)));
    if (node == "target_right")
      return SymmetryDerivation::target_gate_right(derivation_from_json(inner_field(j)),
                                                   unitary_from_json(j.at("gate")));
    if (node == "ancilla") {
      if (!j.contains("val") || !j["val"].is_boolean() || !j.contains("w") ||
          !j["w"].is_number_unsigned())
        throw std::runtime_error("derivation json: ancilla needs boolean 'val' and unsigned 'w'");
      return SymmetryDerivation::ancilla(j["val"].get<bool>(), j["w"].get<std::size_t>(),
                                         derivation_from_json(inner_field(j)));
    }
    if (node == "equiv")
      return SymmetryDerivation::equiv_witness(circuit_from_json(j.at("witness")),
                                               derivation_from_json(inner_field(j)));
  } catch (const std::invalid_argument& e) {
    throw std::runtime_error(std::string("derivation json: ") + e.what());
  } catch (const nlohmann::json::out_of_range&) {
    throw std::runtime_error("derivation json: node '" + node + "' is missing a required field");
  }
  throw std::runtime_error("derivation json: unknown node '" + node + "'");
}

std::string serialize_derivation(const SymmetryDerivation& d) {
  return derivation_to_json(d).dump();
}

SymmetryDerivation parse_derivation(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw std::runtime_error(std::string("derivation json: ") + e.what());
  }
  return derivation_from_json(j);
}

}  // namespace anc
