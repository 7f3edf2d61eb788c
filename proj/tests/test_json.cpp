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

#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <stdexcept>
#include <string>

#include "ancillary/circuit_json.hpp"
#include "ancillary/derivation_json.hpp"
#include "ancillary/oracle_compiler.hpp"

using namespace anc;

TEST_CASE("golden single-gate serialization") {
  // Keys come out sorted, so the exact text is stable.
  CHECK(serialize_circuit(X_at(1, 0)) ==
        R"({"gates":[{"g":"X","ws":[0]}],"in":{"bits":0,"qubits":1},"out":{"bits":0,"qubits":1}})");

  CHECK(gate_app_to_json(InitGate{true, 1}).dump() == R"({"g":"init","val":true,"w":1})");
  CHECK(gate_app_to_json(AssertGate{false, 2}).dump() == R"({"g":"assert","val":false,"w":2})");
  CHECK(gate_app_to_json(MeasGate{0}).dump() == R"({"g":"meas","w":0})");
  CHECK(gate_app_to_json(DiscardGate{3}).dump() == R"({"g":"discard","w":3})");
  CHECK(gate_app_to_json(UnitaryGate{GateKind::Toffoli, {2, 0, 1}}).dump() ==
        R"({"g":"Toffoli","ws":[2,0,1]})");
}

TEST_CASE("round trip reproduces a compiled oracle exactly") {
  Bexp b = Bexp::and_(Bexp::var("x"), Bexp::var("y"));
  Circuit c = compile_bexp(b, VarContext({"x", "y"})).circuit;
  Circuit back = parse_circuit(serialize_circuit(c));
  CHECK(back == c);
  CHECK(serialize_circuit(back) == serialize_circuit(c));
}

TEST_CASE("round trip keeps width-changing gates") {
  Circuit c(WireType::qubits(2));
  c.append(InitGate{false, 1});
  c.append(UnitaryGate{GateKind::Toffoli, {0, 1, 2}});
  c.append(MeasGate{2});
  c.append(UnitaryGate{GateKind::CNOT, {2, 1}});
  c.append(DiscardGate{2});
  c.append(AssertGate{false, 1});
  Circuit back = parse_circuit(serialize_circuit(c));
  CHECK(back == c);
  CHECK(back.out_kinds() == std::vector<WireKind>{WireKind::Qubit});
}

TEST_CASE("interleaved layouts are rejected at serialization") {
  // meas on wire 0 of 2 qubits leaves [Bit, Qubit], not serializable.
  Circuit c(WireType::qubits(2));
  c.append(MeasGate{0});
  CHECK_THROWS_AS(circuit_to_json(c), std::invalid_argument);

  // Measuring the last wire keeps qubits ahead of bits.
  Circuit ok(WireType::qubits(2));
  ok.append(MeasGate{1});
  CHECK(parse_circuit(serialize_circuit(ok)) == ok);
}

TEST_CASE("malformed circuit text throws runtime_error") {
  CHECK_THROWS_AS(parse_circuit("not json at all"), std::runtime_error);
  CHECK_THROWS_AS(parse_circuit(R"({"gates":[]})"), std::runtime_error);
  CHECK_THROWS_AS(parse_circuit(R"({"in":{"qubits":1,"bits":0}})"), std::runtime_error);
  CHECK_THROWS_AS(parse_circuit(R"({"in":{"qubits":-1,"bits":0},"gates":[]})"),
                  std::runtime_error);
  // Unknown gate name.
  CHECK_THROWS_AS(parse_circuit(R"({"in":{"qubits":1,"bits":0},"gates":[{"g":"Y","ws":[0]}]})"),
                  std::runtime_error);
  // Wrong arity.
  CHECK_THROWS_AS(
      parse_circuit(R"({"in":{"qubits":2,"bits":0},"gates":[{"g":"CNOT","ws":[0]}]})"),
      std::runtime_error);
  // Out-of-range wire: a validation failure rewrapped with the gate index.
  try {
    parse_circuit(R"({"in":{"qubits":1,"bits":0},"gates":[{"g":"X","ws":[5]}]})");
    FAIL("expected a throw");
  } catch (const std::runtime_error& e) {
    CHECK(std::string(e.what()).find("gate 0") != std::string::npos);
  }
  // Declared output contradicting the gates.
  CHECK_THROWS_AS(
      parse_circuit(
          R"({"in":{"qubits":1,"bits":0},"out":{"qubits":2,"bits":0},"gates":[]})"),
      std::runtime_error);
}

TEST_CASE("derivation round trip") {
  Bexp b = Bexp::and_(Bexp::var("x"), Bexp::var("y"));
  SymmetryDerivation d = compile_bexp(b, VarContext({"x", "y"})).derivation;
  SymmetryDerivation back = parse_derivation(serialize_derivation(d));
  CHECK(back == d);
  CHECK(realize(back) == realize(d));

  // A tree with an equivalence witness survives too.
  SymmetryDerivation base = SymmetryDerivation::identity(1, 1);
  SymmetryDerivation witnessed =
      SymmetryDerivation::equiv_witness(realize(base), base);
  SymmetryDerivation w_back = parse_derivation(serialize_derivation(witnessed));
  CHECK(w_back == witnessed);
  CHECK(w_back.kind() == SymmetryDerivation::Kind::EquivWitness);
}

TEST_CASE("golden identity derivation text") {
  SymmetryDerivation id = SymmetryDerivation::identity(2, 1);
  CHECK(serialize_derivation(id) == R"({"n_source":2,"n_target":1,"node":"identity"})");
  SymmetryDerivation conj = SymmetryDerivation::conjugate(UnitaryGate{GateKind::X, {1}}, id);
  CHECK(serialize_derivation(conj) ==
        R"({"gate":{"g":"X","ws":[1]},"inner":{"n_source":2,"n_target":1,"node":"identity"},"node":"conjugate"})");
}

TEST_CASE("malformed derivation text throws runtime_error") {
  CHECK_THROWS_AS(parse_derivation("["), std::runtime_error);
  CHECK_THROWS_AS(parse_derivation(R"({"node":"mystery"})"), std::runtime_error);
  CHECK_THROWS_AS(parse_derivation(R"({"node":"identity","n_source":1})"), std::runtime_error);
  CHECK_THROWS_AS(parse_derivation(R"({"node":"conjugate","gate":{"g":"X","ws":[0]}})"),
                  std::runtime_error);
  // H cannot conjugate; constructor validation is re-run on parse.
  CHECK_THROWS_AS(
      parse_derivation(
          R"({"node":"conjugate","gate":{"g":"H","ws":[0]},"inner":{"node":"identity","n_source":1,"n_target":0}})"),
      std::runtime_error);
  // Ancilla wire outside the source region.
  CHECK_THROWS_AS(
      parse_derivation(
          R"({"node":"ancilla","val":true,"w":0,"inner":{"node":"identity","n_source":1,"n_target":1}})"),
      std::runtime_error);
}
