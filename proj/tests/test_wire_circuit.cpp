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

#include "ancillary/circuit.hpp"
#include "ancillary/wire_type.hpp"

using namespace anc;

TEST_CASE("wire bundles flatten in order") {
  CHECK(WireType::one().size() == 0);
  CHECK(WireType::one().is_one());
  CHECK(WireType::qubit().size() == 1);
  CHECK(WireType::bit().flatten() == std::vector<WireKind>{WireKind::Bit});

  WireType mixed = WireType::tensor(WireType::qubit(),
                                    WireType::tensor(WireType::bit(), WireType::qubit()));
  CHECK(mixed.size() == 3);
  CHECK(mixed.flatten() ==
        std::vector<WireKind>{WireKind::Qubit, WireKind::Bit, WireKind::Qubit});

  CHECK(WireType::qubits(3).flatten() ==
        std::vector<WireKind>{WireKind::Qubit, WireKind::Qubit, WireKind::Qubit});
  CHECK(WireType::qubits(0).is_one());
  CHECK(WireType::bits(2).flatten() == std::vector<WireKind>{WireKind::Bit, WireKind::Bit});

  std::vector<WireKind> kinds{WireKind::Bit, WireKind::Qubit, WireKind::Bit};
  CHECK(WireType::of_kinds(kinds).flatten() == kinds);
}

TEST_CASE("gate metadata") {
  CHECK(gate_kind_arity(GateKind::X) == 1);
  CHECK(gate_kind_arity(GateKind::H) == 1);
  CHECK(gate_kind_arity(GateKind::Z) == 1);
  CHECK(gate_kind_arity(GateKind::CNOT) == 2);
  CHECK(gate_kind_arity(GateKind::Toffoli) == 3);
  CHECK(is_classical_unitary(GateKind::X));
  CHECK(is_classical_unitary(GateKind::CNOT));
  CHECK(is_classical_unitary(GateKind::Toffoli));
  CHECK_FALSE(is_classical_unitary(GateKind::H));
  CHECK_FALSE(is_classical_unitary(GateKind::Z));
}

TEST_CASE("append tracks the wire trajectory") {
  Circuit c(WireType::qubits(2));
  CHECK(c.in_size() == 2);
  CHECK(c.out_size() == 2);

  c.append(InitGate{true, 1});
  CHECK(c.out_size() == 3);

  c.append(UnitaryGate{GateKind::Toffoli, {0, 1, 2}});
  c.append(MeasGate{2});
  CHECK(c.out_kinds() ==
        std::vector<WireKind>{WireKind::Qubit, WireKind::Qubit, WireKind::Bit});

  c.append(DiscardGate{2});
  CHECK(c.out_size() == 2);

  c.append(AssertGate{true, 1});
  CHECK(c.out_size() == 1);
  CHECK(c.gates().size() == 5);
  CHECK(c.in_size() == 2);
}

TEST_CASE("append rejects ill-formed gates") {
  Circuit base(WireType::qubits(2));

  CHECK_THROWS_AS(Circuit(base).append(UnitaryGate{GateKind::CNOT, {0}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Circuit(base).append(UnitaryGate{GateKind::X, {2}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Circuit(base).append(UnitaryGate{GateKind::CNOT, {1, 1}}),
                  std::invalid_argument);
  CHECK_THROWS_AS(Circuit(base).append(UnitaryGate{GateKind::Toffoli, {0, 1, 1}}),
                  std::invalid_argument);
  // Init may insert at any position up to the width, one past it is out.
  CHECK_NOTHROW(Circuit(base).append(InitGate{false, 2}));
  CHECK_THROWS_AS(Circuit(base).append(InitGate{false, 3}), std::invalid_argument);
  CHECK_THROWS_AS(Circuit(base).append(MeasGate{5}), std::invalid_argument);
  CHECK_THROWS_AS(Circuit(base).append(AssertGate{true, 2}), std::invalid_argument);
  CHECK_THROWS_AS(Circuit(base).append(DiscardGate{0}), std::invalid_argument);

  // After meas the wire is classical: no assert, no second meas, no target.
  Circuit m(WireType::qubits(2));
  m.append(MeasGate{0});
  CHECK_THROWS_AS(Circuit(m).append(AssertGate{false, 0}), std::invalid_argument);
  CHECK_THROWS_AS(Circuit(m).append(MeasGate{0}), std::invalid_argument);
  CHECK_THROWS_AS(Circuit(m).append(UnitaryGate{GateKind::X, {0}}), std::invalid_argument);
  CHECK_THROWS_AS(Circuit(m).append(UnitaryGate{GateKind::H, {0}}), std::invalid_argument);
  // A classical bit can still control.
  CHECK_NOTHROW(Circuit(m).append(UnitaryGate{GateKind::CNOT, {0, 1}}));
  CHECK_THROWS_AS(Circuit(m).append(UnitaryGate{GateKind::CNOT, {1, 0}}),
                  std::invalid_argument);
  CHECK_NOTHROW(Circuit(m).append(DiscardGate{0}));
}

TEST_CASE("gate_to_string names the offender in errors") {
  Circuit c(WireType::qubits(1));
  try {
    c.append(UnitaryGate{GateKind::CNOT, {0, 1}});
    FAIL("expected a throw");
  } catch (const std::invalid_argument& e) {
    CHECK(std::string(e.what()).find("CNOT") != std::string::npos);
  }
  CHECK(gate_to_string(InitGate{true, 3}) == "init(true@3)");
  CHECK(gate_to_string(AssertGate{false, 0}) == "assert(false@0)");
  CHECK(gate_to_string(MeasGate{2}) == "meas(2)");
  CHECK(gate_to_string(DiscardGate{1}) == "discard(1)");
}

TEST_CASE("in_seq composes and checks kinds") {
  Circuit a = X_at(2, 0);
  Circuit b = CNOT_at(2, 0, 1);
  Circuit s = in_seq(a, b);
  CHECK(s.gates().size() == 2);
  CHECK(s.in_size() == 2);
  CHECK(s.out_size() == 2);

  // 2-wire output cannot feed a 3-wire circuit.
  CHECK_THROWS_AS(in_seq(a, X_at(3, 0)), std::invalid_argument);

  // Kind mismatch at equal width is an error too.
  Circuit to_bit(WireType::qubit());
  to_bit.append(MeasGate{0});
  CHECK_THROWS_AS(in_seq(to_bit, X_at(1, 0)), std::invalid_argument);
}

TEST_CASE("in_par reindexes the lower block") {
  Circuit top = X_at(1, 0);
  Circuit bottom = CNOT_at(2, 1, 0);
  Circuit p = in_par(top, bottom);
  CHECK(p.in_size() == 3);
  REQUIRE(p.gates().size() == 2);
  CHECK(std::get<UnitaryGate>(p.gates()[0]).wires == std::vector<std::size_t>{0});
  CHECK(std::get<UnitaryGate>(p.gates()[1]).wires == std::vector<std::size_t>{2, 1});

  // A shrinking lower block keeps the upper block's numbering intact.
  Circuit shrink = assert_at(false, 2, 0);
  Circuit q = in_par(X_at(1, 0), shrink);
  CHECK(q.in_size() == 3);
  CHECK(q.out_size() == 2);
  CHECK(std::get<AssertGate>(q.gates()[1]).wire == 1);
}

TEST_CASE("single-gate circuit helpers") {
  CHECK(std::get<UnitaryGate>(X_at(3, 1).gates()[0]).wires == std::vector<std::size_t>{1});
  CHECK(std::get<UnitaryGate>(H_at(2, 0).gates()[0]).kind == GateKind::H);
  CHECK(std::get<UnitaryGate>(Z_at(2, 1).gates()[0]).kind == GateKind::Z);
  CHECK(std::get<UnitaryGate>(CNOT_at(4, 3, 0).gates()[0]).wires ==
        std::vector<std::size_t>{3, 0});
  CHECK(std::get<UnitaryGate>(Toffoli_at(3, 0, 2, 1).gates()[0]).wires ==
        std::vector<std::size_t>{0, 2, 1});

  Circuit init = init_at(true, 2, 2);
  CHECK(init.in_size() == 2);
  CHECK(init.out_size() == 3);

  Circuit asrt = assert_at(true, 3, 1);
  CHECK(asrt.in_size() == 3);
  CHECK(asrt.out_size() == 2);

  CHECK(id_circ(WireType::qubits(2)).gates().empty());
  CHECK_THROWS_AS(X_at(2, 2), std::invalid_argument);
  CHECK_THROWS_AS(init_at(false, 1, 2), std::invalid_argument);
  CHECK_THROWS_AS(assert_at(false, 1, 1), std::invalid_argument);
}

TEST_CASE("structural equality ignores tensor nesting") {
  WireType nested = WireType::tensor(WireType::qubits(2), WireType::qubit());
  Circuit a(nested);
  Circuit b(WireType::qubits(3));
  CHECK(a == b);
  b.append(UnitaryGate{GateKind::X, {0}});
  CHECK_FALSE(a == b);
}
