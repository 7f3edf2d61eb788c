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

#include "ancillary/corpus.hpp"
#include "ancillary/oracle_compiler.hpp"
#include "ancillary/semantics.hpp"
#include "ancillary/symmetry.hpp"
#include "ancillary/validity.hpp"

using namespace anc;

namespace {

std::size_t count_inits(const Circuit& c) {
  std::size_t n = 0;
  for (const GateApp& g : c.gates())
    if (std::holds_alternative<InitGate>(g)) ++n;
  return n;
}

std::size_t count_asserts(const Circuit& c) {
  std::size_t n = 0;
  for (const GateApp& g : c.gates())
    if (std::holds_alternative<AssertGate>(g)) ++n;
  return n;
}

bool has_witness_node(const SymmetryDerivation& d) {
  if (d.kind() == SymmetryDerivation::Kind::EquivWitness) return true;
  if (d.kind() == SymmetryDerivation::Kind::Identity) return false;
  return has_witness_node(d.inner());
}

}  // namespace

TEST_CASE("leaves compile to single gates") {
  CHECK(compile_bexp(Bexp::true_(), VarContext()).circuit == X_at(1, 0));
  CHECK(compile_bexp(Bexp::false_(), VarContext()).circuit == id_circ(WireType::qubit()));
  CHECK(compile_bexp(Bexp::var("x"), VarContext({"x"})).circuit == CNOT_at(2, 1, 0));

  // The variable block is read positionally from the context.
  CHECK(compile_bexp(Bexp::var("y"), VarContext({"x", "y", "z"})).circuit ==
        CNOT_at(4, 2, 0));
}

TEST_CASE("conjunction layout, gate by gate") {
  Circuit c = compile_bexp(Bexp::and_(Bexp::var("x"), Bexp::var("y")),
                           VarContext({"x", "y"}))
                  .circuit;
  CHECK(c.in_size() == 3);
  CHECK(c.out_size() == 3);
  REQUIRE(c.gates().size() == 9);
  CHECK(std::get<InitGate>(c.gates()[0]) == InitGate{false, 1});
  CHECK(std::get<UnitaryGate>(c.gates()[1]) == UnitaryGate{GateKind::CNOT, {2, 1}});
  CHECK(std::get<InitGate>(c.gates()[2]) == InitGate{false, 2});
  CHECK(std::get<UnitaryGate>(c.gates()[3]) == UnitaryGate{GateKind::CNOT, {4, 2}});
  CHECK(std::get<UnitaryGate>(c.gates()[4]) == UnitaryGate{GateKind::Toffoli, {1, 2, 0}});
  CHECK(std::get<UnitaryGate>(c.gates()[5]) == UnitaryGate{GateKind::CNOT, {4, 2}});
  CHECK(std::get<AssertGate>(c.gates()[6]) == AssertGate{false, 2});
  CHECK(std::get<UnitaryGate>(c.gates()[7]) == UnitaryGate{GateKind::CNOT, {2, 1}});
  CHECK(std::get<AssertGate>(c.gates()[8]) == AssertGate{false, 1});
}

TEST_CASE("negation layout, gate by gate") {
  Circuit c = compile_bexp(Bexp::not_(Bexp::var("x")), VarContext({"x"})).circuit;
  CHECK(c.in_size() == 2);
  REQUIRE(c.gates().size() == 5);
  CHECK(std::get<InitGate>(c.gates()[0]) == InitGate{true, 1});
  CHECK(std::get<UnitaryGate>(c.gates()[1]) == UnitaryGate{GateKind::CNOT, {2, 1}});
  CHECK(std::get<UnitaryGate>(c.gates()[2]) == UnitaryGate{GateKind::CNOT, {1, 0}});
  CHECK(std::get<UnitaryGate>(c.gates()[3]) == UnitaryGate{GateKind::CNOT, {2, 1}});
  CHECK(std::get<AssertGate>(c.gates()[4]) == AssertGate{true, 1});
}

TEST_CASE("exclusive or reuses one ancilla for both operands") {
  Circuit c = compile_bexp(Bexp::xor_(Bexp::var("x"), Bexp::var("y")),
                           VarContext({"x", "y"}))
                  .circuit;
  CHECK(count_inits(c) == 1);
  CHECK(count_asserts(c) == 1);
  CHECK(c.in_size() == 3);
  CHECK(c.out_size() == 3);
}

TEST_CASE("ancilla budget per connective") {
  VarContext ctx({"x", "y"});
  CHECK(count_inits(compile_bexp(Bexp::var("x"), ctx).circuit) == 0);
  CHECK(count_inits(compile_bexp(Bexp::true_(), ctx).circuit) == 0);
  CHECK(count_inits(compile_bexp(Bexp::not_(Bexp::var("x")), ctx).circuit) == 1);
  CHECK(count_inits(compile_bexp(Bexp::and_(Bexp::var("x"), Bexp::var("y")), ctx).circuit) == 2);
  CHECK(count_inits(compile_bexp(Bexp::xor_(Bexp::var("x"), Bexp::var("y")), ctx).circuit) == 1);
  // Inits and asserts always pair up.
  Bexp nested = Bexp::and_(Bexp::not_(Bexp::var("x")), Bexp::xor_(Bexp::var("y"), Bexp::true_()));
  Circuit c = compile_bexp(nested, ctx).circuit;
  CHECK(count_inits(c) == count_asserts(c));
}

TEST_CASE("oracle truth table via the classical fast path") {
  VarContext ctx({"x", "y"});
  Bexp b = Bexp::and_(Bexp::var("x"), Bexp::var("y"));
  Circuit c = compile_bexp(b, ctx).circuit;
  for (int v = 0; v < 8; ++v) {
    bool z = (v & 4) != 0;
    std::vector<bool> bits{z, (v & 2) != 0, (v & 1) != 0};
    BasisResult r = denote_basis(c, bits);
    REQUIRE(r.valid);
    Valuation f = Valuation::from_bits(ctx, {bits[1], bits[2]});
    CHECK(r.bits == std::vector<bool>{z != interp(b, f), bits[1], bits[2]});
  }
}

TEST_CASE("compile returns a matching derivation for every shape") {
  VarContext ctx({"x", "y"});
  for (const Bexp& b :
       {Bexp::var("x"), Bexp::true_(), Bexp::not_(Bexp::var("y")),
        Bexp::and_(Bexp::var("x"), Bexp::var("y")), Bexp::xor_(Bexp::var("x"), Bexp::var("y")),
        Bexp::not_(Bexp::not_(Bexp::var("x"))),
        Bexp::and_(Bexp::not_(Bexp::var("x")), Bexp::var("y")),
        Bexp::xor_(Bexp::and_(Bexp::var("x"), Bexp::var("y")), Bexp::var("x"))}) {
    CAPTURE(to_string(b));
    CompileResult res = compile_bexp(b, ctx);
    CHECK(res.derivation.n_target() == 1);
    CHECK(res.derivation.n_source() == ctx.size());
    // The derivation always realizes back to the delivered circuit.
    CHECK(realize(res.derivation) == res.circuit);
    CHECK(check_witnesses(res.derivation));
    CHECK(noop_on_source(res.derivation));
  }
}

TEST_CASE("leaf-operand trees peel directly, nested ones go through a witness") {
  VarContext ctx({"x", "y"});
  // Every operand a leaf: the layout is a palindrome around the target gate.
  CHECK_FALSE(has_witness_node(
      compile_bexp(Bexp::and_(Bexp::var("x"), Bexp::var("y")), ctx).derivation));
  CHECK_FALSE(has_witness_node(compile_bexp(Bexp::not_(Bexp::var("x")), ctx).derivation));
  CHECK_FALSE(has_witness_node(
      compile_bexp(Bexp::xor_(Bexp::var("x"), Bexp::var("x")), ctx).derivation));

  // A nested operand repeats its block verbatim, which no peel rule matches,
  // so the certificate is an equivalence witness instead.
  CompileResult dn = compile_bexp(Bexp::not_(Bexp::not_(Bexp::var("x"))), ctx);
  CHECK(dn.derivation.kind() == SymmetryDerivation::Kind::EquivWitness);
  CHECK(check_witnesses(dn.derivation));

  // Distinct xor operands break the mirror symmetry the same way.
  CompileResult dx = compile_bexp(Bexp::xor_(Bexp::var("x"), Bexp::var("y")), ctx);
  CHECK(dx.derivation.kind() == SymmetryDerivation::Kind::EquivWitness);
  CHECK(check_witnesses(dx.derivation));
}

TEST_CASE("compiled oracles are self-inverse") {
  VarContext ctx({"x", "y"});
  for (const Bexp& b : {Bexp::and_(Bexp::var("x"), Bexp::var("y")),
                        Bexp::not_(Bexp::var("x")),
                        Bexp::xor_(Bexp::var("x"), Bexp::var("y"))}) {
    Circuit c = compile_bexp(b, ctx).circuit;
    CHECK(is_self_inverse(c, SemanticsMode::Safe));
    CHECK(is_self_inverse(c, SemanticsMode::Unsafe));
  }
}

TEST_CASE("check_compile_correct over the small corpus") {
  std::vector<std::string> vs{"x", "y"};
  VarContext ctx(vs);
  for (const Bexp& b : enumerate_bexps(5, vs)) {
    CAPTURE(to_string(b));
    CHECK(check_compile_correct(b, ctx));
  }
}

TEST_CASE("unbound variables are rejected") {
  CHECK_THROWS_AS(compile_bexp(Bexp::var("x"), VarContext()), std::out_of_range);
  CHECK_THROWS_AS(
      compile_bexp(Bexp::and_(Bexp::var("x"), Bexp::var("w")), VarContext({"x", "y"})),
      std::out_of_range);
}

TEST_CASE("compiled circuits pass the validity check") {
  VarContext ctx({"x", "y"});
  for (const Bexp& b : enumerate_bexps(3, {"x", "y"})) {
    Circuit c = compile_bexp(b, ctx).circuit;
    CHECK(is_valid(c).valid);
    CHECK(semantics_agree(c));
  }
}
