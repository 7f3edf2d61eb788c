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

#include "ancillary/oracle_compiler.hpp"

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <utility>
#include <vector>

#include "ancillary/semantics.hpp"

namespace anc {

namespace {

Circuit pad(std::size_t k, const Circuit& sub) {
  return in_par(id_circ(WireType::qubits(k)), sub);
}

// The recursive layout. Each case keeps the invariant that on entry the
// target sits at wire 0 and variable v at wire 1 + ctx.index(v); inserting
// an ancilla at position 1 (or 1 and 2) shifts the variable block, which is
// exactly what padding the sub-circuit by the ancilla count accounts for.
Circuit build_oracle(const Bexp& b, const VarContext& ctx) {
  std::size_t w = 1 + ctx.size();
  switch (b.kind()) {
    case Bexp::Kind::True:
      return X_at(w, 0);
    case Bexp::Kind::False:
      return id_circ(WireType::qubits(w));
    case Bexp::Kind::Var:
      return CNOT_at(w, 1 + ctx.index(b.name()), 0);
    case Bexp::Kind::Not: {
      // true-initialized ancilla: computing the operand onto it yields its
      // negation, which one CNOT adds to the target.
      Circuit sub = pad(1, build_oracle(b.child(), ctx));
      Circuit c = init_at(true, w, 1);
      c = in_seq(c, sub);
      c = in_seq(c, CNOT_at(w + 1, 1, 0));
      c = in_seq(c, sub);
      return in_seq(c, assert_at(true, w + 1, 1));
    }
    case Bexp::Kind::And: {
      Circuit left = pad(1, build_oracle(b.left(), ctx));
      Circuit right = pad(2, build_oracle(b.right(), ctx));
      Circuit c = init_at(false, w, 1);
      c = in_seq(c, left);
      c = in_seq(c, init_at(false, w + 1, 2));
      c = in_seq(c, right);
      c = in_seq(c, Toffoli_at(w + 2, 1, 2, 0));
      c = in_seq(c, right);
      c = in_seq(c, assert_at(false, w + 2, 2));
      c = in_seq(c, left);
      return in_seq(c, assert_at(false, w + 1, 1));
    }
    case Bexp::Kind::Xor: {
      // one ancilla serves both operands in turn
      Circuit left = pad(1, build_oracle(b.left(), ctx));
      Circuit right = pad(1, build_oracle(b.right(), ctx));
      Circuit c = init_at(false, w, 1);
      c = in_seq(c, left);
      c = in_seq(c, CNOT_at(w + 1, 1, 0));
      c = in_seq(c, left);
      c = in_seq(c, right);
      c = in_seq(c, CNOT_at(w + 1, 1, 0));
      c = in_seq(c, right);
      return in_seq(c, assert_at(false, w + 1, 1));
    }
  }
  throw std::runtime_error("compile: unknown expression node");
}

// Appends gates computing b onto wire `target`, reading variables from
// wires 1 + index and opening fresh scratch wires at the end of the list.
// Scratch wires of And nodes stay live, holding the operand values, until
// the caller undoes the whole block with its mirror image.
void emit_compute(const Bexp& b, const VarContext& ctx, std::size_t target, Circuit& c) {
  switch (b.kind()) {
    case Bexp::Kind::True:
      c.append(UnitaryGate{GateKind::X, {target}});
      return;
    case Bexp::Kind::False:
      return;
    case Bexp::Kind::Var:
      c.append(UnitaryGate{GateKind::CNOT, {1 + ctx.index(b.name()), target}});
      return;
    case Bexp::Kind::Not:
      emit_compute(b.child(), ctx, target, c);
      c.append(UnitaryGate{GateKind::X, {target}});
      return;
    case Bexp::Kind::Xor:
      emit_compute(b.left(), ctx, target, c);
      emit_compute(b.right(), ctx, target, c);
      return;
    case Bexp::Kind::And: {
      std::size_t a1 = c.out_size();
      c.append(InitGate{false, a1});
      emit_compute(b.left(), ctx, a1, c);
      std::size_t a2 = c.out_size();
      c.append(InitGate{false, a2});
      emit_compute(b.right(), ctx, a2, c);
      c.append(UnitaryGate{GateKind::Toffoli, {a1, a2, target}});
      return;
    }
  }
  throw std::runtime_error("compile: unknown expression node");
}

// Equivalent oracle shaped as an exact mirror palindrome: compute b onto a
// fresh wire, add it to the target with one CNOT, then run the inverse of
// the computation. Always peelable, so it backs the equivalence witness
// when the primary layout is not itself a palindrome.
Circuit palindrome_oracle(const Bexp& b, const VarContext& ctx) {
  std::size_t w = 1 + ctx.size();
  Circuit forward = id_circ(WireType::qubits(w + 1));
  emit_compute(b, ctx, w, forward);
  Circuit c = init_at(false, w, w);
  c = in_seq(c, forward);
  c = in_seq(c, CNOT_at(forward.out_size(), w, 0));
  c = in_seq(c, invert_circuit(forward));
  return in_seq(c, assert_at(false, w + 1, w));
}

}  // namespace

CompileResult compile_bexp(const Bexp& b, const VarContext& ctx) {
  Circuit circuit = build_oracle(b, ctx);
  // The layout is a palindrome whenever every operand's sub-circuit is its
  // own mirror (operands that are leaves); then the derivation reads off
  // directly. Otherwise certify through the mirror-shaped equivalent.
  if (auto direct = peel_symmetric(circuit, 1)) {
    return {std::move(circuit), *std::move(direct)};
  }
  auto mirrored = peel_symmetric(palindrome_oracle(b, ctx), 1);
  if (!mirrored) {
    throw std::runtime_error("compile: mirror witness failed to peel");
  }
  SymmetryDerivation d = SymmetryDerivation::equiv_witness(circuit, *std::move(mirrored));
  return {std::move(circuit), std::move(d)};
}

bool check_compile_correct(const Bexp& b, const VarContext& ctx, Tolerance tol) {
  CompileResult r = compile_bexp(b, ctx);
  std::size_t nv = ctx.size();
  for (std::uint64_t fv = 0; fv < (std::uint64_t{1} << nv); ++fv) {
    std::vector<bool> bits(nv);
    for (std::size_t i = 0; i < nv; ++i) bits[i] = (fv >> i) & 1;
    Valuation f = Valuation::from_bits(ctx, bits);
    bool value = interp(b, f);
    DensityMatrix var_block = basis_state(ctx, f);
    for (bool z : {false, true}) {
      DensityMatrix in = density_kron(bool_to_matrix(z), var_block);
      DensityMatrix want = density_kron(bool_to_matrix(z != value), var_block);
      for (SemanticsMode mode : {SemanticsMode::Safe, SemanticsMode::Unsafe}) {
        DensityMatrix got = denote(r.circuit, in, mode);
        if (max_abs_diff(got.mat, want.mat) > tol.eps) return false;
      }
    }
  }
  return true;
}

}  // namespace anc
