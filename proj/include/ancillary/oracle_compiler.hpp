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

#include "ancillary/bexp.hpp"
#include "ancillary/circuit.hpp"
#include "ancillary/linalg.hpp"
#include "ancillary/symmetry.hpp"

namespace anc {

/// A compiled oracle: the circuit XORs the expression's value onto wire 0
/// (the target), reading variable v from wire 1 + ctx.index(v), and the
/// derivation certifies that every non-target wire is left untouched.
struct CompileResult {
  Circuit circuit;
  SymmetryDerivation derivation;
};

/// Compiles a boolean expression to a reversible oracle on 1 + ctx.size()
/// qubits. Layout per node: constants become an X on the target (or
/// nothing), a variable becomes a CNOT from its wire, negation computes the
/// operand onto a true-initialized ancilla at position 1 before adding it to
/// the target and uncomputing, conjunction computes both operands onto two
/// false-initialized ancillae and applies a Toffoli, and exclusive-or reuses
/// one false-initialized ancilla for both operands, adding each to the
/// target in turn. Every ancilla is uncomputed and asserted back to its
/// initial value. Throws std::out_of_range when b mentions a variable not
/// in ctx.
CompileResult compile_bexp(const Bexp& b, const VarContext& ctx);

/// Oracle check: for every valuation f over ctx and every target bit z,
/// under both semantics modes, running the compiled circuit on
/// |z> ⊗ |f| must give |z xor interp(b,f)> ⊗ |f| entrywise within tol.
bool check_compile_correct(const Bexp& b, const VarContext& ctx, Tolerance tol = {});

}  // namespace anc
