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

#include <cstddef>
#include <random>
#include <string>
#include <vector>

#include "ancillary/bexp.hpp"
#include "ancillary/circuit.hpp"
#include "ancillary/symmetry.hpp"

namespace anc {

/// Every expression with at most max_nodes AST nodes whose leaves are the
/// given variables plus the two constants, smallest first, in a
/// deterministic order.
std::vector<Bexp> enumerate_bexps(std::size_t max_nodes, const std::vector<std::string>& vars);

/// Random expression of AST depth at most max_depth (depth 1 is a leaf).
Bexp random_bexp(std::mt19937_64& rng, std::size_t max_depth,
                 const std::vector<std::string>& vars);

/// Knobs for random_classical_circuit.
struct ClassicalCircuitParams {
  std::size_t n_wires = 3;
  std::size_t n_steps = 8;
  /// Ancillae are opened and closed in matched pairs and never written in
  /// between, so every assertion holds by construction.
  bool disciplined = true;
  /// Flip one asserted value after building, making that assertion fail on
  /// every input. Only meaningful with disciplined.
  bool sabotage = false;
};

/// Random circuit over X/CNOT/Toffoli/init/assert on n_wires qubits. The
/// undisciplined form writes and asserts freely, so its validity varies.
Circuit random_classical_circuit(std::mt19937_64& rng, const ClassicalCircuitParams& p);

/// Random circuit whose last two gates are assert_at(b,i) ;; init_at(b,i),
/// shaped for cancel_assert_init. With valid_prefix the assertion provably
/// holds after the prefix; otherwise its value is flipped so it never does.
Circuit random_cancellable_circuit(std::mt19937_64& rng, bool valid_prefix);

/// Random circuit over the full gate set, H, Z, meas and discard included,
/// keeping qubit wires ahead of bit wires so the result stays serializable.
Circuit random_any_circuit(std::mt19937_64& rng);

/// Random derivation tree at most max_depth nodes deep whose realized
/// circuit never grows beyond max_wires wires, ancilla nesting included.
SymmetryDerivation random_derivation(std::mt19937_64& rng, std::size_t max_depth,
                                     std::size_t max_wires);

}  // namespace anc
