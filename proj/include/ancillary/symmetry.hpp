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
#include <memory>
#include <optional>

#include "ancillary/circuit.hpp"
#include "ancillary/linalg.hpp"

namespace anc {

/// Wire the gate can change: X writes its only operand, CNOT its second,
/// Toffoli its third (controls are read-only). Throws std::invalid_argument
/// for anything but a classical unitary.
std::size_t acts_on(const GateApp& g);

/// Reverses a circuit built from unitaries, inits and asserts: the gate list
/// is reversed, every unitary kept (all supported unitaries are involutive)
/// and init/assert swapped with value and position preserved. The result is
/// a two-sided inverse under unsafe semantics. Throws std::invalid_argument
/// on meas or discard gates, which have no inverse.
Circuit invert_circuit(const Circuit& c);

/// Derivation tree witnessing that a circuit leaves its source wires
/// untouched. The circuit acts on n_target + n_source qubit wires with the
/// target region at indices [0, n_target) and the source region at
/// [n_target, n_target + n_source); a derivation certifies the circuit
/// restores every source wire.
///
/// Nodes, with the circuit shape each one denotes:
///   Identity                        — the empty circuit;
///   Conjugate(g, inner)             — g ;; inner ;; g, g classical unitary;
///   TargetGateLeft(g, inner)        — g ;; inner, g writing a target wire;
///   TargetGateRight(inner, g)       — inner ;; g, likewise;
///   Ancilla(b, i, inner)            — init b at i ;; inner ;; assert b at i,
///                                     i in the source region (inner has one
///                                     more source wire);
///   EquivWitness(c, inner)          — the stored circuit c itself, claimed
///                                     equivalent to inner's circuit; the
///                                     claim is checked lazily by
///                                     check_witnesses, not at construction.
class SymmetryDerivation {
 public:
  enum class Kind { Identity, Conjugate, TargetGateLeft, TargetGateRight, Ancilla, EquivWitness };

  static SymmetryDerivation identity(std::size_t n_source, std::size_t n_target);
  static SymmetryDerivation conjugate(UnitaryGate g, SymmetryDerivation inner);
  static SymmetryDerivation target_gate_left(UnitaryGate g, SymmetryDerivation inner);
  static SymmetryDerivation target_gate_right(SymmetryDerivation inner, UnitaryGate g);
  /// `wire` is absolute: n_target <= wire < n_target + inner.n_source().
  static SymmetryDerivation ancilla(bool value, std::size_t wire, SymmetryDerivation inner);
  static SymmetryDerivation equiv_witness(Circuit witness, SymmetryDerivation inner);

  Kind kind() const;
  std::size_t n_source() const;
  std::size_t n_target() const;
  /// Total wire count of the realized circuit.
  std::size_t n_wires() const { return n_source() + n_target(); }

  /// Gate of a Conjugate/TargetGateLeft/TargetGateRight node.
  const UnitaryGate& gate() const;
  /// Child derivation; valid for every node but Identity. Returned by value;
  /// derivations are cheap shared-structure handles.
  SymmetryDerivation inner() const;
  bool ancilla_value() const;
  std::size_t ancilla_wire() const;
  const Circuit& witness() const;

  /// Structural equality of trees (witness circuits included).
  bool operator==(const SymmetryDerivation& other) const;

 private:
  struct Node;
  explicit SymmetryDerivation(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// The circuit a derivation denotes. For EquivWitness nodes this is the
/// stored circuit.
Circuit realize(const SymmetryDerivation& d);

/// Derivation of the inverse circuit: conjugations and ancilla brackets keep
/// their shape around the inverted inner derivation, left and right target
/// gates swap sides, and an EquivWitness keeps a witness for the inverse by
/// applying invert_circuit to the stored circuit. Involutive, and
/// realize(invert(d)) equals invert_circuit(realize(d)) structurally.
SymmetryDerivation invert(const SymmetryDerivation& d);

/// Checks every EquivWitness node's claimed equivalence (unsafe semantics,
/// entrywise within tol) against its inner derivation's circuit.
bool check_witnesses(const SymmetryDerivation& d, Tolerance tol = {});

/// True when wire i of c is a no-op: for both boolean values, inserting a
/// fresh wire in that state at i, running c, and asserting the value back
/// out is a valid circuit. Requires c to map n qubits to n qubits; i < n.
bool noop_on(const Circuit& c, std::size_t i, Tolerance tol = {});

/// noop_on over every source index of the derivation's circuit.
bool noop_on_source(const SymmetryDerivation& d, Tolerance tol = {});

/// Removes a trailing assert_at(b,i) ;; init_at(b,i) pair, first verifying
/// via is_valid that the assertion always holds after the prefix, then
/// re-checking prefix/input equivalence. Throws std::runtime_error naming
/// the assert when the validity check fails. When the circuit does not end
/// with such a pair: throws if require_pattern, otherwise returns the
/// circuit unchanged.
Circuit cancel_assert_init(const Circuit& c, Tolerance tol = {}, bool require_pattern = true);

/// Reads a source-symmetry derivation off the syntactic shape of c, whose
/// wires must all be qubits with equal input and output counts and
/// n_target <= that count. Peels matched conjugating gates, matched
/// init/assert brackets on source wires, and target-writing gates at either
/// end. Returns std::nullopt when the circuit has none of those shapes;
/// a returned derivation always realizes back to exactly c.
std::optional<SymmetryDerivation> peel_symmetric(const Circuit& c, std::size_t n_target);

}  // namespace anc
