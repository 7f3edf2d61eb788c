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
#include <string>
#include <variant>
#include <vector>

#include "ancillary/wire_type.hpp"

namespace anc {

enum class GateKind { X, H, Z, CNOT, Toffoli };

const char* gate_kind_name(GateKind k);

/// Number of wire operands taken by a unitary of the given kind.
std::size_t gate_kind_arity(GateKind k);

/// X, CNOT and Toffoli permute basis states; H and Z do not.
bool is_classical_unitary(GateKind k);

/// Unitary gate application. Operand order: X/H/Z take [target]; CNOT takes
/// [control, target]; Toffoli takes [control, control, target]. Targets must
/// be qubit wires; controls may be classical bits.
struct UnitaryGate {
  GateKind kind;
  std::vector<std::size_t> wires;
  bool operator==(const UnitaryGate&) const = default;
};

/// Inserts a fresh qubit wire in state |value> at position `wire` (existing
/// wires at >= `wire` shift up by one).
struct InitGate {
  bool value;
  std::size_t wire;
  bool operator==(const InitGate&) const = default;
};

/// Measures the qubit at `wire` in the computational basis; the wire becomes
/// a classical bit.
struct MeasGate {
  std::size_t wire;
  bool operator==(const MeasGate&) const = default;
};

/// Drops the classical bit at `wire` (existing wires above shift down).
struct DiscardGate {
  std::size_t wire;
  bool operator==(const DiscardGate&) const = default;
};

/// Asserts the qubit at `wire` is |value> and removes it. Under safe
/// semantics this measures and discards; under unsafe semantics it projects
/// onto |value>.
struct AssertGate {
  bool value;
  std::size_t wire;
  bool operator==(const AssertGate&) const = default;
};

using GateApp = std::variant<UnitaryGate, InitGate, MeasGate, DiscardGate, AssertGate>;

/// One-line rendering of a gate, for error messages.
std::string gate_to_string(const GateApp& g);

/// A circuit is an input wire bundle plus an ordered gate list. Each gate is
/// validated against the wire layout at its program point, so a constructed
/// Circuit always has a consistent wire-count trajectory: Init grows the
/// layout by one, Assert/Discard shrink it, Meas flips a qubit to a bit.
/// Circuits are immutable once built except through append(), which callers
/// use as the builder.
class Circuit {
 public:
  explicit Circuit(WireType in);

  /// Validates `g` against the current output layout and appends it. Throws
  /// std::invalid_argument describing the violation otherwise. Returns *this
  /// for chaining. Appending resets out_type() to the canonical (right-
  /// nested) bundle of the resulting wire kinds.
  Circuit& append(GateApp g);

  const WireType& in_type() const { return in_type_; }
  const WireType& out_type() const { return out_type_; }
  const std::vector<GateApp>& gates() const { return gates_; }

  const std::vector<WireKind>& in_kinds() const { return in_kinds_; }
  const std::vector<WireKind>& out_kinds() const { return out_kinds_; }
  std::size_t in_size() const { return in_kinds_.size(); }
  std::size_t out_size() const { return out_kinds_.size(); }

  /// Structural equality: wire kinds at both ends and the exact gate list.
  /// (Tensor nesting of the types is not compared; wire semantics only
  /// depend on the flattened kinds.)
  bool operator==(const Circuit& other) const;

 private:
  WireType in_type_;
  WireType out_type_;
  std::vector<WireKind> in_kinds_;
  std::vector<WireKind> out_kinds_;
  std::vector<GateApp> gates_;
};

/// Empty circuit on the given bundle.
Circuit id_circ(const WireType& w);

/// Sequential composition. Requires c1's output wire kinds to equal c2's
/// input wire kinds; throws std::invalid_argument otherwise.
Circuit in_seq(const Circuit& c1, const Circuit& c2);

/// Parallel composition: c1 on the upper block, c2 on the lower. c2's gates
/// are reindexed past c1's block, so both halves keep their own wire
/// numbering within their block.
Circuit in_par(const Circuit& c1, const Circuit& c2);

// Single-gate circuits on n qubit wires.
Circuit X_at(std::size_t n, std::size_t i);
Circuit H_at(std::size_t n, std::size_t i);
Circuit Z_at(std::size_t n, std::size_t i);
Circuit CNOT_at(std::size_t n, std::size_t control, std::size_t target);
Circuit Toffoli_at(std::size_t n, std::size_t c1, std::size_t c2, std::size_t target);

/// n qubit wires in, n+1 out: inserts |value> at position i (i <= n).
Circuit init_at(bool value, std::size_t n, std::size_t i);

/// n qubit wires in, n-1 out: asserts wire i is |value> and removes it
/// (i < n).
Circuit assert_at(bool value, std::size_t n, std::size_t i);

}  // namespace anc
