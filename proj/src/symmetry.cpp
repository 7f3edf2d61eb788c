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

#include "ancillary/symmetry.hpp"

#include <stdexcept>
#include <string>
#include <utility>

#include "ancillary/validity.hpp"

namespace anc {

std::size_t acts_on(const GateApp& g) {
  const auto* u = std::get_if<UnitaryGate>(&g);
  if (!u || !is_classical_unitary(u->kind))
    throw std::invalid_argument("acts_on: " + gate_to_string(g) + " is not a classical unitary");
  return u->wires.back();
}

Circuit invert_circuit(const Circuit& c) {
  Circuit r(c.out_type());
  const auto& gates = c.gates();
  for (auto it = gates.rbegin(); it != gates.rend(); ++it) {
    if (const auto* u = std::get_if<UnitaryGate>(&*it)) {
      r.append(*u);  // all supported unitaries are involutive
    } else if (const auto* init = std::get_if<InitGate>(&*it)) {
      r.append(AssertGate{init->value, init->wire});
    } else if (const auto* as = std::get_if<AssertGate>(&*it)) {
      r.append(InitGate{as->value, as->wire});
    } else {
      throw std::invalid_argument("invert_circuit: " + gate_to_string(*it) + " has no inverse");
    }
  }
  return r;
}

struct SymmetryDerivation::Node {
  Kind kind;
  std::size_t n_source;
  std::size_t n_target;
  UnitaryGate gate;                      // Conjugate/TargetGateLeft/TargetGateRight
  bool anc_value = false;                // Ancilla
  std::size_t anc_wire = 0;              // Ancilla
  std::shared_ptr<const Node> inner;     // all but Identity
  std::optional<Circuit> witness;        // EquivWitness
};

namespace {

// Validates gate operands by replaying the gate on an empty circuit of the
// derivation's width, reusing the circuit layer's checks.
void probe_gate(const UnitaryGate& g, std::size_t width, const char* who) {
  if (!is_classical_unitary(g.kind))
    throw std::invalid_argument(std::string(who) + ": " + gate_to_string(GateApp{g}) +
                                " is not a classical unitary");
  try {
    id_circ(WireType::qubits(width)).append(g);
  } catch (const std::invalid_argument& e) {
    throw std::invalid_argument(std::string(who) + ": " + e.what());
  }
}

}  // namespace

SymmetryDerivation SymmetryDerivation::identity(std::size_t n_source, std::size_t n_target) {
  return SymmetryDerivation(std::make_shared<const Node>(
      Node{Kind::Identity, n_source, n_target, UnitaryGate{GateKind::X, {}}, false, 0, nullptr,
           std::nullopt}));
}

SymmetryDerivation SymmetryDerivation::conjugate(UnitaryGate g, SymmetryDerivation inner) {
  probe_gate(g, inner.n_wires(), "conjugate");
  auto ns = inner.n_source(), nt = inner.n_target();
  return SymmetryDerivation(std::make_shared<const Node>(
      Node{Kind::Conjugate, ns, nt, std::move(g), false, 0, inner.node_, std::nullopt}));
}

SymmetryDerivation SymmetryDerivation::target_gate_left(UnitaryGate g, SymmetryDerivation inner) {
  probe_gate(g, inner.n_wires(), "target_gate_left");
  if (acts_on(GateApp{g}) >= inner.n_target())
    throw std::invalid_argument("target_gate_left: " + gate_to_string(GateApp{g}) +
                                " writes a source wire");
  auto ns = inner.n_source(), nt = inner.n_target();
  return SymmetryDerivation(std::make_shared<const Node>(
      Node{Kind::TargetGateLeft, ns, nt, std::move(g), false, 0, inner.node_, std::nullopt}));
}

SymmetryDerivation SymmetryDerivation::target_gate_right(SymmetryDerivation inner, UnitaryGate g) {
  probe_gate(g, inner.n_wires(), "target_gate_right");
  if (acts_on(GateApp{g}) >= inner.n_target())
    throw std::invalid_argument("target_gate_right: " + gate_to_string(GateApp{g}) +
                                " writes a source wire");
  auto ns = inner.n_source(), nt = inner.n_target();
  return SymmetryDerivation(std::make_shared<const Node>(
      Node{Kind::TargetGateRight, ns, nt, std::move(g), false, 0, inner.node_, std::nullopt}));
}

SymmetryDerivation SymmetryDerivation::ancilla(bool value, std::size_t wire,
                                               SymmetryDerivation inner) {
  if (inner.n_source() == 0)
    throw std::invalid_argument("ancilla: inner derivation has no source wire to bracket");
  std::size_t nt = inner.n_target();
  if (wire < nt || wire >= nt + inner.n_source())
    throw std::invalid_argument("ancilla: wire " + std::to_string(wire) +
                                " is outside the source region [" + std::to_string(nt) + ", " +
                                std::to_string(nt + inner.n_source()) + ")");
  return SymmetryDerivation(std::make_shared<const Node>(Node{
      Kind::Ancilla, inner.n_source() - 1, nt, UnitaryGate{GateKind::X, {}}, value, wire,
      inner.node_, std::nullopt}));
}

SymmetryDerivation SymmetryDerivation::equiv_witness(Circuit witness, SymmetryDerivation inner) {
  std::size_t n = inner.n_wires();
  auto all_qubits = [](const std::vector<WireKind>& kinds) {
    for (WireKind k : kinds)
      if (k != WireKind::Qubit) return false;
    return true;
  };
  if (witness.in_size() != n || witness.out_size() != n || !all_qubits(witness.in_kinds()) ||
      !all_qubits(witness.out_kinds()))
    throw std::invalid_argument("equiv_witness: witness must map " + std::to_string(n) +
                                " qubits to " + std::to_string(n) + " qubits");
  auto ns = inner.n_source(), nt = inner.n_target();
  return SymmetryDerivation(std::make_shared<const Node>(
      Node{Kind::EquivWitness, ns, nt, UnitaryGate{GateKind::X, {}}, false, 0, inner.node_,
           std::move(witness)}));
}

SymmetryDerivation::Kind SymmetryDerivation::kind() const { return node_->kind; }
std::size_t SymmetryDerivation::n_source() const { return node_->n_source; }
std::size_t SymmetryDerivation::n_target() const { return node_->n_target; }

const UnitaryGate& SymmetryDerivation::gate() const {
  if (node_->kind != Kind::Conjugate && node_->kind != Kind::TargetGateLeft &&
      node_->kind != Kind::TargetGateRight)
    throw std::runtime_error("derivation: gate() on a node without a gate");
  return node_->gate;
}

SymmetryDerivation SymmetryDerivation::inner() const {
  if (node_->kind == Kind::Identity)
    throw std::runtime_error("derivation: inner() on an identity node");
  return SymmetryDerivation(node_->inner);
}

bool SymmetryDerivation::ancilla_value() const {
  if (node_->kind != Kind::Ancilla)
    throw std::runtime_error("derivation: ancilla_value() on a non-ancilla node");
  return node_->anc_value;
}

std::size_t SymmetryDerivation::ancilla_wire() const {
  if (node_->kind != Kind::Ancilla)
    throw std::runtime_error("derivation: ancilla_wire() on a non-ancilla node");
  return node_->anc_wire;
}

const Circuit& SymmetryDerivation::witness() const {
  if (node_->kind != Kind::EquivWitness)
    throw std::runtime_error("derivation: witness() on a non-witness node");
  return *node_->witness;
}

bool SymmetryDerivation::operator==(const SymmetryDerivation& other) const {
  const Node* a = node_.get();
  const Node* b = other.node_.get();
  while (a && b) {
    if (a == b) return true;
    if (a->kind != b->kind || a->n_source != b->n_source || a->n_target != b->n_target)
      return false;
    switch (a->kind) {
      case Kind::Conjugate:
      case Kind::TargetGateLeft:
      case Kind::TargetGateRight:
        if (!(a->gate == b->gate)) return false;
        break;
      case Kind::Ancilla:
        if (a->anc_value != b->anc_value || a->anc_wire != b->anc_wire) return false;
        break;
      case Kind::EquivWitness:
        if (!(*a->witness == *b->witness)) return false;
        break;
      case Kind::Identity:
        return true;
    }
    a = a->inner.get();
    b = b->inner.get();
  }
  return a == b;
}

namespace {

void append_all(Circuit& into, const Circuit& from) {
  for (const GateApp& g : from.gates()) into.append(g);
}

}  // namespace

Circuit realize(const SymmetryDerivation& d) {
  std::size_t n = d.n_wires();
  switch (d.kind()) {
    case SymmetryDerivation::Kind::Identity:
      return id_circ(WireType::qubits(n));
    case SymmetryDerivation::Kind::Conjugate: {
      Circuit r(WireType::qubits(n));
      r.append(d.gate());
      append_all(r, realize(d.inner()));
      r.append(d.gate());
      return r;
    }
    case SymmetryDerivation::Kind::TargetGateLeft: {
      Circuit r(WireType::qubits(n));
      r.append(d.gate());
      append_all(r, realize(d.inner()));
      return r;
    }
    case SymmetryDerivation::Kind::TargetGateRight: {
      Circuit r(WireType::qubits(n));
      append_all(r, realize(d.inner()));
      r.append(d.gate());
      return r;
    }
    case SymmetryDerivation::Kind::Ancilla: {
      Circuit r(WireType::qubits(n));
      r.append(InitGate{d.ancilla_value(), d.ancilla_wire()});
      append_all(r, realize(d.inner()));
      r.append(AssertGate{d.ancilla_value(), d.ancilla_wire()});
      return r;
    }
    case SymmetryDerivation::Kind::EquivWitness:
      return d.witness();
  }
  throw std::runtime_error("realize: unreachable derivation kind");
}

SymmetryDerivation invert(const SymmetryDerivation& d) {
  switch (d.kind()) {
    case SymmetryDerivation::Kind::Identity:
      return d;
    case SymmetryDerivation::Kind::Conjugate:
      return SymmetryDerivation::conjugate(d.gate(), invert(d.inner()));
    case SymmetryDerivation::Kind::TargetGateLeft:
      return SymmetryDerivation::target_gate_right(invert(d.inner()), d.gate());
    case SymmetryDerivation::Kind::TargetGateRight:
      return SymmetryDerivation::target_gate_left(d.gate(), invert(d.inner()));
    case SymmetryDerivation::Kind::Ancilla:
      return SymmetryDerivation::ancilla(d.ancilla_value(), d.ancilla_wire(), invert(d.inner()));
    case SymmetryDerivation::Kind::EquivWitness:
      return SymmetryDerivation::equiv_witness(invert_circuit(d.witness()), invert(d.inner()));
  }
  throw std::runtime_error("invert: unreachable derivation kind");
}

bool check_witnesses(const SymmetryDerivation& d, Tolerance tol) {
  switch (d.kind()) {
    case SymmetryDerivation::Kind::Identity:
      return true;
    case SymmetryDerivation::Kind::EquivWitness:
      if (!circuits_equivalent(d.witness(), realize(d.inner()), SemanticsMode::Unsafe, tol))
        return false;
      return check_witnesses(d.inner(), tol);
    default:
      return check_witnesses(d.inner(), tol);
  }
}

bool noop_on(const Circuit& c, std::size_t i, Tolerance tol) {
  std::size_t n = c.in_size();
  auto all_qubits = [](const std::vector<WireKind>& kinds) {
    for (WireKind k : kinds)
      if (k != WireKind::Qubit) return false;
    return true;
  };
  if (c.in_kinds() != c.out_kinds() || !all_qubits(c.in_kinds()))
    throw std::invalid_argument("noop_on: circuit must map n qubits to the same n qubits");
  if (i >= n) throw std::invalid_argument("noop_on: wire index out of range");
  for (bool b : {false, true}) {
    Circuit probe = in_seq(in_seq(init_at(b, n - 1, i), c), assert_at(b, n, i));
    if (!is_valid(probe, tol).valid) return false;
  }
  return true;
}

bool noop_on_source(const SymmetryDerivation& d, Tolerance tol) {
  Circuit c = realize(d);
  for (std::size_t i = d.n_target(); i < d.n_wires(); ++i)
    if (!noop_on(c, i, tol)) return false;
  return true;
}

Circuit cancel_assert_init(const Circuit& c, Tolerance tol, bool require_pattern) {
  const auto& gates = c.gates();
  const AssertGate* as = gates.size() >= 2 ? std::get_if<AssertGate>(&gates[gates.size() - 2])
                                           : nullptr;
  const InitGate* init = gates.empty() ? nullptr : std::get_if<InitGate>(&gates.back());
  bool matches = as && init && as->value == init->value && as->wire == init->wire;
  if (!matches) {
    if (require_pattern)
      throw std::invalid_argument(
          "cancel_assert_init: circuit does not end with an assert;;init pair on one wire and "
          "value");
    return c;
  }
  Circuit prefix(c.in_type());
  for (std::size_t k = 0; k + 2 < gates.size(); ++k) prefix.append(gates[k]);
  // The cancelled assertion must hold after the prefix on every input.
  Circuit probe = prefix;
  probe.append(*as);
  ValidityReport report = is_valid(probe, tol);
  if (!report.valid)
    throw std::runtime_error("cancel_assert_init: " + gate_to_string(GateApp{*as}) +
                             " does not hold after the prefix (worst trace defect " +
                             std::to_string(report.worst_trace_defect) + ")");
  for (SemanticsMode mode : {SemanticsMode::Safe, SemanticsMode::Unsafe})
    if (!circuits_equivalent(c, prefix, mode, tol))
      throw std::runtime_error(
          "cancel_assert_init: dropping the pair changed the circuit's denotation");
  return prefix;
}

namespace {

std::optional<SymmetryDerivation> peel_range(const std::vector<GateApp>& gates, std::size_t first,
                                             std::size_t last_plus_one, std::size_t n_source,
                                             std::size_t n_target) {
  if (first == last_plus_one) return SymmetryDerivation::identity(n_source, n_target);
  const GateApp& fg = gates[first];
  const GateApp& lg = gates[last_plus_one - 1];
  const auto* fu = std::get_if<UnitaryGate>(&fg);
  const auto* lu = std::get_if<UnitaryGate>(&lg);

  if (last_plus_one - first >= 2) {
    if (fu && lu && *fu == *lu && is_classical_unitary(fu->kind)) {
      auto inner = peel_range(gates, first + 1, last_plus_one - 1, n_source, n_target);
      if (inner) return SymmetryDerivation::conjugate(*fu, std::move(*inner));
    }
    const auto* fi = std::get_if<InitGate>(&fg);
    const auto* la = std::get_if<AssertGate>(&lg);
    if (fi && la && fi->value == la->value && fi->wire == la->wire && fi->wire >= n_target) {
      auto inner = peel_range(gates, first + 1, last_plus_one - 1, n_source + 1, n_target);
      if (inner) return SymmetryDerivation::ancilla(fi->value, fi->wire, std::move(*inner));
    }
  }
  if (fu && is_classical_unitary(fu->kind) && fu->wires.back() < n_target) {
    auto inner = peel_range(gates, first + 1, last_plus_one, n_source, n_target);
    if (inner) return SymmetryDerivation::target_gate_left(*fu, std::move(*inner));
  }
  if (lu && is_classical_unitary(lu->kind) && lu->wires.back() < n_target) {
    auto inner = peel_range(gates, first, last_plus_one - 1, n_source, n_target);
    if (inner) return SymmetryDerivation::target_gate_right(std::move(*inner), *lu);
  }
  return std::nullopt;
}

}  // namespace

std::optional<SymmetryDerivation> peel_symmetric(const Circuit& c, std::size_t n_target) {
  auto all_qubits = [](const std::vector<WireKind>& kinds) {
    for (WireKind k : kinds)
      if (k != WireKind::Qubit) return false;
    return true;
  };
  if (c.in_kinds() != c.out_kinds() || !all_qubits(c.in_kinds()))
    throw std::invalid_argument("peel_symmetric: circuit must map n qubits to the same n qubits");
  if (n_target > c.in_size())
    throw std::invalid_argument("peel_symmetric: target region exceeds the circuit width");
  return peel_range(c.gates(), 0, c.gates().size(), c.in_size() - n_target, n_target);
}

}  // namespace anc
