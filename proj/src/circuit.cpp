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

#include "ancillary/circuit.hpp"

#include <sstream>
#include <stdexcept>

namespace anc {

const char* gate_kind_name(GateKind k) {
  switch (k) {
    case GateKind::X:
      return "X";
    case GateKind::H:
      return "H";
    case GateKind::Z:
      return "Z";
    case GateKind::CNOT:
      return "CNOT";
    case GateKind::Toffoli:
      return "Toffoli";
  }
  return "?";
}

std::size_t gate_kind_arity(GateKind k) {
  switch (k) {
    case GateKind::X:
    case GateKind::H:
    case GateKind::Z:
      return 1;
    case GateKind::CNOT:
      return 2;
    case GateKind::Toffoli:
      return 3;
  }
  return 0;
}

bool is_classical_unitary(GateKind k) {
  return k == GateKind::X || k == GateKind::CNOT || k == GateKind::Toffoli;
}

std::string gate_to_string(const GateApp& g) {
  std::ostringstream os;
  if (const auto* u = std::get_if<UnitaryGate>(&g)) {
    os << gate_kind_name(u->kind) << "(";
    for (std::size_t i = 0; i < u->wires.size(); ++i) {
      os << (i ? "," : "") << u->wires[i];
    }
    os << ")";
  } else if (const auto* init = std::get_if<InitGate>(&g)) {
    os << "init(" << (init->value ? "true" : "false") << "@" << init->wire << ")";
  } else if (const auto* m = std::get_if<MeasGate>(&g)) {
    os << "meas(" << m->wire << ")";
  } else if (const auto* d = std::get_if<DiscardGate>(&g)) {
    os << "discard(" << d->wire << ")";
  } else if (const auto* a = std::get_if<AssertGate>(&g)) {
    os << "assert(" << (a->value ? "true" : "false") << "@" << a->wire << ")";
  }
  return os.str();
}

Circuit::Circuit(WireType in)
    : in_type_(in), out_type_(in), in_kinds_(in.flatten()), out_kinds_(in_kinds_) {}

namespace {

[[noreturn]] void bad_gate(const GateApp& g, const std::string& why) {
  throw std::invalid_argument("circuit: " + gate_to_string(g) + ": " + why);
}

}  // namespace

Circuit& Circuit::append(GateApp g) {
  const std::size_t n = out_kinds_.size();
  if (const auto* u = std::get_if<UnitaryGate>(&g)) {
    if (u->wires.size() != gate_kind_arity(u->kind)) {
      bad_gate(g, "wrong operand count");
    }
    for (std::size_t i = 0; i < u->wires.size(); ++i) {
      if (u->wires[i] >= n) {
        bad_gate(g, "wire index out of range");
      }
      for (std::size_t j = i + 1; j < u->wires.size(); ++j) {
        if (u->wires[i] == u->wires[j]) {
          bad_gate(g, "repeated wire index");
        }
      }
    }
    // The last operand is the target; CNOT/Toffoli controls may be classical
    // bits, so only the target's kind is constrained.
    const std::size_t target = u->wires.back();
    if (out_kinds_[target] != WireKind::Qubit) {
      bad_gate(g, "unitary target must be a qubit wire");
    }
  } else if (const auto* init = std::get_if<InitGate>(&g)) {
    if (init->wire > n) {
      bad_gate(g, "insert position out of range");
    }
    out_kinds_.insert(out_kinds_.begin() + static_cast<std::ptrdiff_t>(init->wire),
                      WireKind::Qubit);
  } else if (const auto* m = std::get_if<MeasGate>(&g)) {
    if (m->wire >= n) {
      bad_gate(g, "wire index out of range");
    }
    if (out_kinds_[m->wire] != WireKind::Qubit) {
      bad_gate(g, "meas expects a qubit wire");
    }
    out_kinds_[m->wire] = WireKind::Bit;
  } else if (const auto* d = std::get_if<DiscardGate>(&g)) {
    if (d->wire >= n) {
      bad_gate(g, "wire index out of range");
    }
    if (out_kinds_[d->wire] != WireKind::Bit) {
      bad_gate(g, "discard expects a classical bit wire");
    }
    out_kinds_.erase(out_kinds_.begin() + static_cast<std::ptrdiff_t>(d->wire));
  } else if (const auto* a = std::get_if<AssertGate>(&g)) {
    if (a->wire >= n) {
      bad_gate(g, "wire index out of range");
    }
    if (out_kinds_[a->wire] != WireKind::Qubit) {
      bad_gate(g, "assert expects a qubit wire");
    }
    out_kinds_.erase(out_kinds_.begin() + static_cast<std::ptrdiff_t>(a->wire));
  }
  gates_.push_back(std::move(g));
  out_type_ = WireType::of_kinds(out_kinds_);
  return *this;
}

bool Circuit::operator==(const Circuit& other) const {
  return in_kinds_ == other.in_kinds_ && out_kinds_ == other.out_kinds_ &&
         gates_ == other.gates_;
}

Circuit id_circ(const WireType& w) { return Circuit(w); }

Circuit in_seq(const Circuit& c1, const Circuit& c2) {
  if (c1.out_kinds() != c2.in_kinds()) {
    throw std::invalid_argument("in_seq: output/input wire kinds disagree");
  }
  Circuit out(c1.in_type());
  for (const GateApp& g : c1.gates()) {
    out.append(g);
  }
  for (const GateApp& g : c2.gates()) {
    out.append(g);
  }
  return out;
}

namespace {

GateApp offset_gate(const GateApp& g, std::size_t off) {
  GateApp out = g;
  if (auto* u = std::get_if<UnitaryGate>(&out)) {
    for (std::size_t& w : u->wires) {
      w += off;
    }
  } else if (auto* init = std::get_if<InitGate>(&out)) {
    init->wire += off;
  } else if (auto* m = std::get_if<MeasGate>(&out)) {
    m->wire += off;
  } else if (auto* d = std::get_if<DiscardGate>(&out)) {
    d->wire += off;
  } else if (auto* a = std::get_if<AssertGate>(&out)) {
    a->wire += off;
  }
  return out;
}

}  // namespace

Circuit in_par(const Circuit& c1, const Circuit& c2) {
  Circuit out(WireType::tensor(c1.in_type(), c2.in_type()));
  for (const GateApp& g : c1.gates()) {
    out.append(g);
  }
  // c1 has finished by the time c2's gates run, so its block occupies
  // out_size(c1) wires and every c2 index shifts past it.
  const std::size_t off = c1.out_size();
  for (const GateApp& g : c2.gates()) {
    out.append(offset_gate(g, off));
  }
  return out;
}

namespace {

Circuit single_unitary(std::size_t n, GateKind k, std::vector<std::size_t> wires) {
  Circuit c(WireType::qubits(n));
  c.append(UnitaryGate{k, std::move(wires)});
  return c;
}

}  // namespace

Circuit X_at(std::size_t n, std::size_t i) { return single_unitary(n, GateKind::X, {i}); }

Circuit H_at(std::size_t n, std::size_t i) { return single_unitary(n, GateKind::H, {i}); }

Circuit Z_at(std::size_t n, std::size_t i) { return single_unitary(n, GateKind::Z, {i}); }

Circuit CNOT_at(std::size_t n, std::size_t control, std::size_t target) {
  return single_unitary(n, GateKind::CNOT, {control, target});
}

Circuit Toffoli_at(std::size_t n, std::size_t c1, std::size_t c2, std::size_t target) {
  return single_unitary(n, GateKind::Toffoli, {c1, c2, target});
}

Circuit init_at(bool value, std::size_t n, std::size_t i) {
  Circuit c(WireType::qubits(n));
  c.append(InitGate{value, i});
  return c;
}

Circuit assert_at(bool value, std::size_t n, std::size_t i) {
  Circuit c(WireType::qubits(n));
  c.append(AssertGate{value, i});
  return c;
}

}  // namespace anc
