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

#include "ancillary/corpus.hpp"

#include <algorithm>
#include <optional>
#include <stdexcept>
#include <utility>
#include <variant>

namespace anc {

namespace {

std::size_t pick(std::mt19937_64& rng, std::size_t lo, std::size_t hi) {
  return std::uniform_int_distribution<std::size_t>(lo, hi)(rng);
}

bool coin(std::mt19937_64& rng) { return pick(rng, 0, 1) == 1; }

// random classical unitary on `width` wires, optionally with a fixed target
UnitaryGate random_classical_gate(std::mt19937_64& rng, std::size_t width,
                                  std::optional<std::size_t> target = std::nullopt) {
  std::size_t max_arity = std::min<std::size_t>(width, 3);
  std::size_t arity = pick(rng, 1, max_arity);
  GateKind kind = arity == 1 ? GateKind::X : arity == 2 ? GateKind::CNOT : GateKind::Toffoli;
  std::vector<std::size_t> wires;
  std::size_t t = target ? *target : pick(rng, 0, width - 1);
  while (wires.size() + 1 < arity) {
    std::size_t w = pick(rng, 0, width - 1);
    if (w != t && std::find(wires.begin(), wires.end(), w) == wires.end()) wires.push_back(w);
  }
  wires.push_back(t);
  return UnitaryGate{kind, wires};
}

}  // namespace

std::vector<Bexp> enumerate_bexps(std::size_t max_nodes, const std::vector<std::string>& vars) {
  std::vector<Bexp> all;
  if (max_nodes == 0) return all;
  std::vector<std::vector<Bexp>> by_size(max_nodes + 1);
  for (const auto& v : vars) by_size[1].push_back(Bexp::var(v));
  by_size[1].push_back(Bexp::true_());
  by_size[1].push_back(Bexp::false_());
  for (std::size_t s = 2; s <= max_nodes; ++s) {
    for (const Bexp& b : by_size[s - 1]) by_size[s].push_back(Bexp::not_(b));
    for (std::size_t ls = 1; ls + 1 < s; ++ls) {
      for (const Bexp& l : by_size[ls]) {
        for (const Bexp& r : by_size[s - 1 - ls]) {
          by_size[s].push_back(Bexp::and_(l, r));
          by_size[s].push_back(Bexp::xor_(l, r));
        }
      }
    }
  }
  for (auto& bucket : by_size) {
    for (auto& b : bucket) all.push_back(std::move(b));
  }
  return all;
}

Bexp random_bexp(std::mt19937_64& rng, std::size_t max_depth,
                 const std::vector<std::string>& vars) {
  if (max_depth <= 1) {
    std::size_t k = pick(rng, 0, vars.size() + 1);
    if (k < vars.size()) return Bexp::var(vars[k]);
    return k == vars.size() ? Bexp::true_() : Bexp::false_();
  }
  switch (pick(rng, 0, 5)) {
    case 0:
    case 1:
      return random_bexp(rng, 1, vars);
    case 2:
      return Bexp::not_(random_bexp(rng, max_depth - 1, vars));
    case 3:
    case 4:
      return Bexp::and_(random_bexp(rng, max_depth - 1, vars),
                        random_bexp(rng, max_depth - 1, vars));
    default:
      return Bexp::xor_(random_bexp(rng, max_depth - 1, vars),
                        random_bexp(rng, max_depth - 1, vars));
  }
}

Circuit random_classical_circuit(std::mt19937_64& rng, const ClassicalCircuitParams& p) {
  if (p.n_wires == 0) throw std::invalid_argument("random_classical_circuit: need a wire");
  Circuit c = id_circ(WireType::qubits(p.n_wires));
  if (p.disciplined) {
    // positions of currently open ancillae in the working layout
    std::vector<std::pair<std::size_t, bool>> open;
    auto do_open = [&] {
      std::size_t w = c.out_size();
      std::size_t at = pick(rng, 0, w);
      bool value = coin(rng);
      c.append(InitGate{value, at});
      for (auto& entry : open) {
        if (entry.first >= at) ++entry.first;
      }
      open.emplace_back(at, value);
    };
    auto do_close = [&] {
      std::size_t idx = pick(rng, 0, open.size() - 1);
      auto [at, value] = open[idx];
      open.erase(open.begin() + static_cast<std::ptrdiff_t>(idx));
      c.append(AssertGate{value, at});
      for (auto& entry : open) {
        if (entry.first > at) --entry.first;
      }
    };
    auto is_open = [&](std::size_t w) {
      for (const auto& entry : open) {
        if (entry.first == w) return true;
      }
      return false;
    };
    for (std::size_t step = 0; step < p.n_steps; ++step) {
      std::size_t roll = step == 0 ? 8 : pick(rng, 0, 9);
      if (roll >= 8) {
        do_open();
      } else if (roll >= 6 && !open.empty()) {
        do_close();
      } else {
        // any wire may control, only non-ancilla wires may be written
        std::size_t target = pick(rng, 0, c.out_size() - 1);
        while (is_open(target)) target = pick(rng, 0, c.out_size() - 1);
        c.append(random_classical_gate(rng, c.out_size(), target));
      }
    }
    while (!open.empty()) do_close();
    if (p.sabotage) {
      std::vector<std::size_t> assert_positions;
      const auto& gates = c.gates();
      for (std::size_t i = 0; i < gates.size(); ++i) {
        if (std::holds_alternative<AssertGate>(gates[i])) assert_positions.push_back(i);
      }
      std::size_t chosen = assert_positions[pick(rng, 0, assert_positions.size() - 1)];
      Circuit broken(c.in_type());
      for (std::size_t i = 0; i < gates.size(); ++i) {
        GateApp g = gates[i];
        if (i == chosen) {
          auto a = std::get<AssertGate>(g);
          g = AssertGate{!a.value, a.wire};
        }
        broken.append(std::move(g));
      }
      return broken;
    }
    return c;
  }
  // undisciplined: anything goes, as long as a wire remains
  for (std::size_t step = 0; step < p.n_steps; ++step) {
    std::size_t w = c.out_size();
    std::size_t roll = pick(rng, 0, 9);
    if (roll >= 8) {
      c.append(InitGate{coin(rng), pick(rng, 0, w)});
    } else if (roll >= 6 && w >= 2) {
      c.append(AssertGate{coin(rng), pick(rng, 0, w - 1)});
    } else {
      c.append(random_classical_gate(rng, w));
    }
  }
  return c;
}

Circuit random_cancellable_circuit(std::mt19937_64& rng, bool valid_prefix) {
  ClassicalCircuitParams p;
  p.n_wires = pick(rng, 1, 3);
  p.n_steps = pick(rng, 3, 7);
  Circuit c = random_classical_circuit(rng, p);
  if (!std::holds_alternative<AssertGate>(c.gates().back())) {
    std::size_t at = pick(rng, 0, c.out_size());
    bool value = coin(rng);
    c.append(InitGate{value, at});
    c.append(AssertGate{value, at});
  }
  AssertGate last = std::get<AssertGate>(c.gates().back());
  if (valid_prefix) {
    c.append(InitGate{last.value, last.wire});
    return c;
  }
  // flip the trailing assert so the prefix can never satisfy it, keeping
  // the assert/init pattern intact
  Circuit broken(c.in_type());
  const auto& gates = c.gates();
  for (std::size_t i = 0; i + 1 < gates.size(); ++i) broken.append(gates[i]);
  broken.append(AssertGate{!last.value, last.wire});
  broken.append(InitGate{!last.value, last.wire});
  return broken;
}

Circuit random_any_circuit(std::mt19937_64& rng) {
  std::size_t nq = pick(rng, 1, 4);
  std::size_t nb = 0;
  Circuit c = id_circ(WireType::qubits(nq));
  std::size_t steps = pick(rng, 3, 10);
  for (std::size_t step = 0; step < steps; ++step) {
    switch (pick(rng, 0, 9)) {
      case 0:
        c.append(InitGate{coin(rng), pick(rng, 0, nq)});
        ++nq;
        break;
      case 1:
        if (nq >= 2) {
          c.append(AssertGate{coin(rng), pick(rng, 0, nq - 1)});
          --nq;
        }
        break;
      case 2:
        // only the trailing qubit may be measured, keeping qubits ahead of
        // bits in the layout
        if (nq >= 2) {
          c.append(MeasGate{nq - 1});
          --nq;
          ++nb;
        }
        break;
      case 3:
        if (nb >= 1) {
          c.append(DiscardGate{pick(rng, nq, nq + nb - 1)});
          --nb;
        }
        break;
      case 4: {
        GateKind kind = coin(rng) ? GateKind::H : GateKind::Z;
        c.append(UnitaryGate{kind, {pick(rng, 0, nq - 1)}});
        break;
      }
      default: {
        // classical unitary; controls may sit on bit wires
        std::size_t width = nq + nb;
        std::size_t max_arity = std::min<std::size_t>(width, 3);
        std::size_t arity = pick(rng, 1, max_arity);
        GateKind kind =
            arity == 1 ? GateKind::X : arity == 2 ? GateKind::CNOT : GateKind::Toffoli;
        std::size_t target = pick(rng, 0, nq - 1);
        std::vector<std::size_t> wires;
        while (wires.size() + 1 < arity) {
          std::size_t w = pick(rng, 0, width - 1);
          if (w != target && std::find(wires.begin(), wires.end(), w) == wires.end()) {
            wires.push_back(w);
          }
        }
        wires.push_back(target);
        c.append(UnitaryGate{kind, wires});
        break;
      }
    }
  }
  return c;
}

namespace {

SymmetryDerivation random_derivation_at(std::mt19937_64& rng, std::size_t ns, std::size_t nt,
                                        std::size_t depth, std::size_t budget) {
  std::size_t width = ns + nt;
  if (depth == 0) return SymmetryDerivation::identity(ns, nt);
  switch (pick(rng, 0, 9)) {
    case 0:
      return SymmetryDerivation::identity(ns, nt);
    case 1:
    case 2: {
      if (width == 0) break;
      // Keep conjugating gates in the regime where the sandwich provably
      // cancels on every source: either the gate writes a target wire, or it
      // stays entirely inside the source region. A gate that writes a source
      // under a target control is the open case of the no-op conjecture and
      // breaks the inverse and validity theorems once an ancilla closes over
      // that source.
      UnitaryGate g;
      if (nt > 0 && (ns == 0 || coin(rng))) {
        g = random_classical_gate(rng, width, pick(rng, 0, nt - 1));
      } else {
        g = random_classical_gate(rng, ns);
        for (std::size_t& w : g.wires) w += nt;
      }
      return SymmetryDerivation::conjugate(
          std::move(g), random_derivation_at(rng, ns, nt, depth - 1, budget));
    }
    case 3:
    case 4: {
      if (nt == 0) break;
      UnitaryGate g = random_classical_gate(rng, width, pick(rng, 0, nt - 1));
      SymmetryDerivation inner = random_derivation_at(rng, ns, nt, depth - 1, budget);
      return coin(rng) ? SymmetryDerivation::target_gate_left(g, inner)
                       : SymmetryDerivation::target_gate_right(inner, g);
    }
    case 5: {
      SymmetryDerivation inner = random_derivation_at(rng, ns, nt, depth - 1, budget);
      Circuit witness = realize(inner);
      if (width >= 1 && coin(rng)) {
        // a canceling pair keeps the witness equivalent but distinct
        std::size_t at = pick(rng, 0, width - 1);
        witness.append(UnitaryGate{GateKind::X, {at}});
        witness.append(UnitaryGate{GateKind::X, {at}});
      }
      return SymmetryDerivation::equiv_witness(std::move(witness), inner);
    }
    default: {
      if (budget == 0) break;
      std::size_t wire = pick(rng, nt, nt + ns);
      return SymmetryDerivation::ancilla(
          coin(rng), wire, random_derivation_at(rng, ns + 1, nt, depth - 1, budget - 1));
    }
  }
  return random_derivation_at(rng, ns, nt, depth - 1, budget);
}

}  // namespace

SymmetryDerivation random_derivation(std::mt19937_64& rng, std::size_t max_depth,
                                     std::size_t max_wires) {
  if (max_wires == 0) throw std::invalid_argument("random_derivation: need a wire");
  std::size_t nt = pick(rng, 0, std::min<std::size_t>(2, max_wires));
  std::size_t ns = pick(rng, nt == 0 ? 1 : 0, std::min<std::size_t>(2, max_wires - nt));
  return random_derivation_at(rng, ns, nt, max_depth, max_wires - nt - ns);
}

}  // namespace anc
