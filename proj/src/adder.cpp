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

#include "ancillary/adder.hpp"

#include <stdexcept>
#include <string>
#include <vector>

#include "ancillary/oracle_compiler.hpp"
#include "ancillary/semantics.hpp"

namespace anc {

VarContext AdderLayout::context() const {
  std::vector<std::string> names;
  names.reserve(wires());
  names.push_back("cout");
  for (std::size_t k = n; k > 0; --k) {
    names.push_back("sum_" + std::to_string(k));
    names.push_back("y_" + std::to_string(k));
    names.push_back("x_" + std::to_string(k));
  }
  names.push_back("cin");
  return VarContext(names);
}

Circuit adder_sum_circ() {
  Bexp x = Bexp::var("x");
  Bexp y = Bexp::var("y");
  Bexp cin = Bexp::var("cin");
  Bexp sum = Bexp::xor_(Bexp::xor_(x, y), cin);
  return compile_bexp(sum, VarContext({"y", "x", "cin"})).circuit;
}

Circuit adder_carry_circ() {
  Bexp x = Bexp::var("x");
  Bexp y = Bexp::var("y");
  Bexp cin = Bexp::var("cin");
  Bexp carry = Bexp::xor_(Bexp::and_(cin, Bexp::xor_(x, y)), Bexp::and_(x, y));
  // sum rides along as an untouched variable so the oracle spans the full
  // 5-wire stage layout
  return compile_bexp(carry, VarContext({"sum", "y", "x", "cin"})).circuit;
}

Circuit adder_1() {
  return in_seq(adder_carry_circ(), in_par(id_circ(WireType::qubits(1)), adder_sum_circ()));
}

Circuit adder_left(std::size_t n) {
  if (n == 0) return id_circ(WireType::qubit());
  Circuit c = in_par(id_circ(WireType::qubits(3)), adder_left(n - 1));
  c = in_seq(c, init_at(false, 4 * n, 0));
  return in_seq(c, in_par(adder_1(), id_circ(WireType::qubits(4 * (n - 1)))));
}

Circuit adder_right(std::size_t n) {
  if (n == 0) return id_circ(WireType::qubit());
  Circuit c = in_par(adder_carry_circ(), id_circ(WireType::qubits(4 * (n - 1))));
  c = in_seq(c, assert_at(false, 4 * n + 1, 0));
  return in_seq(c, in_par(id_circ(WireType::qubits(3)), adder_right(n - 1)));
}

Circuit adder_circ(std::size_t n) {
  if (n == 0) return id_circ(WireType::qubits(2));
  Circuit c = in_par(id_circ(WireType::qubits(4)), adder_left(n - 1));
  c = in_seq(c, in_par(adder_1(), id_circ(WireType::qubits(4 * (n - 1)))));
  return in_seq(c, in_par(id_circ(WireType::qubits(4)), adder_right(n - 1)));
}

Valuation compute_adder_n(std::size_t n, const Valuation& f) {
  Valuation out = f;
  if (n == 0) return out;
  bool c = f.at("cin");
  for (std::size_t k = 1; k <= n; ++k) {
    std::string suffix = std::to_string(k);
    bool x = f.at("x_" + suffix);
    bool y = f.at("y_" + suffix);
    bool s = f.at("sum_" + suffix);
    out.set("sum_" + suffix, s != (x != (y != c)));
    c = (c && (x != y)) != (x && y);
  }
  out.set("cout", f.at("cout") != c);
  return out;
}

bool check_adder_spec(std::size_t n, Tolerance tol) {
  if (n > 5) throw std::invalid_argument("check_adder_spec: exhaustive check capped at n = 5");
  AdderLayout layout{n};
  VarContext ctx = layout.context();
  Circuit c = adder_circ(n);
  std::size_t w = layout.wires();
  for (std::uint64_t v = 0; v < (std::uint64_t{1} << w); ++v) {
    std::vector<bool> bits(w);
    for (std::size_t i = 0; i < w; ++i) bits[i] = (v >> i) & 1;
    Valuation f = Valuation::from_bits(ctx, bits);
    Valuation expect = compute_adder_n(n, f);
    if (n <= 2) {
      DensityMatrix in = ctx_to_matrix(ctx, f);
      DensityMatrix want = ctx_to_matrix(ctx, expect);
      for (SemanticsMode mode : {SemanticsMode::Safe, SemanticsMode::Unsafe}) {
        if (max_abs_diff(denote(c, in, mode).mat, want.mat) > tol.eps) return false;
      }
    } else {
      BasisResult got = denote_basis(c, bits);
      if (!got.valid) return false;
      for (std::size_t i = 0; i < w; ++i) {
        if (got.bits[i] != expect.at(ctx.names()[i])) return false;
      }
    }
  }
  return true;
}

AdderRun run_adder(std::size_t n, std::uint64_t x, std::uint64_t y, bool cin) {
  if (n < 1 || n > 32) throw std::invalid_argument("run_adder: n must be between 1 and 32");
  if ((x >> n) != 0 || (y >> n) != 0) {
    throw std::invalid_argument("run_adder: operand exceeds n bits");
  }
  AdderLayout layout{n};
  std::vector<bool> bits(layout.wires(), false);
  for (std::size_t k = 1; k <= n; ++k) {
    std::size_t sum_pos = 1 + 3 * (n - k);
    bits[sum_pos + 1] = ((y >> (k - 1)) & 1) != 0;
    bits[sum_pos + 2] = ((x >> (k - 1)) & 1) != 0;
  }
  bits[1 + 3 * n] = cin;
  BasisResult r = denote_basis(adder_circ(n), bits);
  AdderRun out{0, r.bits[0], r.valid};
  for (std::size_t k = 1; k <= n; ++k) {
    if (r.bits[1 + 3 * (n - k)]) out.sum |= std::uint64_t{1} << (k - 1);
  }
  return out;
}

}  // namespace anc
