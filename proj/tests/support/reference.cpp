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

#include "support/reference.hpp"

#include <cmath>
#include <cstdint>
#include <stdexcept>
#include <variant>
#include <vector>

namespace anc::testref {

namespace {

// wire 0 is the most significant bit of a basis index
std::vector<int> to_bits(std::uint64_t r, std::size_t n) {
  std::vector<int> bits(n);
  for (std::size_t i = 0; i < n; ++i) bits[i] = (r >> (n - 1 - i)) & 1;
  return bits;
}

std::uint64_t from_bits(const std::vector<int>& bits) {
  std::uint64_t r = 0;
  for (int b : bits) r = (r << 1) | static_cast<std::uint64_t>(b);
  return r;
}

std::uint64_t dim_of(std::size_t n) { return std::uint64_t{1} << n; }

CMatrix sandwich(const CMatrix& m, const CMatrix& rho) {
  return matmul(matmul(m, rho), adjoint(m));
}

CMatrix unitary_matrix(const UnitaryGate& g, std::size_t n) {
  std::uint64_t d = dim_of(n);
  if (g.kind == GateKind::H) {
    CMatrix h2(2, 2);
    double s = 1.0 / std::sqrt(2.0);
    h2.at(0, 0) = s;
    h2.at(0, 1) = s;
    h2.at(1, 0) = s;
    h2.at(1, 1) = -s;
    std::size_t i = g.wires[0];
    return kron(kron(CMatrix::identity(dim_of(i)), h2), CMatrix::identity(dim_of(n - 1 - i)));
  }
  if (g.kind == GateKind::Z) {
    CMatrix m(d, d);
    for (std::uint64_t r = 0; r < d; ++r) {
      m.at(r, r) = to_bits(r, n)[g.wires[0]] ? -1.0 : 1.0;
    }
    return m;
  }
  CMatrix m(d, d);
  for (std::uint64_t r = 0; r < d; ++r) {
    std::vector<int> bits = to_bits(r, n);
    switch (g.kind) {
      case GateKind::X:
        bits[g.wires[0]] ^= 1;
        break;
      case GateKind::CNOT:
        if (bits[g.wires[0]]) bits[g.wires[1]] ^= 1;
        break;
      case GateKind::Toffoli:
        if (bits[g.wires[0]] && bits[g.wires[1]]) bits[g.wires[2]] ^= 1;
        break;
      default:
        throw std::runtime_error("reference: unhandled unitary");
    }
    m.at(from_bits(bits), r) = 1.0;
  }
  return m;
}

// 2^(n+1) x 2^n embedding that slots |value> in as wire i
CMatrix insert_matrix(std::size_t n, std::size_t i, bool value) {
  CMatrix m(dim_of(n + 1), dim_of(n));
  for (std::uint64_t r = 0; r < dim_of(n); ++r) {
    std::vector<int> bits = to_bits(r, n);
    bits.insert(bits.begin() + static_cast<std::ptrdiff_t>(i), value ? 1 : 0);
    m.at(from_bits(bits), r) = 1.0;
  }
  return m;
}

// 2^(n-1) x 2^n partial isometry keeping the rows where wire i reads
// `value` and dropping the wire
CMatrix project_out_matrix(std::size_t n, std::size_t i, bool value) {
  CMatrix m(dim_of(n - 1), dim_of(n));
  for (std::uint64_t r = 0; r < dim_of(n); ++r) {
    std::vector<int> bits = to_bits(r, n);
    if (bits[i] != (value ? 1 : 0)) continue;
    bits.erase(bits.begin() + static_cast<std::ptrdiff_t>(i));
    m.at(from_bits(bits), r) = 1.0;
  }
  return m;
}

// diagonal projector onto wire i reading `value`
CMatrix keep_matrix(std::size_t n, std::size_t i, bool value) {
  CMatrix m(dim_of(n), dim_of(n));
  for (std::uint64_t r = 0; r < dim_of(n); ++r) {
    if (to_bits(r, n)[i] == (value ? 1 : 0)) m.at(r, r) = 1.0;
  }
  return m;
}

CMatrix trace_out(const CMatrix& rho, std::size_t n, std::size_t i) {
  CMatrix b0 = project_out_matrix(n, i, false);
  CMatrix b1 = project_out_matrix(n, i, true);
  return add(sandwich(b0, rho), sandwich(b1, rho));
}

}  // namespace

CMatrix denote_reference(const Circuit& c, const CMatrix& rho, SemanticsMode mode) {
  std::size_t n = c.in_size();
  if (rho.rows() != dim_of(n) || rho.cols() != dim_of(n)) {
    throw std::invalid_argument("reference: input dimension mismatch");
  }
  CMatrix cur = rho;
  for (const GateApp& gate : c.gates()) {
    if (const auto* u = std::get_if<UnitaryGate>(&gate)) {
      cur = sandwich(unitary_matrix(*u, n), cur);
    } else if (const auto* init = std::get_if<InitGate>(&gate)) {
      cur = sandwich(insert_matrix(n, init->wire, init->value), cur);
      ++n;
    } else if (const auto* meas = std::get_if<MeasGate>(&gate)) {
      cur = add(sandwich(keep_matrix(n, meas->wire, false), cur),
                sandwich(keep_matrix(n, meas->wire, true), cur));
    } else if (const auto* discard = std::get_if<DiscardGate>(&gate)) {
      cur = trace_out(cur, n, discard->wire);
      --n;
    } else {
      const auto& assert_gate = std::get<AssertGate>(gate);
      if (mode == SemanticsMode::Unsafe) {
        cur = sandwich(project_out_matrix(n, assert_gate.wire, assert_gate.value), cur);
      } else {
        cur = trace_out(cur, n, assert_gate.wire);
      }
      --n;
    }
  }
  return cur;
}

}  // namespace anc::testref
