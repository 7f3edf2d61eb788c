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

#include "ancillary/validity.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace anc {

namespace {

detail::SparseDensity unit_state(std::size_t n_wires, std::uint64_t row, std::uint64_t col) {
  detail::SparseDensity s;
  s.n_wires = n_wires;
  s.entries.emplace((row << 32) | col, cplx{1.0, 0.0});
  return s;
}

// Largest entrywise difference between two sparse states on the same width.
double sparse_max_diff(const detail::SparseDensity& a, const detail::SparseDensity& b) {
  double worst = 0.0;
  for (const auto& [key, va] : a.entries) {
    auto it = b.entries.find(key);
    cplx vb = it == b.entries.end() ? cplx{} : it->second;
    worst = std::max(worst, std::abs(va - vb));
  }
  for (const auto& [key, vb] : b.entries)
    if (!a.entries.count(key)) worst = std::max(worst, std::abs(vb));
  return worst;
}

void require_same_kinds(const Circuit& a, const Circuit& b, const char* who) {
  if (a.in_kinds() != b.in_kinds() || a.out_kinds() != b.out_kinds())
    throw std::invalid_argument(std::string(who) +
                                ": circuits act on different wire kinds, so the maps are not "
                                "comparable");
}

}  // namespace

ValidityReport is_valid(const Circuit& c, Tolerance tol) {
  std::size_t in_w = c.in_size();
  std::size_t out_w = c.out_size();
  // Pull the identity on the output space backward through the adjoint of
  // each gate's unsafe channel. The circuit is valid exactly when the
  // result is the identity on the input space.
  detail::SparseDensity s;
  s.n_wires = out_w;
  std::uint64_t dout = std::uint64_t{1} << out_w;
  for (std::uint64_t r = 0; r < dout; ++r) s.entries.emplace((r << 32) | r, cplx{1.0, 0.0});
  const auto& gates = c.gates();
  for (auto it = gates.rbegin(); it != gates.rend(); ++it)
    detail::apply_gate_adjoint_unsafe(s, *it);
  if (s.n_wires != in_w)
    throw std::runtime_error("is_valid: backward pass ended on the wrong width");

  ValidityReport report{true, 0.0, std::nullopt};
  auto note = [&](std::uint64_t row, std::uint64_t col, double defect) {
    if (defect > report.worst_trace_defect) {
      report.worst_trace_defect = defect;
      report.witness = std::make_pair(row, col);
    }
  };
  std::uint64_t din = std::uint64_t{1} << in_w;
  for (std::uint64_t r = 0; r < din; ++r) {
    auto it = s.entries.find((r << 32) | r);
    cplx v = it == s.entries.end() ? cplx{} : it->second;
    note(r, r, std::abs(v - cplx{1.0, 0.0}));
  }
  for (const auto& [key, v] : s.entries) {
    std::uint64_t row = key >> 32, col = key & 0xffffffffu;
    if (row != col) note(row, col, std::abs(v));
  }
  report.valid = report.worst_trace_defect <= tol.eps;
  if (report.valid) report.witness.reset();
  return report;
}

bool semantics_agree(const Circuit& c, Tolerance tol) {
  std::uint64_t din = std::uint64_t{1} << c.in_size();
  for (std::uint64_t r = 0; r < din; ++r)
    for (std::uint64_t col = 0; col < din; ++col) {
      auto safe = detail::denote_sparse(c, unit_state(c.in_size(), r, col), SemanticsMode::Safe);
      auto unsafe =
          detail::denote_sparse(c, unit_state(c.in_size(), r, col), SemanticsMode::Unsafe);
      if (sparse_max_diff(safe, unsafe) > tol.eps) return false;
    }
  return true;
}

bool circuits_equivalent(const Circuit& a, const Circuit& b, SemanticsMode mode, Tolerance tol) {
  require_same_kinds(a, b, "circuits_equivalent");
  std::uint64_t din = std::uint64_t{1} << a.in_size();
  for (std::uint64_t r = 0; r < din; ++r)
    for (std::uint64_t col = 0; col < din; ++col) {
      auto ia = detail::denote_sparse(a, unit_state(a.in_size(), r, col), mode);
      auto ib = detail::denote_sparse(b, unit_state(b.in_size(), r, col), mode);
      if (sparse_max_diff(ia, ib) > tol.eps) return false;
    }
  return true;
}

bool is_self_inverse(const Circuit& c, SemanticsMode mode, Tolerance tol) {
  if (c.out_kinds() != c.in_kinds())
    throw std::invalid_argument(
        "is_self_inverse: output wire kinds differ from input wire kinds");
  std::uint64_t din = std::uint64_t{1} << c.in_size();
  for (std::uint64_t r = 0; r < din; ++r)
    for (std::uint64_t col = 0; col < din; ++col) {
      auto once = detail::denote_sparse(c, unit_state(c.in_size(), r, col), mode);
      auto twice = detail::denote_sparse(c, std::move(once), mode);
      if (sparse_max_diff(twice, unit_state(c.in_size(), r, col)) > tol.eps) return false;
    }
  return true;
}

bool check_reversible_implies_valid(const Circuit& c, const Circuit& c_inv, Tolerance tol) {
  Circuit forward = in_seq(c, c_inv);
  Circuit backward = in_seq(c_inv, c);
  Circuit id_in = id_circ(WireType::of_kinds(c.in_kinds()));
  Circuit id_out = id_circ(WireType::of_kinds(c_inv.in_kinds()));
  if (!circuits_equivalent(forward, id_in, SemanticsMode::Unsafe, tol)) return false;
  if (!circuits_equivalent(backward, id_out, SemanticsMode::Unsafe, tol)) return false;
  return is_valid(c, tol).valid;
}

}  // namespace anc
