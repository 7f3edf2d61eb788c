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

#include "ancillary/semantics.hpp"

#include <cmath>
#include <stdexcept>
#include <string>

namespace anc {

namespace {

constexpr std::size_t kMaxSparseWires = 30;

std::size_t dim_of(std::size_t n_wires) {
  if (n_wires > kMaxSparseWires)
    throw std::invalid_argument("semantics: circuit needs " + std::to_string(n_wires) +
                                " live wires, beyond the supported " +
                                std::to_string(kMaxSparseWires));
  return std::size_t{1} << n_wires;
}

// Wire i of n sits at bit position n-1-i, so wire 0 is the most significant
// bit, matching the Kronecker order of the dense representation.
std::uint64_t wire_mask(std::size_t n, std::size_t i) { return std::uint64_t{1} << (n - 1 - i); }

bool bit_at(std::uint64_t index, std::size_t n, std::size_t i) {
  return (index >> (n - 1 - i)) & 1u;
}

// Inserts bit b as new wire i into an n-wire basis index.
std::uint64_t insert_bit(std::uint64_t r, std::size_t n, std::size_t i, bool b) {
  std::uint64_t low_mask = (std::uint64_t{1} << (n - i)) - 1;
  std::uint64_t low = r & low_mask;
  std::uint64_t high = r >> (n - i);
  return (high << (n + 1 - i)) | (std::uint64_t{b} << (n - i)) | low;
}

// Drops wire i from an n-wire basis index.
std::uint64_t remove_bit(std::uint64_t r, std::size_t n, std::size_t i) {
  std::size_t pos = n - 1 - i;
  std::uint64_t low = r & ((std::uint64_t{1} << pos) - 1);
  std::uint64_t high = r >> (pos + 1);
  return (high << pos) | low;
}

std::uint64_t key_of(std::uint64_t row, std::uint64_t col) { return (row << 32) | col; }
std::uint64_t row_of(std::uint64_t key) { return key >> 32; }
std::uint64_t col_of(std::uint64_t key) { return key & 0xffffffffu; }

using Entries = std::map<std::uint64_t, cplx>;

// Rebuilds the map through a basis permutation applied to rows and columns.
template <typename Perm>
void permute_keys(detail::SparseDensity& s, Perm&& perm) {
  Entries out;
  for (const auto& [key, v] : s.entries) out.emplace(key_of(perm(row_of(key)), perm(col_of(key))), v);
  s.entries = std::move(out);
}

void apply_x(detail::SparseDensity& s, std::size_t wire) {
  std::uint64_t m = wire_mask(s.n_wires, wire);
  permute_keys(s, [m](std::uint64_t r) { return r ^ m; });
}

void apply_cnot(detail::SparseDensity& s, std::size_t control, std::size_t target) {
  std::uint64_t mc = wire_mask(s.n_wires, control);
  std::uint64_t mt = wire_mask(s.n_wires, target);
  permute_keys(s, [mc, mt](std::uint64_t r) { return (r & mc) ? (r ^ mt) : r; });
}

void apply_toffoli(detail::SparseDensity& s, std::size_t c1, std::size_t c2, std::size_t target) {
  std::uint64_t m1 = wire_mask(s.n_wires, c1);
  std::uint64_t m2 = wire_mask(s.n_wires, c2);
  std::uint64_t mt = wire_mask(s.n_wires, target);
  permute_keys(s, [m1, m2, mt](std::uint64_t r) {
    return ((r & m1) && (r & m2)) ? (r ^ mt) : r;
  });
}

void apply_z(detail::SparseDensity& s, std::size_t wire) {
  std::uint64_t m = wire_mask(s.n_wires, wire);
  for (auto& [key, v] : s.entries) {
    bool rb = (row_of(key) & m) != 0;
    bool cb = (col_of(key) & m) != 0;
    if (rb != cb) v = -v;
  }
}

// Conjugation by a Hadamard on one wire: every entry fans out to the four
// combinations of the row and column bit, each weighted by an exact +-1/2.
void apply_h(detail::SparseDensity& s, std::size_t wire) {
  std::uint64_t m = wire_mask(s.n_wires, wire);
  Entries out;
  for (const auto& [key, v] : s.entries) {
    std::uint64_t r = row_of(key);
    std::uint64_t c = col_of(key);
    bool rb = (r & m) != 0;
    bool cb = (c & m) != 0;
    for (int rt = 0; rt < 2; ++rt) {
      for (int ct = 0; ct < 2; ++ct) {
        double sign = ((rt && rb) != (ct && cb)) ? -1.0 : 1.0;
        std::uint64_t nr = rt ? (r | m) : (r & ~m);
        std::uint64_t nc = ct ? (c | m) : (c & ~m);
        out[key_of(nr, nc)] += v * (sign * 0.5);
      }
    }
  }
  s.entries = std::move(out);
}

void apply_init(detail::SparseDensity& s, std::size_t wire, bool value) {
  std::size_t n = s.n_wires;
  dim_of(n + 1);
  Entries out;
  for (const auto& [key, v] : s.entries)
    out.emplace(key_of(insert_bit(row_of(key), n, wire, value),
                       insert_bit(col_of(key), n, wire, value)),
                v);
  s.entries = std::move(out);
  s.n_wires = n + 1;
}

// Traces out wire i: keeps entries whose row and column agree there and
// accumulates them at the narrowed index.
void apply_trace_out(detail::SparseDensity& s, std::size_t wire) {
  std::size_t n = s.n_wires;
  Entries out;
  for (const auto& [key, v] : s.entries) {
    std::uint64_t r = row_of(key);
    std::uint64_t c = col_of(key);
    if (bit_at(r, n, wire) != bit_at(c, n, wire)) continue;
    out[key_of(remove_bit(r, n, wire), remove_bit(c, n, wire))] += v;
  }
  s.entries = std::move(out);
  s.n_wires = n - 1;
}

// Projects wire i onto |value> and removes it.
void apply_project_out(detail::SparseDensity& s, std::size_t wire, bool value) {
  std::size_t n = s.n_wires;
  Entries out;
  for (const auto& [key, v] : s.entries) {
    std::uint64_t r = row_of(key);
    std::uint64_t c = col_of(key);
    if (bit_at(r, n, wire) != value || bit_at(c, n, wire) != value) continue;
    out.emplace(key_of(remove_bit(r, n, wire), remove_bit(c, n, wire)), v);
  }
  s.entries = std::move(out);
  s.n_wires = n - 1;
}

void apply_meas(detail::SparseDensity& s, std::size_t wire) {
  std::size_t n = s.n_wires;
  for (auto it = s.entries.begin(); it != s.entries.end();) {
    if (bit_at(row_of(it->first), n, wire) != bit_at(col_of(it->first), n, wire))
      it = s.entries.erase(it);
    else
      ++it;
  }
}

// Tensors an identity wire in at position i: the adjoint of a partial trace.
void apply_insert_identity(detail::SparseDensity& s, std::size_t wire) {
  std::size_t n = s.n_wires;
  dim_of(n + 1);
  Entries out;
  for (const auto& [key, v] : s.entries) {
    std::uint64_t r = row_of(key);
    std::uint64_t c = col_of(key);
    for (int b = 0; b < 2; ++b)
      out.emplace(key_of(insert_bit(r, n, wire, b), insert_bit(c, n, wire, b)), v);
  }
  s.entries = std::move(out);
  s.n_wires = n + 1;
}

void apply_unitary(detail::SparseDensity& s, const UnitaryGate& g) {
  switch (g.kind) {
    case GateKind::X:
      apply_x(s, g.wires[0]);
      return;
    case GateKind::H:
      apply_h(s, g.wires[0]);
      return;
    case GateKind::Z:
      apply_z(s, g.wires[0]);
      return;
    case GateKind::CNOT:
      apply_cnot(s, g.wires[0], g.wires[1]);
      return;
    case GateKind::Toffoli:
      apply_toffoli(s, g.wires[0], g.wires[1], g.wires[2]);
      return;
  }
  throw std::runtime_error("semantics: unreachable gate kind");
}

}  // namespace

namespace detail {

SparseDensity SparseDensity::from_dense(const DensityMatrix& rho, double cutoff) {
  SparseDensity s;
  s.n_wires = rho.n_wires;
  std::size_t d = dim_of(rho.n_wires);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c) {
      cplx v = rho.mat.at(r, c);
      if (std::abs(v) > cutoff) s.entries.emplace(key_of(r, c), v);
    }
  return s;
}

SparseDensity SparseDensity::basis(const std::vector<bool>& bits) {
  SparseDensity s;
  s.n_wires = bits.size();
  std::uint64_t index = 0;
  for (bool b : bits) index = (index << 1) | std::uint64_t{b};
  s.entries.emplace(key_of(index, index), cplx{1.0, 0.0});
  return s;
}

DensityMatrix SparseDensity::to_dense() const {
  std::size_t d = dim_of(n_wires);
  CMatrix m(d, d);
  for (const auto& [key, v] : entries) m.at(row_of(key), col_of(key)) = v;
  return DensityMatrix(n_wires, std::move(m));
}

cplx SparseDensity::trace() const {
  cplx t{};
  for (const auto& [key, v] : entries)
    if (row_of(key) == col_of(key)) t += v;
  return t;
}

void SparseDensity::drop_small(double cutoff) {
  for (auto it = entries.begin(); it != entries.end();) {
    if (std::abs(it->second) <= cutoff)
      it = entries.erase(it);
    else
      ++it;
  }
}

void apply_gate(SparseDensity& s, const GateApp& gate, SemanticsMode mode) {
  if (const auto* u = std::get_if<UnitaryGate>(&gate)) {
    apply_unitary(s, *u);
  } else if (const auto* init = std::get_if<InitGate>(&gate)) {
    apply_init(s, init->wire, init->value);
  } else if (const auto* meas = std::get_if<MeasGate>(&gate)) {
    apply_meas(s, meas->wire);
  } else if (const auto* disc = std::get_if<DiscardGate>(&gate)) {
    apply_trace_out(s, disc->wire);
  } else if (const auto* as = std::get_if<AssertGate>(&gate)) {
    if (mode == SemanticsMode::Safe)
      apply_trace_out(s, as->wire);
    else
      apply_project_out(s, as->wire, as->value);
  } else {
    throw std::runtime_error("semantics: unknown gate variant");
  }
}

void apply_gate_adjoint_unsafe(SparseDensity& s, const GateApp& gate) {
  if (const auto* u = std::get_if<UnitaryGate>(&gate)) {
    // Every supported unitary is Hermitian, so conjugation is self-adjoint.
    apply_unitary(s, *u);
  } else if (const auto* init = std::get_if<InitGate>(&gate)) {
    apply_project_out(s, init->wire, init->value);
  } else if (const auto* meas = std::get_if<MeasGate>(&gate)) {
    apply_meas(s, meas->wire);
  } else if (const auto* disc = std::get_if<DiscardGate>(&gate)) {
    apply_insert_identity(s, disc->wire);
  } else if (const auto* as = std::get_if<AssertGate>(&gate)) {
    apply_init(s, as->wire, as->value);
  } else {
    throw std::runtime_error("semantics: unknown gate variant");
  }
}

SparseDensity denote_sparse(const Circuit& c, SparseDensity s, SemanticsMode mode) {
  if (s.n_wires != c.in_size())
    throw std::invalid_argument("semantics: state has " + std::to_string(s.n_wires) +
                                " wires but the circuit expects " + std::to_string(c.in_size()));
  for (const GateApp& g : c.gates()) apply_gate(s, g, mode);
  return s;
}

}  // namespace detail

DensityMatrix::DensityMatrix(std::size_t n, CMatrix m) : n_wires(n), mat(std::move(m)) {
  std::size_t d = dim_of(n);
  if (mat.rows() != d || mat.cols() != d)
    throw std::invalid_argument("density matrix: expected " + std::to_string(d) + "x" +
                                std::to_string(d) + " for " + std::to_string(n) + " wires, got " +
                                std::to_string(mat.rows()) + "x" + std::to_string(mat.cols()));
}

DensityMatrix DensityMatrix::basis(const std::vector<bool>& bits) {
  return detail::SparseDensity::basis(bits).to_dense();
}

double DensityMatrix::trace_real() const { return trace(mat).real(); }

Superoperator::Superoperator(std::size_t in_w, std::size_t out_w, CMatrix m)
    : in_wires(in_w), out_wires(out_w), mat(std::move(m)) {
  std::size_t din = dim_of(in_w), dout = dim_of(out_w);
  if (mat.rows() != dout * dout || mat.cols() != din * din)
    throw std::invalid_argument("superoperator: matrix shape does not match wire counts");
}

DensityMatrix Superoperator::apply(const DensityMatrix& rho) const {
  if (rho.n_wires != in_wires)
    throw std::invalid_argument("superoperator: input has wrong wire count");
  std::size_t din = dim_of(in_wires), dout = dim_of(out_wires);
  CMatrix vec_in(din * din, 1);
  for (std::size_t r = 0; r < din; ++r)
    for (std::size_t c = 0; c < din; ++c) vec_in.at(r * din + c, 0) = rho.mat.at(r, c);
  CMatrix vec_out = matmul(mat, vec_in);
  CMatrix out(dout, dout);
  for (std::size_t r = 0; r < dout; ++r)
    for (std::size_t c = 0; c < dout; ++c) out.at(r, c) = vec_out.at(r * dout + c, 0);
  return DensityMatrix(out_wires, std::move(out));
}

DensityMatrix denote(const Circuit& c, const DensityMatrix& rho, SemanticsMode mode) {
  return detail::denote_sparse(c, detail::SparseDensity::from_dense(rho), mode).to_dense();
}

Superoperator superoperator_of(const Circuit& c, SemanticsMode mode) {
  std::size_t in_w = c.in_size(), out_w = c.out_size();
  if (in_w + out_w > 10)
    throw std::invalid_argument(
        "superoperator_of: refusing to materialize a map over " + std::to_string(in_w) + "+" +
        std::to_string(out_w) + " wires; use the streaming comparisons instead");
  std::size_t din = dim_of(in_w), dout = dim_of(out_w);
  CMatrix m(dout * dout, din * din);
  for (std::size_t j = 0; j < din * din; ++j) {
    detail::SparseDensity unit;
    unit.n_wires = in_w;
    unit.entries.emplace(key_of(j / din, j % din), cplx{1.0, 0.0});
    detail::SparseDensity image = detail::denote_sparse(c, std::move(unit), mode);
    for (const auto& [key, v] : image.entries)
      m.at(row_of(key) * dout + col_of(key), j) = v;
  }
  return Superoperator(in_w, out_w, std::move(m));
}

Superoperator identity_superoperator(std::size_t n) {
  std::size_t d = dim_of(n);
  return Superoperator(n, n, CMatrix::identity(d * d));
}

Superoperator superop_kron(const Superoperator& a, const Superoperator& b) {
  std::size_t in_w = a.in_wires + b.in_wires;
  std::size_t out_w = a.out_wires + b.out_wires;
  std::size_t din = dim_of(in_w), dout = dim_of(out_w);
  std::size_t da_in = dim_of(a.in_wires), da_out = dim_of(a.out_wires);
  std::size_t db_in = dim_of(b.in_wires), db_out = dim_of(b.out_wires);
  CMatrix m(dout * dout, din * din);
  // Rows and columns interleave the two blocks, so this is not a plain
  // Kronecker product of the two matrices.
  for (std::size_t pa = 0; pa < da_out * da_out; ++pa)
    for (std::size_t qa = 0; qa < da_in * da_in; ++qa) {
      cplx va = a.mat.at(pa, qa);
      if (va == cplx{}) continue;
      std::size_t ra_out = pa / da_out, ca_out = pa % da_out;
      std::size_t ra_in = qa / da_in, ca_in = qa % da_in;
      for (std::size_t pb = 0; pb < db_out * db_out; ++pb)
        for (std::size_t qb = 0; qb < db_in * db_in; ++qb) {
          cplx vb = b.mat.at(pb, qb);
          if (vb == cplx{}) continue;
          std::size_t rb_out = pb / db_out, cb_out = pb % db_out;
          std::size_t rb_in = qb / db_in, cb_in = qb % db_in;
          std::size_t row = (ra_out * db_out + rb_out) * dout + (ca_out * db_out + cb_out);
          std::size_t col = (ra_in * db_in + rb_in) * din + (ca_in * db_in + cb_in);
          m.at(row, col) = va * vb;
        }
    }
  return Superoperator(in_w, out_w, std::move(m));
}

DensityMatrix bool_to_matrix(bool b) { return DensityMatrix::basis({b}); }

DensityMatrix bools_to_matrix(const std::vector<bool>& bits) { return DensityMatrix::basis(bits); }

DensityMatrix basis_state(const VarContext& ctx, const Valuation& f) {
  std::vector<bool> bits;
  bits.reserve(ctx.size());
  for (const auto& name : ctx.names()) bits.push_back(f.at(name));
  return DensityMatrix::basis(bits);
}

DensityMatrix ctx_to_matrix(const VarContext& ctx, const Valuation& f) {
  return basis_state(ctx, f);
}

DensityMatrix density_kron(const DensityMatrix& a, const DensityMatrix& b) {
  return DensityMatrix(a.n_wires + b.n_wires, kron(a.mat, b.mat));
}

BasisResult denote_basis(const Circuit& c, const std::vector<bool>& bits) {
  if (bits.size() != c.in_size())
    throw std::invalid_argument("denote_basis: state has " + std::to_string(bits.size()) +
                                " wires but the circuit expects " + std::to_string(c.in_size()));
  std::vector<bool> w = bits;
  bool valid = true;
  for (const GateApp& g : c.gates()) {
    if (const auto* u = std::get_if<UnitaryGate>(&g)) {
      switch (u->kind) {
        case GateKind::X:
          w[u->wires[0]] = !w[u->wires[0]];
          break;
        case GateKind::CNOT:
          if (w[u->wires[0]]) w[u->wires[1]] = !w[u->wires[1]];
          break;
        case GateKind::Toffoli:
          if (w[u->wires[0]] && w[u->wires[1]]) w[u->wires[2]] = !w[u->wires[2]];
          break;
        default:
          throw std::invalid_argument("denote_basis: " + gate_to_string(g) +
                                      " is not a classical gate");
      }
    } else if (const auto* init = std::get_if<InitGate>(&g)) {
      w.insert(w.begin() + static_cast<std::ptrdiff_t>(init->wire), init->value);
    } else if (const auto* as = std::get_if<AssertGate>(&g)) {
      if (w[as->wire] != as->value) valid = false;
      w.erase(w.begin() + static_cast<std::ptrdiff_t>(as->wire));
    } else {
      throw std::invalid_argument("denote_basis: " + gate_to_string(g) +
                                  " is not a classical gate");
    }
  }
  return BasisResult{std::move(w), valid};
}

bool is_mixed_state(const DensityMatrix& rho, double eps) {
  std::size_t d = rho.mat.rows();
  // Hermitian within eps.
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = r; c < d; ++c)
      if (std::abs(rho.mat.at(r, c) - std::conj(rho.mat.at(c, r))) > eps) return false;
  // Positive semidefinite: Cholesky of the symmetrized matrix plus eps on
  // the diagonal must go through.
  CMatrix a(d, d);
  for (std::size_t r = 0; r < d; ++r)
    for (std::size_t c = 0; c < d; ++c)
      a.at(r, c) = 0.5 * (rho.mat.at(r, c) + std::conj(rho.mat.at(c, r)));
  for (std::size_t i = 0; i < d; ++i) a.at(i, i) += eps;
  CMatrix l(d, d);
  for (std::size_t j = 0; j < d; ++j) {
    cplx diag = a.at(j, j);
    for (std::size_t k = 0; k < j; ++k) diag -= l.at(j, k) * std::conj(l.at(j, k));
    if (diag.real() <= 0.0 || std::abs(diag.imag()) > eps) return false;
    double root = std::sqrt(diag.real());
    l.at(j, j) = root;
    for (std::size_t i = j + 1; i < d; ++i) {
      cplx v = a.at(i, j);
      for (std::size_t k = 0; k < j; ++k) v -= l.at(i, k) * std::conj(l.at(j, k));
      l.at(i, j) = v / root;
    }
  }
  // Mixed means purity strictly below the squared trace.
  double tr = rho.trace_real();
  if (tr <= eps) return false;
  double purity = trace(matmul(rho.mat, rho.mat)).real();
  return purity < tr * tr - eps;
}

}  // namespace anc
