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

#include <cstdint>
#include <map>
#include <optional>
#include <vector>

#include "ancillary/bexp.hpp"
#include "ancillary/circuit.hpp"
#include "ancillary/linalg.hpp"

namespace anc {

/// How assertions behave. Safe treats an assertion like a discard (the
/// asserted wire is traced out whatever its state); Unsafe projects onto the
/// asserted value, so a violated assertion shrinks the trace. The two agree
/// exactly when every assertion holds.
enum class SemanticsMode { Safe, Unsafe };

/// Density matrix over `n_wires` two-level wires. The matrix may be
/// sub-normalized (trace below one): under unsafe semantics the trace carries
/// the probability that all assertions so far have held, so callers must not
/// renormalize.
struct DensityMatrix {
  std::size_t n_wires;
  CMatrix mat;

  /// Throws std::invalid_argument unless mat is square with side 2^n_wires.
  DensityMatrix(std::size_t n, CMatrix m);

  /// |bits⟩⟨bits| with wire i at bit position i (wire 0 leftmost/highest).
  static DensityMatrix basis(const std::vector<bool>& bits);

  double trace_real() const;
};

/// A linear map on density matrices in column-vectorized form: column
/// r*D+c of the input indexes entry (r,c), likewise for the output.
struct Superoperator {
  std::size_t in_wires;
  std::size_t out_wires;
  CMatrix mat;  // 4^out_wires rows by 4^in_wires columns

  Superoperator(std::size_t in_w, std::size_t out_w, CMatrix m);

  /// Applies the map to a density matrix.
  DensityMatrix apply(const DensityMatrix& rho) const;
};

/// Runs `c` on `rho` under the given mode. Throws std::invalid_argument if
/// the width of rho does not match the circuit input, or if the circuit uses
/// a gate outside the supported set.
DensityMatrix denote(const Circuit& c, const DensityMatrix& rho, SemanticsMode mode);

/// Materializes the full superoperator of `c` by running every matrix unit
/// through denote. Guarded: throws std::invalid_argument when
/// in_size + out_size exceeds 10 wires (the matrix would not fit in memory);
/// use the streaming comparisons in validity.hpp for larger circuits.
Superoperator superoperator_of(const Circuit& c, SemanticsMode mode);

/// Identity map on `n` wires.
Superoperator identity_superoperator(std::size_t n);

/// Parallel composition: the map (a ⊗ b) acting on the concatenated wires,
/// a on the left (lower-index) block.
Superoperator superop_kron(const Superoperator& a, const Superoperator& b);

/// |b⟩⟨b| on one wire.
DensityMatrix bool_to_matrix(bool b);

/// |bits⟩⟨bits| over bits.size() wires.
DensityMatrix bools_to_matrix(const std::vector<bool>& bits);

/// Basis state for a variable context under a valuation: wire i holds
/// ctx.names()[i]. Throws std::out_of_range on unbound variables.
DensityMatrix basis_state(const VarContext& ctx, const Valuation& f);

/// Synonym for basis_state; the adder checks read more naturally with the
/// context-to-matrix name.
DensityMatrix ctx_to_matrix(const VarContext& ctx, const Valuation& f);

/// Tensor product of two density matrices, a on the upper (lower-index)
/// wires.
DensityMatrix density_kron(const DensityMatrix& a, const DensityMatrix& b);

/// Result of running a classical circuit on classical basis inputs.
struct BasisResult {
  /// Output bits along the safe path (asserted wires removed regardless of
  /// their value).
  std::vector<bool> bits;
  /// False when some assertion saw the wrong value, i.e. the unsafe
  /// semantics would have annihilated the state.
  bool valid;
};

/// Fast path for circuits built from X/CNOT/Toffoli/init/assert acting on a
/// basis state. Throws std::invalid_argument on any other gate.
BasisResult denote_basis(const Circuit& c, const std::vector<bool>& bits);

/// True when `rho` is a genuinely mixed state: Hermitian, positive
/// semidefinite (within eps) and with purity trace(rho^2) strictly below
/// trace(rho)^2 by more than eps.
bool is_mixed_state(const DensityMatrix& rho, double eps = 1e-7);

namespace detail {

/// Sparse density matrix keyed by (row << 32) | col over computational
/// basis indices; absent keys are zero. Wire i corresponds to bit position
/// n_wires-1-i of an index (wire 0 is the most significant bit), matching
/// the Kronecker-product convention of the dense representation. The
/// ordered map keeps summation order deterministic across runs.
struct SparseDensity {
  std::size_t n_wires = 0;
  std::map<std::uint64_t, cplx> entries;

  static SparseDensity from_dense(const DensityMatrix& rho, double cutoff = 0.0);
  static SparseDensity basis(const std::vector<bool>& bits);
  DensityMatrix to_dense() const;
  cplx trace() const;
  void drop_small(double cutoff);
};

/// Applies one gate in the forward direction under `mode`.
void apply_gate(SparseDensity& s, const GateApp& gate, SemanticsMode mode);

/// Applies the adjoint of the gate's unsafe channel: the building block of
/// the backward unitality pass used by validity checking.
void apply_gate_adjoint_unsafe(SparseDensity& s, const GateApp& gate);

/// denote() on the sparse representation.
SparseDensity denote_sparse(const Circuit& c, SparseDensity s, SemanticsMode mode);

}  // namespace detail

}  // namespace anc
