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
#include <optional>
#include <utility>

#include "ancillary/circuit.hpp"
#include "ancillary/linalg.hpp"
#include "ancillary/semantics.hpp"

namespace anc {

/// Outcome of a validity check. The defect measures how far the circuit's
/// unsafe channel is from trace preserving: it is the largest entrywise
/// deviation of the adjoint channel applied to the identity from the
/// identity on the input space. Zero defect means every assertion holds on
/// every input; the witness names the worst basis matrix unit (row, col)
/// when the defect is nonzero.
struct ValidityReport {
  bool valid;
  double worst_trace_defect;
  std::optional<std::pair<std::uint64_t, std::uint64_t>> witness;
};

/// Checks that the circuit's assertions can never fail, whatever the input
/// state. Equivalent to the unsafe channel preserving the trace of every
/// input, decided by one backward pass pulling the identity through the
/// adjoint of each gate's unsafe channel.
ValidityReport is_valid(const Circuit& c, Tolerance tol = {});

/// True when the safe and unsafe denotations coincide as maps, compared
/// column by column over all basis matrix units without materializing
/// either superoperator.
bool semantics_agree(const Circuit& c, Tolerance tol = {});

/// True when both circuits denote the same map under `mode`. Throws
/// std::invalid_argument when the circuits' input or output wire kinds
/// differ, since the maps then act on different spaces.
bool circuits_equivalent(const Circuit& a, const Circuit& b, SemanticsMode mode,
                         Tolerance tol = {});

/// True when running the circuit twice gives the identity map under `mode`.
/// Throws std::invalid_argument unless output kinds match input kinds.
bool is_self_inverse(const Circuit& c, SemanticsMode mode, Tolerance tol = {});

/// Checks the implication "reversibility forces validity" on a concrete
/// pair: confirms c_inv inverts c on both sides under unsafe semantics and
/// that c's assertions are valid. Returns false if any of the three parts
/// fails; throws on wire-kind mismatches.
bool check_reversible_implies_valid(const Circuit& c, const Circuit& c_inv, Tolerance tol = {});

}  // namespace anc
