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

#include "ancillary/bexp.hpp"
#include "ancillary/circuit.hpp"
#include "ancillary/linalg.hpp"

namespace anc {

/// Wire plan of the n-bit ripple-carry adder. External order is
/// [cout, sum_n, y_n, x_n, ..., sum_1, y_1, x_1, cin] with bit 1 the least
/// significant; intermediate carries live on transient wires only.
struct AdderLayout {
  std::size_t n;

  std::size_t wires() const { return 2 + 3 * n; }
  /// Wire names in order, usable as a compile context or valuation domain.
  VarContext context() const;
};

/// 4-wire oracle on [sum, y, x, cin]: sum ^= x xor y xor cin.
Circuit adder_sum_circ();

/// 5-wire oracle on [cout, sum, y, x, cin]: cout ^= (cin and (x xor y)) xor
/// (x and y), the carry out of one full-adder stage. sum is untouched.
Circuit adder_carry_circ();

/// One full-adder stage on [cout, sum, y, x, cin]: the carry oracle followed
/// by the sum oracle padded below it.
Circuit adder_1();

/// Carry-computing cascade: takes [sum_n, y_n, x_n, ..., sum_1, y_1, x_1,
/// cin] (1+3n wires) to [c_n, sum_n, y_n, x_n, c_{n-1}, ..., c_1, sum_1,
/// y_1, x_1, cin] (1+4n wires), updating every sum and leaving each stage's
/// carry on a freshly initialized wire.
Circuit adder_left(std::size_t n);

/// Inverse cascade of adder_left's carry computation: uncomputes each carry
/// with the carry oracle and asserts it back to false, 1+4n wires down to
/// 1+3n. Sums are left as adder_left wrote them.
Circuit adder_right(std::size_t n);

/// Full n-bit ripple-carry adder on 2+3n wires:
/// cout ^= carry out of x + y + cin, sum_k ^= bit k of the sum, x, y and
/// cin unchanged. adder_circ(0) is the identity on [cout, cin].
Circuit adder_circ(std::size_t n);

/// Reference semantics of adder_circ(n) on AdderLayout names: returns f with
/// every sum_k xored with x_k xor y_k xor c_{k-1} and cout xored with the
/// final carry (c_0 = cin). Identity when n = 0.
Valuation compute_adder_n(std::size_t n, const Valuation& f);

/// Exhaustive comparison of adder_circ(n) against compute_adder_n over all
/// 2^(2+3n) basis inputs: for n <= 2 through the density semantics in both
/// modes, beyond that through the classical fast path with exact bit
/// equality and all assertions passing. Throws std::invalid_argument for
/// n > 5, where exhaustion stops being reasonable.
bool check_adder_spec(std::size_t n, Tolerance tol = {});

/// Integer-level adder run.
struct AdderRun {
  std::uint64_t sum;
  bool cout;
  /// True when every internal assertion held (always, unless the circuit
  /// construction itself is broken).
  bool valid;
};

/// Adds two n-bit integers with carry-in on the circuit and reads the result
/// back out of the basis-state bits. Throws std::invalid_argument unless
/// 1 <= n <= 32 and x, y < 2^n.
AdderRun run_adder(std::size_t n, std::uint64_t x, std::uint64_t y, bool cin);

}  // namespace anc
