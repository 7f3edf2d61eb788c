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

#include <cstddef>
#include <memory>
#include <vector>

namespace anc {

enum class WireKind { Qubit, Bit };

/// Wire bundle type: the empty bundle, a single classical bit, a single
/// qubit, or a tensor pair of bundles. Wires are ordered left to right, so a
/// bundle flattens to a definite sequence of wire kinds: flatten(One) = [],
/// flatten(Bit) = [Bit], flatten(Qubit) = [Qubit], flatten(Tensor(a, b)) =
/// flatten(a) ++ flatten(b). Wire index i always refers to position i of the
/// flattened sequence.
class WireType {
 public:
  static WireType one();
  static WireType bit();
  static WireType qubit();
  static WireType tensor(const WireType& left, const WireType& right);

  /// n qubits as a right-nested tensor chain; one() for n = 0.
  static WireType qubits(std::size_t n);
  /// n classical bits, same shape as qubits(n).
  static WireType bits(std::size_t n);
  /// Right-nested chain with exactly the given kinds in order.
  static WireType of_kinds(const std::vector<WireKind>& kinds);

  /// Number of wires in the bundle.
  std::size_t size() const;
  std::vector<WireKind> flatten() const;

  bool is_one() const;

 private:
  struct Node;
  explicit WireType(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;  // nullptr encodes One
};

}  // namespace anc
