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

#include "ancillary/wire_type.hpp"

namespace anc {

struct WireType::Node {
  // leaf == true: a single wire of kind `kind`.
  // leaf == false: tensor of left and right (either may be null == One).
  bool leaf;
  WireKind kind;
  std::shared_ptr<const Node> left;
  std::shared_ptr<const Node> right;
};

WireType WireType::one() { return WireType(nullptr); }

WireType WireType::bit() {
  return WireType(std::make_shared<Node>(Node{true, WireKind::Bit, nullptr, nullptr}));
}

WireType WireType::qubit() {
  return WireType(std::make_shared<Node>(Node{true, WireKind::Qubit, nullptr, nullptr}));
}

WireType WireType::tensor(const WireType& left, const WireType& right) {
  return WireType(std::make_shared<Node>(Node{false, WireKind::Qubit, left.node_, right.node_}));
}

WireType WireType::qubits(std::size_t n) {
  WireType t = one();
  for (std::size_t i = 0; i < n; ++i) {
    t = (i == 0) ? qubit() : tensor(qubit(), t);
  }
  return t;
}

WireType WireType::bits(std::size_t n) {
  WireType t = one();
  for (std::size_t i = 0; i < n; ++i) {
    t = (i == 0) ? bit() : tensor(bit(), t);
  }
  return t;
}

WireType WireType::of_kinds(const std::vector<WireKind>& kinds) {
  WireType t = one();
  for (std::size_t i = kinds.size(); i-- > 0;) {
    WireType w = (kinds[i] == WireKind::Qubit) ? qubit() : bit();
    t = t.is_one() ? w : tensor(w, t);
  }
  return t;
}

std::vector<WireKind> WireType::flatten() const {
  std::vector<WireKind> out;
  // Iterative left-to-right depth-first walk.
  std::vector<std::shared_ptr<const Node>> stack;
  if (node_) {
    stack.push_back(node_);
  }
  while (!stack.empty()) {
    std::shared_ptr<const Node> n = stack.back();
    stack.pop_back();
    if (!n) {
      continue;
    }
    if (n->leaf) {
      out.push_back(n->kind);
      continue;
    }
    stack.push_back(n->right);
    stack.push_back(n->left);
  }
  return out;
}

std::size_t WireType::size() const { return flatten().size(); }

bool WireType::is_one() const { return node_ == nullptr; }

}  // namespace anc
