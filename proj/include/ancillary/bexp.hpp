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
#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace anc {

/// Boolean expression over named variables: constants, negation, conjunction
/// and exclusive or. Immutable; copies share structure.
class Bexp {
 public:
  enum class Kind { Var, True, False, Not, And, Xor };

  static Bexp var(std::string name);
  static Bexp true_();
  static Bexp false_();
  static Bexp not_(const Bexp& b);
  static Bexp and_(const Bexp& a, const Bexp& b);
  static Bexp xor_(const Bexp& a, const Bexp& b);

  Kind kind() const;
  /// Variable name; valid only for Kind::Var.
  const std::string& name() const;
  /// Operand of Not.
  Bexp child() const;
  /// Operands of And/Xor.
  Bexp left() const;
  Bexp right() const;

  std::size_t node_count() const;

  bool operator==(const Bexp& other) const;

 private:
  struct Node;
  explicit Bexp(std::shared_ptr<const Node> n) : node_(std::move(n)) {}
  std::shared_ptr<const Node> node_;
};

/// Ordered list of distinct variable names; the wire order of a compiled
/// oracle's variable block.
class VarContext {
 public:
  VarContext() = default;
  /// Throws std::invalid_argument on duplicate names.
  explicit VarContext(std::vector<std::string> names);

  std::size_t size() const { return names_.size(); }
  const std::vector<std::string>& names() const { return names_; }
  bool contains(const std::string& name) const;
  /// Position of `name`; throws std::out_of_range if absent.
  std::size_t index(const std::string& name) const;

 private:
  std::vector<std::string> names_;
};

/// Assignment of booleans to variable names.
class Valuation {
 public:
  Valuation() = default;
  Valuation& set(const std::string& name, bool value);
  /// Throws std::out_of_range naming the variable if unassigned.
  bool at(const std::string& name) const;
  /// Pairs ctx.names()[i] with bits[i]; sizes must match.
  static Valuation from_bits(const VarContext& ctx, const std::vector<bool>& bits);

 private:
  std::map<std::string, bool> values_;
};

/// Evaluates `b` under `f`. Throws std::out_of_range on unbound variables.
bool interp(const Bexp& b, const Valuation& f);

/// Free variables of `b`, sorted and deduplicated.
std::vector<std::string> vars(const Bexp& b);

/// Parse failure, carrying the byte offset of the offending position.
struct BexpParseError : std::runtime_error {
  std::size_t offset;
  BexpParseError(const std::string& msg, std::size_t off);
};

/// Parses the concrete syntax: `t` and `f` are the constants, identifiers
/// are [a-zA-Z_][a-zA-Z0-9_]* (other than t/f), `~` binds tighter than `&`,
/// which binds tighter than `^`; the binary operators associate left and
/// parentheses group. Throws BexpParseError on malformed input.
Bexp parse_bexp(const std::string& text);

/// Renders with minimal parentheses; parse_bexp(to_string(b)) == b.
std::string to_string(const Bexp& b);

}  // namespace anc
