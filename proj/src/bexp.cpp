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

#include "ancillary/bexp.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <utility>

namespace anc {

struct Bexp::Node {
  Kind kind;
  std::string name;  // Var only
  std::shared_ptr<const Node> a;
  std::shared_ptr<const Node> b;
};

Bexp Bexp::var(std::string name) {
  if (name.empty()) throw std::invalid_argument("bexp: variable name must be non-empty");
  return Bexp(std::make_shared<const Node>(Node{Kind::Var, std::move(name), nullptr, nullptr}));
}

Bexp Bexp::true_() {
  return Bexp(std::make_shared<const Node>(Node{Kind::True, {}, nullptr, nullptr}));
}

Bexp Bexp::false_() {
  return Bexp(std::make_shared<const Node>(Node{Kind::False, {}, nullptr, nullptr}));
}

Bexp Bexp::not_(const Bexp& b) {
  return Bexp(std::make_shared<const Node>(Node{Kind::Not, {}, b.node_, nullptr}));
}

Bexp Bexp::and_(const Bexp& a, const Bexp& b) {
  return Bexp(std::make_shared<const Node>(Node{Kind::And, {}, a.node_, b.node_}));
}

Bexp Bexp::xor_(const Bexp& a, const Bexp& b) {
  return Bexp(std::make_shared<const Node>(Node{Kind::Xor, {}, a.node_, b.node_}));
}

Bexp::Kind Bexp::kind() const { return node_->kind; }

const std::string& Bexp::name() const {
  if (node_->kind != Kind::Var) throw std::runtime_error("bexp: name() on a non-variable node");
  return node_->name;
}

Bexp Bexp::child() const {
  if (node_->kind != Kind::Not) throw std::runtime_error("bexp: child() on a non-negation node");
  return Bexp(node_->a);
}

Bexp Bexp::left() const {
  if (node_->kind != Kind::And && node_->kind != Kind::Xor)
    throw std::runtime_error("bexp: left() on a non-binary node");
  return Bexp(node_->a);
}

Bexp Bexp::right() const {
  if (node_->kind != Kind::And && node_->kind != Kind::Xor)
    throw std::runtime_error("bexp: right() on a non-binary node");
  return Bexp(node_->b);
}

std::size_t Bexp::node_count() const {
  std::size_t count = 0;
  std::vector<const Node*> stack = {node_.get()};
  while (!stack.empty()) {
    const Node* n = stack.back();
    stack.pop_back();
    ++count;
    if (n->a) stack.push_back(n->a.get());
    if (n->b) stack.push_back(n->b.get());
  }
  return count;
}

bool Bexp::operator==(const Bexp& other) const {
  std::vector<std::pair<const Node*, const Node*>> stack = {{node_.get(), other.node_.get()}};
  while (!stack.empty()) {
    auto [x, y] = stack.back();
    stack.pop_back();
    if (x == y) continue;  // shared subtree
    if (x->kind != y->kind || x->name != y->name) return false;
    if (!x->a != !y->a || !x->b != !y->b) return false;
    if (x->a) stack.emplace_back(x->a.get(), y->a.get());
    if (x->b) stack.emplace_back(x->b.get(), y->b.get());
  }
  return true;
}

VarContext::VarContext(std::vector<std::string> names) : names_(std::move(names)) {
  std::set<std::string> seen;
  for (const auto& n : names_) {
    if (!seen.insert(n).second)
      throw std::invalid_argument("var context: duplicate variable '" + n + "'");
  }
}

bool VarContext::contains(const std::string& name) const {
  return std::find(names_.begin(), names_.end(), name) != names_.end();
}

std::size_t VarContext::index(const std::string& name) const {
  auto it = std::find(names_.begin(), names_.end(), name);
  if (it == names_.end()) throw std::out_of_range("var context: unknown variable '" + name + "'");
  return static_cast<std::size_t>(it - names_.begin());
}

Valuation& Valuation::set(const std::string& name, bool value) {
  values_[name] = value;
  return *this;
}

bool Valuation::at(const std::string& name) const {
  auto it = values_.find(name);
  if (it == values_.end()) throw std::out_of_range("valuation: unbound variable '" + name + "'");
  return it->second;
}

Valuation Valuation::from_bits(const VarContext& ctx, const std::vector<bool>& bits) {
  if (bits.size() != ctx.size())
    throw std::invalid_argument("valuation: expected " + std::to_string(ctx.size()) +
                                " bits, got " + std::to_string(bits.size()));
  Valuation f;
  for (std::size_t i = 0; i < bits.size(); ++i) f.set(ctx.names()[i], bits[i]);
  return f;
}

bool interp(const Bexp& b, const Valuation& f) {
  switch (b.kind()) {
    case Bexp::Kind::Var:
      return f.at(b.name());
    case Bexp::Kind::True:
      return true;
    case Bexp::Kind::False:
      return false;
    case Bexp::Kind::Not:
      return !interp(b.child(), f);
    case Bexp::Kind::And:
      return interp(b.left(), f) && interp(b.right(), f);
    case Bexp::Kind::Xor:
      return interp(b.left(), f) != interp(b.right(), f);
  }
  throw std::runtime_error("bexp: unreachable kind");
}

namespace {

void collect_vars(const Bexp& b, std::set<std::string>& out) {
  switch (b.kind()) {
    case Bexp::Kind::Var:
      out.insert(b.name());
      return;
    case Bexp::Kind::True:
    case Bexp::Kind::False:
      return;
    case Bexp::Kind::Not:
      collect_vars(b.child(), out);
      return;
    case Bexp::Kind::And:
    case Bexp::Kind::Xor:
      collect_vars(b.left(), out);
      collect_vars(b.right(), out);
      return;
  }
}

}  // namespace

std::vector<std::string> vars(const Bexp& b) {
  std::set<std::string> names;
  collect_vars(b, names);
  return {names.begin(), names.end()};
}

BexpParseError::BexpParseError(const std::string& msg, std::size_t off)
    : std::runtime_error(msg + " at offset " + std::to_string(off)), offset(off) {}

namespace {

// Recursive-descent parser over the raw byte string.
struct Parser {
  const std::string& text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }

  bool at_end() {
    skip_ws();
    return pos >= text.size();
  }

  char peek() {
    skip_ws();
    return pos < text.size() ? text[pos] : '\0';
  }

  Bexp parse_xor() {
    Bexp acc = parse_and();
    while (peek() == '^') {
      ++pos;
      acc = Bexp::xor_(acc, parse_and());
    }
    return acc;
  }

  Bexp parse_and() {
    Bexp acc = parse_unary();
    while (peek() == '&') {
      ++pos;
      acc = Bexp::and_(acc, parse_unary());
    }
    return acc;
  }

  Bexp parse_unary() {
    if (peek() == '~') {
      ++pos;
      return Bexp::not_(parse_unary());
    }
    return parse_atom();
  }

  Bexp parse_atom() {
    skip_ws();
    if (pos >= text.size()) throw BexpParseError("expected expression, found end of input", pos);
    char c = text[pos];
    if (c == '(') {
      ++pos;
      Bexp inner = parse_xor();
      if (peek() != ')') throw BexpParseError("expected ')'", pos);
      ++pos;
      return inner;
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::size_t start = pos;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_'))
        ++pos;
      std::string word = text.substr(start, pos - start);
      if (word == "t") return Bexp::true_();
      if (word == "f") return Bexp::false_();
      return Bexp::var(std::move(word));
    }
    throw BexpParseError(std::string("unexpected character '") + c + "'", pos);
  }
};

// Binding strength for the printer; atoms bind tightest.
int precedence(Bexp::Kind k) {
  switch (k) {
    case Bexp::Kind::Xor:
      return 1;
    case Bexp::Kind::And:
      return 2;
    case Bexp::Kind::Not:
      return 3;
    default:
      return 4;
  }
}

void print(const Bexp& b, int min_prec, std::string& out) {
  int p = precedence(b.kind());
  bool wrap = p < min_prec;
  if (wrap) out += '(';
  switch (b.kind()) {
    case Bexp::Kind::Var:
      out += b.name();
      break;
    case Bexp::Kind::True:
      out += 't';
      break;
    case Bexp::Kind::False:
      out += 'f';
      break;
    case Bexp::Kind::Not:
      out += '~';
      print(b.child(), p, out);
      break;
    case Bexp::Kind::And:
    case Bexp::Kind::Xor:
      // Left associative: the right operand needs strictly higher binding.
      print(b.left(), p, out);
      out += b.kind() == Bexp::Kind::And ? " & " : " ^ ";
      print(b.right(), p + 1, out);
      break;
  }
  if (wrap) out += ')';
}

}  // namespace

Bexp parse_bexp(const std::string& text) {
  Parser p{text};
  Bexp result = p.parse_xor();
  if (!p.at_end()) throw BexpParseError("trailing input", p.pos);
  return result;
}

std::string to_string(const Bexp& b) {
  std::string out;
  print(b, 0, out);
  return out;
}

}  // namespace anc
