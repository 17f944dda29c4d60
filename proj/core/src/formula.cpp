/* Copyright 2026 The proofkit Authors.

Licensed under the Apache License, Version 2.0 (the "License");
you may not use this file except in compliance with the License.
You may obtain a copy of the License at

    http://www.apache.org/licenses/LICENSE-2.0

Unless required by applicable law or agreed to in writing, software
distributed under the License is distributed on an "AS IS" BASIS,
WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
See the License for the specific language governing permissions and
limitations under the License.
==============================================================================*/

#include "proofkit/formula.hpp"

#include <cctype>

#include "proofkit/errors.hpp"

namespace proofkit {

Formula Formula::var(const std::string& name) {
  if (name.empty()) throw ProofError("propositional variable name must be nonempty");
  auto node = std::make_shared<Node>();
  node->tag = Conn::Var;
  node->name = name;
  return Formula(node);
}

Formula Formula::make(Conn tag, Formula lhs, Formula rhs) {
  auto node = std::make_shared<Node>();
  node->tag = tag;
  node->lhs = lhs.node_;
  node->rhs = rhs.node_;
  node->size = 1 + lhs.size() + rhs.size();
  node->concrete = lhs.is_concrete() && rhs.is_concrete();
  return Formula(node);
}

Formula Formula::imp(Formula lhs, Formula rhs) { return make(Conn::Imp, std::move(lhs), std::move(rhs)); }
Formula Formula::neg(Formula body) { return make(Conn::Neg, std::move(body), Formula()); }
Formula Formula::conj(Formula lhs, Formula rhs) { return make(Conn::And, std::move(lhs), std::move(rhs)); }
Formula Formula::disj(Formula lhs, Formula rhs) { return make(Conn::Or, std::move(lhs), std::move(rhs)); }
Formula Formula::globally(Formula body) { return make(Conn::G, std::move(body), Formula()); }
Formula Formula::eventually(Formula body) { return make(Conn::F, std::move(body), Formula()); }

Formula Formula::next(const IndexExpr& power, Formula body) {
  if (!body.valid()) throw ProofError("next-time prefix applied to empty formula");
  IndexExpr total = power;
  Formula inner = body;
  if (inner.tag() == Conn::Next) {
    total += inner.power();
    inner = inner.body();
  }
  if (total == IndexExpr(0)) return inner;
  auto node = std::make_shared<Node>();
  node->tag = Conn::Next;
  node->power = total;
  node->lhs = inner.node_;
  // The prefix counts one node regardless of the exponent.
  node->size = 1 + inner.size();
  node->concrete = inner.is_concrete() && total.is_constant();
  return Formula(node);
}

IndexExpr Formula::prefix() const {
  if (node_ && node_->tag == Conn::Next) return node_->power;
  return IndexExpr(0);
}

Formula Formula::core() const {
  if (node_ && node_->tag == Conn::Next) return body();
  return *this;
}

bool Formula::operator==(const Formula& other) const {
  return (*this <=> other) == std::strong_ordering::equal;
}

std::strong_ordering Formula::operator<=>(const Formula& other) const {
  if (node_ == other.node_) return std::strong_ordering::equal;
  if (!node_) return std::strong_ordering::less;
  if (!other.node_) return std::strong_ordering::greater;
  if (auto c = node_->tag <=> other.node_->tag; c != 0) return c;
  switch (node_->tag) {
    case Conn::Var:
      return node_->name <=> other.node_->name;
    case Conn::Next:
      if (auto c = node_->power <=> other.node_->power; c != 0) return c;
      return body() <=> other.body();
    case Conn::Neg:
    case Conn::G:
    case Conn::F:
      return body() <=> other.body();
    case Conn::Imp:
    case Conn::And:
    case Conn::Or:
      if (auto c = lhs() <=> other.lhs(); c != 0) return c;
      return rhs() <=> other.rhs();
  }
  return std::strong_ordering::equal;
}

Formula Formula::substitute_index(const std::string& name, const IndexExpr& value) const {
  if (!node_) return *this;
  switch (node_->tag) {
    case Conn::Var:
      return *this;
    case Conn::Next:
      return next(node_->power.substitute(name, value), body().substitute_index(name, value));
    case Conn::Neg:
      return neg(body().substitute_index(name, value));
    case Conn::G:
      return globally(body().substitute_index(name, value));
    case Conn::F:
      return eventually(body().substitute_index(name, value));
    case Conn::Imp:
      return imp(lhs().substitute_index(name, value), rhs().substitute_index(name, value));
    case Conn::And:
      return conj(lhs().substitute_index(name, value), rhs().substitute_index(name, value));
    case Conn::Or:
      return disj(lhs().substitute_index(name, value), rhs().substitute_index(name, value));
  }
  return *this;
}

bool Formula::mentions_index(const std::string& name) const {
  if (!node_ || node_->concrete) return false;
  if (node_->tag == Conn::Next && node_->power.mentions(name)) return true;
  if (node_->lhs && Formula(node_->lhs).mentions_index(name)) return true;
  if (node_->rhs && Formula(node_->rhs).mentions_index(name)) return true;
  return false;
}

void Formula::collect_index_vars(std::set<std::string>& out) const {
  if (!node_ || node_->concrete) return;
  if (node_->tag == Conn::Next)
    for (const auto& v : node_->power.variables()) out.insert(v);
  if (node_->lhs) Formula(node_->lhs).collect_index_vars(out);
  if (node_->rhs) Formula(node_->rhs).collect_index_vars(out);
}

void Formula::collect_prop_vars(std::set<std::string>& out) const {
  if (!node_) return;
  if (node_->tag == Conn::Var) {
    out.insert(node_->name);
    return;
  }
  if (node_->lhs) Formula(node_->lhs).collect_prop_vars(out);
  if (node_->rhs) Formula(node_->rhs).collect_prop_vars(out);
}

namespace {

// Precedence levels, loosest first: -> then \/ then /\ then prefixes.
enum Prec { kImp = 0, kOr = 1, kAnd = 2, kUnary = 3 };

void render(const Formula& f, int context, std::string& out, bool allow_symbolic) {
  switch (f.tag()) {
    case Conn::Var:
      out += f.name();
      return;
    case Conn::Next: {
      const IndexExpr& p = f.power();
      if (p.is_constant()) {
        for (std::uint64_t n = 0; n < p.constant_part(); ++n) out += "X ";
      } else if (allow_symbolic) {
        out += "X^[" + p.str() + "] ";
      } else {
        throw ProofError("cannot print schematic next-time prefix in concrete syntax");
      }
      render(f.body(), kUnary, out, allow_symbolic);
      return;
    }
    case Conn::Neg:
      out += "~";
      render(f.body(), kUnary, out, allow_symbolic);
      return;
    case Conn::G:
      out += "G ";
      render(f.body(), kUnary, out, allow_symbolic);
      return;
    case Conn::F:
      out += "F ";
      render(f.body(), kUnary, out, allow_symbolic);
      return;
    case Conn::Imp: {
      bool paren = context > kImp;
      if (paren) out += "(";
      render(f.lhs(), kOr, out, allow_symbolic);
      out += " -> ";
      render(f.rhs(), kImp, out, allow_symbolic);  // right-associative
      if (paren) out += ")";
      return;
    }
    case Conn::Or: {
      bool paren = context > kOr;
      if (paren) out += "(";
      render(f.lhs(), kOr, out, allow_symbolic);
      out += " \\/ ";
      render(f.rhs(), kAnd, out, allow_symbolic);
      if (paren) out += ")";
      return;
    }
    case Conn::And: {
      bool paren = context > kAnd;
      if (paren) out += "(";
      render(f.lhs(), kAnd, out, allow_symbolic);
      out += " /\\ ";
      render(f.rhs(), kUnary, out, allow_symbolic);
      if (paren) out += ")";
      return;
    }
  }
}

}  // namespace

std::string Formula::str() const {
  if (!node_) return "<empty>";
  std::string out;
  render(*this, kImp, out, false);
  return out;
}

std::string Formula::debug_str() const {
  if (!node_) return "<empty>";
  std::string out;
  render(*this, kImp, out, true);
  return out;
}

PrefixedFormula strip_x(const Formula& f) { return PrefixedFormula{f.prefix(), f.core()}; }

Formula wrap_x(const PrefixedFormula& pf) { return Formula::next(pf.prefix, pf.core); }

std::string print_formula(const Formula& f) { return f.str(); }

// ---------------------------------------------------------------------------
// Concrete grammar parser.

namespace {

struct Lexer {
  const std::string& text;
  std::size_t pos = 0;

  enum class Kind { Ident, Op, LParen, RParen, End };
  struct Token {
    Kind kind;
    std::string value;
    std::size_t offset;
  };

  Token peeked{Kind::End, "", 0};
  bool has_peeked = false;

  explicit Lexer(const std::string& t) : text(t) {}

  Token lex() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
    std::size_t start = pos;
    if (pos >= text.size()) return {Kind::End, "", start};
    char c = text[pos];
    if (c == '(') { ++pos; return {Kind::LParen, "(", start}; }
    if (c == ')') { ++pos; return {Kind::RParen, ")", start}; }
    if (c == '~') { ++pos; return {Kind::Op, "~", start}; }
    if (c == '-') {
      if (pos + 1 < text.size() && text[pos + 1] == '>') { pos += 2; return {Kind::Op, "->", start}; }
      throw SyntaxError("expected '->'", start);
    }
    if (c == '/') {
      if (pos + 1 < text.size() && text[pos + 1] == '\\') { pos += 2; return {Kind::Op, "/\\", start}; }
      throw SyntaxError("expected '/\\'", start);
    }
    if (c == '\\') {
      if (pos + 1 < text.size() && text[pos + 1] == '/') { pos += 2; return {Kind::Op, "\\/", start}; }
      throw SyntaxError("expected '\\/'", start);
    }
    if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string word;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
        word += text[pos];
        ++pos;
      }
      if (word == "X" || word == "G" || word == "F") return {Kind::Op, word, start};
      return {Kind::Ident, word, start};
    }
    throw SyntaxError("unexpected character", start);
  }

  const Token& peek() {
    if (!has_peeked) { peeked = lex(); has_peeked = true; }
    return peeked;
  }

  Token take() {
    Token t = peek();
    has_peeked = false;
    return t;
  }
};

Formula parse_imp(Lexer& lx);

Formula parse_unary(Lexer& lx) {
  const auto& t = lx.peek();
  if (t.kind == Lexer::Kind::Op) {
    if (t.value == "~") { lx.take(); return Formula::neg(parse_unary(lx)); }
    if (t.value == "X") { lx.take(); return Formula::next(parse_unary(lx)); }
    if (t.value == "G") { lx.take(); return Formula::globally(parse_unary(lx)); }
    if (t.value == "F") { lx.take(); return Formula::eventually(parse_unary(lx)); }
    throw SyntaxError("unexpected operator '" + t.value + "'", t.offset);
  }
  if (t.kind == Lexer::Kind::Ident) {
    auto tok = lx.take();
    return Formula::var(tok.value);
  }
  if (t.kind == Lexer::Kind::LParen) {
    lx.take();
    Formula inner = parse_imp(lx);
    auto close = lx.take();
    if (close.kind != Lexer::Kind::RParen) throw SyntaxError("expected ')'", close.offset);
    return inner;
  }
  throw SyntaxError("expected a formula", t.offset);
}

Formula parse_and(Lexer& lx) {
  Formula f = parse_unary(lx);
  while (lx.peek().kind == Lexer::Kind::Op && lx.peek().value == "/\\") {
    lx.take();
    f = Formula::conj(f, parse_unary(lx));
  }
  return f;
}

Formula parse_or(Lexer& lx) {
  Formula f = parse_and(lx);
  while (lx.peek().kind == Lexer::Kind::Op && lx.peek().value == "\\/") {
    lx.take();
    f = Formula::disj(f, parse_and(lx));
  }
  return f;
}

Formula parse_imp(Lexer& lx) {
  Formula f = parse_or(lx);
  if (lx.peek().kind == Lexer::Kind::Op && lx.peek().value == "->") {
    lx.take();
    return Formula::imp(f, parse_imp(lx));
  }
  return f;
}

}  // namespace

Formula parse_formula(const std::string& text) {
  Lexer lx(text);
  Formula f = parse_imp(lx);
  auto t = lx.take();
  if (t.kind != Lexer::Kind::End) throw SyntaxError("trailing input after formula", t.offset);
  return f;
}

}  // namespace proofkit
