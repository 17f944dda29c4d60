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

#ifndef PROOFKIT_FORMULA_HPP
#define PROOFKIT_FORMULA_HPP

#include <compare>
#include <cstddef>
#include <memory>
#include <set>
#include <string>
#include <vector>

#include "proofkit/index_expr.hpp"

namespace proofkit {

/// Formula constructors of the until-free temporal language.
///
/// `Next` is the iterated next-time prefix X^e. It is kept in a canonical
/// form: a Next node never has a Next child and never carries a zero
/// exponent, so X^0 a is represented as `a` itself and X X a collapses to
/// X^2 a. The exponent is an IndexExpr, which lets derivation schemas talk
/// about X^{i+j} a with a schema variable j.
enum class Conn { Var, Imp, Neg, And, Or, G, F, Next };

class Formula {
 public:
  Formula() = default;  // empty handle; only produced by default construction

  static Formula var(const std::string& name);
  static Formula imp(Formula lhs, Formula rhs);
  static Formula neg(Formula body);
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula globally(Formula body);
  static Formula eventually(Formula body);
  static Formula next(Formula body) { return next(IndexExpr(1), std::move(body)); }
  /// Normalizing: next(0, a) is a, next(e, next(d, a)) is next(e+d, a).
  static Formula next(const IndexExpr& power, Formula body);

  bool valid() const { return node_ != nullptr; }
  Conn tag() const { return node_->tag; }
  const std::string& name() const { return node_->name; }  // Var
  const IndexExpr& power() const { return node_->power; }  // Next
  Formula lhs() const { return Formula(node_->lhs); }
  Formula rhs() const { return Formula(node_->rhs); }
  Formula body() const { return Formula(node_->lhs); }     // Neg, G, F, Next

  /// Exponent of the outermost next-time prefix (zero when not Next-rooted).
  IndexExpr prefix() const;
  /// Formula under the outermost next-time prefix (never Next-rooted).
  Formula core() const;

  std::size_t size() const { return node_ ? node_->size : 0; }
  bool is_concrete() const { return node_ == nullptr || node_->concrete; }

  bool operator==(const Formula& other) const;
  std::strong_ordering operator<=>(const Formula& other) const;

  Formula substitute_index(const std::string& name, const IndexExpr& value) const;
  bool mentions_index(const std::string& name) const;
  void collect_index_vars(std::set<std::string>& out) const;
  void collect_prop_vars(std::set<std::string>& out) const;

  /// Concrete grammar rendering ("~p /\ X X q"). Requires is_concrete().
  std::string str() const;
  /// Rendering that allows schema variables in prefixes ("X^[i+1] G p").
  std::string debug_str() const;

 private:
  struct Node {
    Conn tag;
    std::string name;
    IndexExpr power;
    std::shared_ptr<const Node> lhs;
    std::shared_ptr<const Node> rhs;
    std::size_t size = 1;
    bool concrete = true;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}
  static Formula make(Conn tag, Formula lhs, Formula rhs);

  std::shared_ptr<const Node> node_;
};

/// A formula split into its outermost next-time prefix and a core that is
/// not Next-rooted. Wrapping the prefix back around the core is the identity.
struct PrefixedFormula {
  IndexExpr prefix;
  Formula core;
};

PrefixedFormula strip_x(const Formula& f);
Formula wrap_x(const PrefixedFormula& pf);

/// Parses the concrete formula grammar:
///   formula := imp
///   imp     := or ("->" imp)?
///   or      := and ("\/" and)*
///   and     := unary ("/\" unary)*
///   unary   := ("~"|"X"|"G"|"F") unary | atom
///   atom    := IDENT | "(" formula ")"
/// IDENT = [a-zA-Z_][a-zA-Z0-9_]* except the operator letters X, G, F.
/// Throws SyntaxError with a byte offset on malformed input.
Formula parse_formula(const std::string& text);

/// Inverse of parse_formula on concrete formulas: parse(print(f)) == f.
std::string print_formula(const Formula& f);

}  // namespace proofkit

#endif  // PROOFKIT_FORMULA_HPP
