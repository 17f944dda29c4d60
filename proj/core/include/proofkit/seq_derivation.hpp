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

#ifndef PROOFKIT_SEQ_DERIVATION_HPP
#define PROOFKIT_SEQ_DERIVATION_HPP

#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "proofkit/sequent.hpp"

namespace proofkit {

/// Rule names of both sequent calculi. The multi-succedent calculus (lt) uses
/// Init, Cut, WeLeft, WeRight, the left/right logical rules and the single
/// OrRight; the single-succedent calculus (slt) uses Init, Cut, WeRight,
/// OrRight1/OrRight2 and ExMiddle instead of WeLeft/OrRight. The checkers
/// reject out-of-calculus tags.
enum class SeqRule {
  Init,
  Cut,
  WeLeft,
  WeRight,
  ImpLeft,
  ImpRight,
  NegLeft,
  NegRight,
  AndLeft,
  AndRight,
  OrLeft,
  OrRight,
  OrRight1,
  OrRight2,
  ExMiddle,
  GLeft,
  GRight,
  FLeft,
  FRight,
};

const char* seq_rule_name(SeqRule rule);
std::optional<SeqRule> seq_rule_from_name(const std::string& name);

/// Rule parameters. Which fields are meaningful depends on the tag:
///   Cut, WeLeft, WeRight            a = the cut / weakening formula
///   ImpLeft/Right, AndLeft/Right,
///   OrLeft/Right(1/2)               i, a, b with principal X^i(a op b)
///   NegLeft/Right, ExMiddle         i, a with principal X^i ~a
///   GLeft, FRight                   i, k, a  (X^{i+k} a premise formula)
///   GRight, FLeft                   i, a     (omega rule over X^{i+j} a)
///   Init                            none (read off the conclusion)
struct SeqParams {
  IndexExpr i;
  IndexExpr k;
  std::optional<Formula> a;
  std::optional<Formula> b;
};

class SeqDerivation;

/// Finite representation of a countably infinite premise family
/// { P_j }_{j in omega}: explicit derivations for j = 0..m-1 followed by one
/// tail template whose indices may mention the schema variable `var`; the
/// template at var = n is the family member for every n >= m.
struct SeqFamily {
  std::string var;
  std::vector<SeqDerivation> explicit_members;
  std::shared_ptr<const SeqDerivation> tail;
};

/// Rule-labeled derivation tree for either sequent calculus. Nodes are
/// immutable and shared, so copies are cheap and trees are safe to use from
/// concurrent threads.
class SeqDerivation {
 public:
  SeqDerivation() = default;

  static SeqDerivation make(Sequent conclusion, SeqRule rule, SeqParams params,
                            std::vector<SeqDerivation> premises);
  static SeqDerivation make_omega(Sequent conclusion, SeqRule rule, SeqParams params,
                                  SeqFamily family);

  bool valid() const { return node_ != nullptr; }
  const Sequent& conclusion() const { return node_->conclusion; }
  SeqRule rule() const { return node_->rule; }
  const SeqParams& params() const { return node_->params; }
  const std::vector<SeqDerivation>& premises() const { return node_->premises; }
  bool has_family() const { return node_->family.has_value(); }
  const SeqFamily& family() const { return node_->family.value(); }

  std::size_t node_count() const { return node_->node_count; }
  bool contains_cut() const { return node_->has_cut; }
  bool contains_omega() const { return node_->has_omega; }
  std::size_t cut_count() const;

  /// Schema variables appearing free in the tree (bound family variables are
  /// excluded within their scope).
  std::set<std::string> free_index_vars() const;
  /// Every family variable bound anywhere in the tree.
  std::set<std::string> bound_family_vars() const;

  SeqDerivation substitute_index(const std::string& name, const IndexExpr& value) const;

 private:
  struct Node {
    Sequent conclusion;
    SeqRule rule;
    SeqParams params;
    std::vector<SeqDerivation> premises;
    std::optional<SeqFamily> family;
    std::size_t node_count = 1;
    bool has_cut = false;
    bool has_omega = false;
  };

  explicit SeqDerivation(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

/// Member of a premise family at a given index. Concrete indices below the
/// explicit prefix select explicit members; anything else instantiates the
/// tail, which requires the index to stay at or beyond the prefix for every
/// assignment (for a schematic index: constant part >= prefix length).
SeqDerivation family_member_at(const SeqFamily& family, const IndexExpr& index);

/// Fresh schema-variable names: v0, v1, ... distinct from everything in use.
class VarSupply {
 public:
  std::string fresh(const std::set<std::string>& avoid);

 private:
  std::size_t counter_ = 0;
};

/// Renames every bound family variable in `d` to a fresh name not in `avoid`.
/// Used before nesting one derivation inside another family's tail.
SeqDerivation freshen_family_vars(const SeqDerivation& d, std::set<std::string> avoid);

}  // namespace proofkit

#endif  // PROOFKIT_SEQ_DERIVATION_HPP
