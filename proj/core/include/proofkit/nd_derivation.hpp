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

#ifndef PROOFKIT_ND_DERIVATION_HPP
#define PROOFKIT_ND_DERIVATION_HPP

#include <cstdint>
#include <memory>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "proofkit/formula.hpp"

namespace proofkit {

/// Natural deduction rules. Introduction rules: ImpI, AndI, OrI1, OrI2,
/// NegI, GI, FI and Exm. Elimination rules: ImpE, AndE1, AndE2, OrE, GE, FE
/// and Exp. The premises of Exm and NegI are neither major nor minor; every
/// elimination rule has its major premise first.
enum class NdRule {
  Hyp,
  ImpI,
  ImpE,
  Exp,
  Exm,
  NegI,
  AndI,
  AndE1,
  AndE2,
  OrI1,
  OrI2,
  OrE,
  GI,
  GE,
  FI,
  FE,
};

const char* nd_rule_name(NdRule rule);
std::optional<NdRule> nd_rule_from_name(const std::string& name);
bool nd_is_introduction(NdRule rule);
bool nd_is_elimination(NdRule rule);

/// Parameters per rule:
///   Hyp                 label
///   ImpI                i, a, b, label        discharges (label, X^i a)
///   ImpE                i, a, b
///   Exp                 i, a                  major X^i ~a, minor X^i a
///   Exm                 i, a, label, label2   discharges X^i ~a / X^i a
///   NegI                i, a, j, g, label     premises X^j ~g and X^j g
///   AndI, AndE1, AndE2  i, a, b
///   OrI1, OrI2          i, a, b
///   OrE                 i, a, b, label, label2
///   GI                  i, a                  family over X^{i+j} a
///   GE, FI              i, k, a
///   FE                  i, a, label           family of gamma, [X^{i+j} a]
struct NdParams {
  IndexExpr i;
  IndexExpr k;
  IndexExpr j;
  std::optional<Formula> a;
  std::optional<Formula> b;
  std::optional<Formula> g;
  std::int64_t label = -1;
  std::int64_t label2 = -1;
};

class NdDerivation;

struct NdFamily {
  std::string var;
  std::vector<NdDerivation> explicit_members;
  std::shared_ptr<const NdDerivation> tail;
};

/// Labeled natural deduction tree. Assumption leaves carry a numeric label;
/// discharging rules name the labels they close. Nodes are immutable and
/// shared.
class NdDerivation {
 public:
  NdDerivation() = default;

  static NdDerivation hyp(Formula formula, std::int64_t label);
  static NdDerivation make(Formula conclusion, NdRule rule, NdParams params,
                           std::vector<NdDerivation> premises);
  static NdDerivation make_omega(Formula conclusion, NdRule rule, NdParams params,
                                 std::vector<NdDerivation> premises, NdFamily family);

  bool valid() const { return node_ != nullptr; }
  const Formula& conclusion() const { return node_->conclusion; }
  NdRule rule() const { return node_->rule; }
  const NdParams& params() const { return node_->params; }
  const std::vector<NdDerivation>& premises() const { return node_->premises; }
  bool has_family() const { return node_->family.has_value(); }
  const NdFamily& family() const { return node_->family.value(); }
  bool is_hyp() const { return node_->rule == NdRule::Hyp; }

  std::size_t node_count() const { return node_->node_count; }
  bool contains_omega() const { return node_->has_omega; }

  /// Discharge pairs declared by this node, in rule order.
  std::vector<std::pair<std::int64_t, Formula>> discharges() const;

  std::set<std::string> free_index_vars() const;
  std::set<std::string> bound_family_vars() const;
  std::set<std::int64_t> labels() const;

  NdDerivation substitute_index(const std::string& name, const IndexExpr& value) const;

  bool structurally_equal(const NdDerivation& other) const;

 private:
  struct Node {
    Formula conclusion;
    NdRule rule;
    NdParams params;
    std::vector<NdDerivation> premises;
    std::optional<NdFamily> family;
    std::size_t node_count = 1;
    bool has_omega = false;
  };

  explicit NdDerivation(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

NdDerivation nd_family_member_at(const NdFamily& family, const IndexExpr& index);

/// Renames every bound family variable to a fresh name outside `avoid`.
NdDerivation nd_freshen_family_vars(const NdDerivation& d, std::set<std::string> avoid);

/// Replaces every open assumption leaf labeled `label` by a copy of
/// `replacement`, whose end-formula must match the leaf formula. Labels
/// inside each inserted copy are renamed away from the host's labels, and
/// bound family variables are refreshed when they would capture.
NdDerivation nd_substitute(const NdDerivation& d, std::int64_t label,
                           const NdDerivation& replacement);

/// Relabels every open assumption leaf carrying `formula` to `fresh_label`.
NdDerivation nd_relabel_open(const NdDerivation& d, const Formula& formula,
                             std::int64_t fresh_label);

/// A label strictly larger than every label in use in the given trees.
std::int64_t nd_fresh_label(std::initializer_list<const NdDerivation*> trees);

}  // namespace proofkit

#endif  // PROOFKIT_ND_DERIVATION_HPP
