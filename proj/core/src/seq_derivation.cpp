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

#include "proofkit/seq_derivation.hpp"

#include "proofkit/errors.hpp"

namespace proofkit {

const char* seq_rule_name(SeqRule rule) {
  switch (rule) {
    case SeqRule::Init: return "init";
    case SeqRule::Cut: return "cut";
    case SeqRule::WeLeft: return "we-left";
    case SeqRule::WeRight: return "we-right";
    case SeqRule::ImpLeft: return "imp-left";
    case SeqRule::ImpRight: return "imp-right";
    case SeqRule::NegLeft: return "neg-left";
    case SeqRule::NegRight: return "neg-right";
    case SeqRule::AndLeft: return "and-left";
    case SeqRule::AndRight: return "and-right";
    case SeqRule::OrLeft: return "or-left";
    case SeqRule::OrRight: return "or-right";
    case SeqRule::OrRight1: return "or-right1";
    case SeqRule::OrRight2: return "or-right2";
    case SeqRule::ExMiddle: return "ex-middle";
    case SeqRule::GLeft: return "g-left";
    case SeqRule::GRight: return "g-right";
    case SeqRule::FLeft: return "f-left";
    case SeqRule::FRight: return "f-right";
  }
  return "?";
}

std::optional<SeqRule> seq_rule_from_name(const std::string& name) {
  static const std::vector<SeqRule> all = {
      SeqRule::Init,     SeqRule::Cut,      SeqRule::WeLeft,   SeqRule::WeRight,
      SeqRule::ImpLeft,  SeqRule::ImpRight, SeqRule::NegLeft,  SeqRule::NegRight,
      SeqRule::AndLeft,  SeqRule::AndRight, SeqRule::OrLeft,   SeqRule::OrRight,
      SeqRule::OrRight1, SeqRule::OrRight2, SeqRule::ExMiddle, SeqRule::GLeft,
      SeqRule::GRight,   SeqRule::FLeft,    SeqRule::FRight};
  for (SeqRule r : all)
    if (name == seq_rule_name(r)) return r;
  return std::nullopt;
}

SeqDerivation SeqDerivation::make(Sequent conclusion, SeqRule rule, SeqParams params,
                                  std::vector<SeqDerivation> premises) {
  auto node = std::make_shared<Node>();
  node->conclusion = std::move(conclusion);
  node->rule = rule;
  node->params = std::move(params);
  node->has_cut = rule == SeqRule::Cut;
  for (const auto& p : premises) {
    node->node_count += p.node_count();
    node->has_cut = node->has_cut || p.contains_cut();
    node->has_omega = node->has_omega || p.contains_omega();
  }
  node->premises = std::move(premises);
  return SeqDerivation(node);
}

SeqDerivation SeqDerivation::make_omega(Sequent conclusion, SeqRule rule, SeqParams params,
                                        SeqFamily family) {
  if (!family.tail) throw ProofError("premise family requires a tail template");
  auto node = std::make_shared<Node>();
  node->conclusion = std::move(conclusion);
  node->rule = rule;
  node->params = std::move(params);
  node->has_omega = true;
  node->has_cut = family.tail->contains_cut();
  node->node_count += family.tail->node_count();
  for (const auto& p : family.explicit_members) {
    node->node_count += p.node_count();
    node->has_cut = node->has_cut || p.contains_cut();
  }
  node->family = std::move(family);
  return SeqDerivation(node);
}

std::size_t SeqDerivation::cut_count() const {
  std::size_t total = rule() == SeqRule::Cut ? 1 : 0;
  for (const auto& p : premises()) total += p.cut_count();
  if (has_family()) {
    for (const auto& p : family().explicit_members) total += p.cut_count();
    total += family().tail->cut_count();
  }
  return total;
}

namespace {

void collect_free_vars(const SeqDerivation& d, std::set<std::string>& bound,
                       std::set<std::string>& out) {
  auto scan_formula = [&](const Formula& f) {
    std::set<std::string> vars;
    f.collect_index_vars(vars);
    for (const auto& v : vars)
      if (!bound.count(v)) out.insert(v);
  };
  auto scan_index = [&](const IndexExpr& e) {
    for (const auto& v : e.variables())
      if (!bound.count(v)) out.insert(v);
  };
  for (const auto& f : d.conclusion().antecedent) scan_formula(f);
  for (const auto& f : d.conclusion().succedent) scan_formula(f);
  scan_index(d.params().i);
  scan_index(d.params().k);
  if (d.params().a) scan_formula(*d.params().a);
  if (d.params().b) scan_formula(*d.params().b);
  for (const auto& p : d.premises()) collect_free_vars(p, bound, out);
  if (d.has_family()) {
    for (const auto& p : d.family().explicit_members) collect_free_vars(p, bound, out);
    bool inserted = bound.insert(d.family().var).second;
    collect_free_vars(*d.family().tail, bound, out);
    if (inserted) bound.erase(d.family().var);
  }
}

void collect_bound_vars(const SeqDerivation& d, std::set<std::string>& out) {
  for (const auto& p : d.premises()) collect_bound_vars(p, out);
  if (d.has_family()) {
    out.insert(d.family().var);
    for (const auto& p : d.family().explicit_members) collect_bound_vars(p, out);
    collect_bound_vars(*d.family().tail, out);
  }
}

}  // namespace

std::set<std::string> SeqDerivation::free_index_vars() const {
  std::set<std::string> bound, out;
  collect_free_vars(*this, bound, out);
  return out;
}

std::set<std::string> SeqDerivation::bound_family_vars() const {
  std::set<std::string> out;
  collect_bound_vars(*this, out);
  return out;
}

SeqDerivation SeqDerivation::substitute_index(const std::string& name,
                                              const IndexExpr& value) const {
  SeqParams params = node_->params;
  params.i = params.i.substitute(name, value);
  params.k = params.k.substitute(name, value);
  if (params.a) params.a = params.a->substitute_index(name, value);
  if (params.b) params.b = params.b->substitute_index(name, value);
  std::vector<SeqDerivation> premises;
  premises.reserve(node_->premises.size());
  for (const auto& p : node_->premises) premises.push_back(p.substitute_index(name, value));
  Sequent conclusion = node_->conclusion.substitute_index(name, value);
  if (!node_->family) {
    return make(std::move(conclusion), node_->rule, std::move(params), std::move(premises));
  }
  const SeqFamily& fam = *node_->family;
  if (fam.var == name)
    throw ProofError("substitution would capture bound family variable '" + name + "'");
  SeqFamily out;
  out.var = fam.var;
  for (const auto& p : fam.explicit_members)
    out.explicit_members.push_back(p.substitute_index(name, value));
  out.tail = std::make_shared<const SeqDerivation>(fam.tail->substitute_index(name, value));
  return make_omega(std::move(conclusion), node_->rule, std::move(params), std::move(out));
}

SeqDerivation family_member_at(const SeqFamily& family, const IndexExpr& index) {
  if (index.is_constant() && index.constant_part() < family.explicit_members.size())
    return family.explicit_members[index.constant_part()];
  if (!index.is_constant() && index.constant_part() < family.explicit_members.size())
    throw ProofError(
        "schematic family index '" + index.str() +
        "' may fall below the explicit prefix; enlarge the prefix or instantiate first");
  return family.tail->substitute_index(family.var, index);
}

std::string VarSupply::fresh(const std::set<std::string>& avoid) {
  while (true) {
    std::string name = "j" + std::to_string(counter_++);
    if (!avoid.count(name)) return name;
  }
}

namespace {

SeqDerivation freshen_rec(const SeqDerivation& d, std::set<std::string>& avoid, VarSupply& supply) {
  std::vector<SeqDerivation> premises;
  premises.reserve(d.premises().size());
  for (const auto& p : d.premises()) premises.push_back(freshen_rec(p, avoid, supply));
  if (!d.has_family())
    return SeqDerivation::make(d.conclusion(), d.rule(), d.params(), std::move(premises));
  const SeqFamily& fam = d.family();
  SeqFamily out;
  std::string fresh = supply.fresh(avoid);
  avoid.insert(fresh);
  out.var = fresh;
  for (const auto& p : fam.explicit_members)
    out.explicit_members.push_back(freshen_rec(p, avoid, supply));
  // Rename inner binders first so a shadowed same-name binder cannot block
  // the outer substitution.
  SeqDerivation inner = freshen_rec(*fam.tail, avoid, supply);
  out.tail = std::make_shared<const SeqDerivation>(
      inner.substitute_index(fam.var, IndexExpr::var(fresh)));
  return SeqDerivation::make_omega(d.conclusion(), d.rule(), d.params(), std::move(out));
}

}  // namespace

SeqDerivation freshen_family_vars(const SeqDerivation& d, std::set<std::string> avoid) {
  for (const auto& v : d.free_index_vars()) avoid.insert(v);
  for (const auto& v : d.bound_family_vars()) avoid.insert(v);
  VarSupply supply;
  return freshen_rec(d, avoid, supply);
}

}  // namespace proofkit
