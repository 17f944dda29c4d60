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

#include "proofkit/nd_derivation.hpp"

#include <algorithm>
#include <map>

#include "proofkit/errors.hpp"
#include "proofkit/seq_derivation.hpp"

namespace proofkit {

const char* nd_rule_name(NdRule rule) {
  switch (rule) {
    case NdRule::Hyp: return "hyp";
    case NdRule::ImpI: return "imp-i";
    case NdRule::ImpE: return "imp-e";
    case NdRule::Exp: return "exp";
    case NdRule::Exm: return "exm";
    case NdRule::NegI: return "neg-i";
    case NdRule::AndI: return "and-i";
    case NdRule::AndE1: return "and-e1";
    case NdRule::AndE2: return "and-e2";
    case NdRule::OrI1: return "or-i1";
    case NdRule::OrI2: return "or-i2";
    case NdRule::OrE: return "or-e";
    case NdRule::GI: return "g-i";
    case NdRule::GE: return "g-e";
    case NdRule::FI: return "f-i";
    case NdRule::FE: return "f-e";
  }
  return "?";
}

std::optional<NdRule> nd_rule_from_name(const std::string& name) {
  static const std::vector<NdRule> all = {
      NdRule::Hyp,  NdRule::ImpI,  NdRule::ImpE,  NdRule::Exp, NdRule::Exm,  NdRule::NegI,
      NdRule::AndI, NdRule::AndE1, NdRule::AndE2, NdRule::OrI1, NdRule::OrI2, NdRule::OrE,
      NdRule::GI,   NdRule::GE,    NdRule::FI,    NdRule::FE};
  for (NdRule r : all)
    if (name == nd_rule_name(r)) return r;
  return std::nullopt;
}

bool nd_is_introduction(NdRule rule) {
  switch (rule) {
    case NdRule::ImpI:
    case NdRule::AndI:
    case NdRule::OrI1:
    case NdRule::OrI2:
    case NdRule::NegI:
    case NdRule::GI:
    case NdRule::FI:
    case NdRule::Exm:
      return true;
    default:
      return false;
  }
}

bool nd_is_elimination(NdRule rule) {
  switch (rule) {
    case NdRule::ImpE:
    case NdRule::AndE1:
    case NdRule::AndE2:
    case NdRule::OrE:
    case NdRule::GE:
    case NdRule::FE:
    case NdRule::Exp:
      return true;
    default:
      return false;
  }
}

NdDerivation NdDerivation::hyp(Formula formula, std::int64_t label) {
  if (label < 0) throw ProofError("assumption labels must be nonnegative");
  auto node = std::make_shared<Node>();
  node->conclusion = std::move(formula);
  node->rule = NdRule::Hyp;
  node->params.label = label;
  return NdDerivation(node);
}

NdDerivation NdDerivation::make(Formula conclusion, NdRule rule, NdParams params,
                                std::vector<NdDerivation> premises) {
  auto node = std::make_shared<Node>();
  node->conclusion = std::move(conclusion);
  node->rule = rule;
  node->params = std::move(params);
  for (const auto& p : premises) {
    node->node_count += p.node_count();
    node->has_omega = node->has_omega || p.contains_omega();
  }
  node->premises = std::move(premises);
  return NdDerivation(node);
}

NdDerivation NdDerivation::make_omega(Formula conclusion, NdRule rule, NdParams params,
                                      std::vector<NdDerivation> premises, NdFamily family) {
  if (!family.tail) throw ProofError("premise family requires a tail template");
  auto node = std::make_shared<Node>();
  node->conclusion = std::move(conclusion);
  node->rule = rule;
  node->params = std::move(params);
  node->has_omega = true;
  for (const auto& p : premises) node->node_count += p.node_count();
  node->node_count += family.tail->node_count();
  for (const auto& p : family.explicit_members) node->node_count += p.node_count();
  node->premises = std::move(premises);
  node->family = std::move(family);
  return NdDerivation(node);
}

std::vector<std::pair<std::int64_t, Formula>> NdDerivation::discharges() const {
  const NdParams& p = node_->params;
  switch (node_->rule) {
    case NdRule::ImpI:
    case NdRule::NegI:
      if (p.a) return {{p.label, Formula::next(p.i, *p.a)}};
      return {};
    case NdRule::Exm:
      if (p.a)
        return {{p.label, Formula::next(p.i, Formula::neg(*p.a))},
                {p.label2, Formula::next(p.i, *p.a)}};
      return {};
    case NdRule::OrE:
      if (p.a && p.b)
        return {{p.label, Formula::next(p.i, *p.a)}, {p.label2, Formula::next(p.i, *p.b)}};
      return {};
    case NdRule::FE:
      if (p.a && node_->family)
        return {{p.label, Formula::next(p.i + IndexExpr::var(node_->family->var), *p.a)}};
      return {};
    default:
      return {};
  }
}

namespace {

void nd_collect_free(const NdDerivation& d, std::set<std::string>& bound,
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
  scan_formula(d.conclusion());
  scan_index(d.params().i);
  scan_index(d.params().k);
  scan_index(d.params().j);
  if (d.params().a) scan_formula(*d.params().a);
  if (d.params().b) scan_formula(*d.params().b);
  if (d.params().g) scan_formula(*d.params().g);
  for (const auto& p : d.premises()) nd_collect_free(p, bound, out);
  if (d.has_family()) {
    for (const auto& p : d.family().explicit_members) nd_collect_free(p, bound, out);
    bool inserted = bound.insert(d.family().var).second;
    nd_collect_free(*d.family().tail, bound, out);
    if (inserted) bound.erase(d.family().var);
  }
}

void nd_collect_bound(const NdDerivation& d, std::set<std::string>& out) {
  for (const auto& p : d.premises()) nd_collect_bound(p, out);
  if (d.has_family()) {
    out.insert(d.family().var);
    for (const auto& p : d.family().explicit_members) nd_collect_bound(p, out);
    nd_collect_bound(*d.family().tail, out);
  }
}

void nd_collect_labels(const NdDerivation& d, std::set<std::int64_t>& out) {
  if (d.rule() == NdRule::Hyp) out.insert(d.params().label);
  if (d.params().label >= 0) out.insert(d.params().label);
  if (d.params().label2 >= 0) out.insert(d.params().label2);
  for (const auto& p : d.premises()) nd_collect_labels(p, out);
  if (d.has_family()) {
    for (const auto& p : d.family().explicit_members) nd_collect_labels(p, out);
    nd_collect_labels(*d.family().tail, out);
  }
}

}  // namespace

std::set<std::string> NdDerivation::free_index_vars() const {
  std::set<std::string> bound, out;
  nd_collect_free(*this, bound, out);
  return out;
}

std::set<std::string> NdDerivation::bound_family_vars() const {
  std::set<std::string> out;
  nd_collect_bound(*this, out);
  return out;
}

std::set<std::int64_t> NdDerivation::labels() const {
  std::set<std::int64_t> out;
  nd_collect_labels(*this, out);
  return out;
}

NdDerivation NdDerivation::substitute_index(const std::string& name,
                                            const IndexExpr& value) const {
  NdParams params = node_->params;
  params.i = params.i.substitute(name, value);
  params.k = params.k.substitute(name, value);
  params.j = params.j.substitute(name, value);
  if (params.a) params.a = params.a->substitute_index(name, value);
  if (params.b) params.b = params.b->substitute_index(name, value);
  if (params.g) params.g = params.g->substitute_index(name, value);
  std::vector<NdDerivation> premises;
  premises.reserve(node_->premises.size());
  for (const auto& p : node_->premises) premises.push_back(p.substitute_index(name, value));
  Formula conclusion = node_->conclusion.substitute_index(name, value);
  if (!node_->family)
    return make(std::move(conclusion), node_->rule, std::move(params), std::move(premises));
  const NdFamily& fam = *node_->family;
  if (fam.var == name)
    throw ProofError("substitution would capture bound family variable '" + name + "'");
  NdFamily out;
  out.var = fam.var;
  for (const auto& p : fam.explicit_members)
    out.explicit_members.push_back(p.substitute_index(name, value));
  out.tail = std::make_shared<const NdDerivation>(fam.tail->substitute_index(name, value));
  return make_omega(std::move(conclusion), node_->rule, std::move(params), std::move(premises),
                    std::move(out));
}

bool NdDerivation::structurally_equal(const NdDerivation& other) const {
  if (node_ == other.node_) return true;
  if (!node_ || !other.node_) return false;
  const NdParams& p = node_->params;
  const NdParams& q = other.node_->params;
  if (node_->rule != other.node_->rule || !(node_->conclusion == other.node_->conclusion) ||
      !(p.i == q.i) || !(p.k == q.k) || !(p.j == q.j) || p.label != q.label ||
      p.label2 != q.label2 || p.a.has_value() != q.a.has_value() ||
      p.b.has_value() != q.b.has_value() || p.g.has_value() != q.g.has_value())
    return false;
  if (p.a && !(*p.a == *q.a)) return false;
  if (p.b && !(*p.b == *q.b)) return false;
  if (p.g && !(*p.g == *q.g)) return false;
  if (node_->premises.size() != other.node_->premises.size()) return false;
  for (std::size_t n = 0; n < node_->premises.size(); ++n)
    if (!node_->premises[n].structurally_equal(other.node_->premises[n])) return false;
  if (node_->family.has_value() != other.node_->family.has_value()) return false;
  if (node_->family) {
    const NdFamily& f = *node_->family;
    const NdFamily& g = *other.node_->family;
    if (f.var != g.var || f.explicit_members.size() != g.explicit_members.size()) return false;
    for (std::size_t n = 0; n < f.explicit_members.size(); ++n)
      if (!f.explicit_members[n].structurally_equal(g.explicit_members[n])) return false;
    if (!f.tail->structurally_equal(*g.tail)) return false;
  }
  return true;
}

NdDerivation nd_family_member_at(const NdFamily& family, const IndexExpr& index) {
  if (index.is_constant() && index.constant_part() < family.explicit_members.size())
    return family.explicit_members[index.constant_part()];
  if (!index.is_constant() && index.constant_part() < family.explicit_members.size())
    throw ProofError(
        "schematic family index '" + index.str() +
        "' may fall below the explicit prefix; enlarge the prefix or instantiate first");
  return family.tail->substitute_index(family.var, index);
}

namespace {

NdDerivation nd_freshen_rec(const NdDerivation& d, std::set<std::string>& avoid,
                            VarSupply& supply) {
  std::vector<NdDerivation> premises;
  premises.reserve(d.premises().size());
  for (const auto& p : d.premises()) premises.push_back(nd_freshen_rec(p, avoid, supply));
  if (!d.has_family())
    return NdDerivation::make(d.conclusion(), d.rule(), d.params(), std::move(premises));
  const NdFamily& fam = d.family();
  NdFamily out;
  std::string fresh = supply.fresh(avoid);
  avoid.insert(fresh);
  out.var = fresh;
  for (const auto& p : fam.explicit_members)
    out.explicit_members.push_back(nd_freshen_rec(p, avoid, supply));
  NdDerivation inner = nd_freshen_rec(*fam.tail, avoid, supply);
  out.tail = std::make_shared<const NdDerivation>(
      inner.substitute_index(fam.var, IndexExpr::var(fresh)));
  return NdDerivation::make_omega(d.conclusion(), d.rule(), d.params(), std::move(premises),
                                  std::move(out));
}

}  // namespace

NdDerivation nd_freshen_family_vars(const NdDerivation& d, std::set<std::string> avoid) {
  for (const auto& v : d.free_index_vars()) avoid.insert(v);
  for (const auto& v : d.bound_family_vars()) avoid.insert(v);
  VarSupply supply;
  return nd_freshen_rec(d, avoid, supply);
}

std::int64_t nd_fresh_label(std::initializer_list<const NdDerivation*> trees) {
  std::int64_t next = 0;
  for (const NdDerivation* t : trees) {
    if (!t->valid()) continue;
    auto used = t->labels();
    if (!used.empty()) next = std::max(next, *used.rbegin() + 1);
  }
  return next;
}

namespace {

// Discharge pairs this node declares for a given finite premise index.
std::vector<std::pair<std::int64_t, Formula>> discharges_for_premise(const NdDerivation& d,
                                                                     std::size_t premise_index) {
  const NdParams& p = d.params();
  switch (d.rule()) {
    case NdRule::ImpI:
      if (premise_index == 0 && p.a) return {{p.label, Formula::next(p.i, *p.a)}};
      return {};
    case NdRule::NegI:
      if (p.a) return {{p.label, Formula::next(p.i, *p.a)}};
      return {};
    case NdRule::Exm:
      if (premise_index == 0 && p.a) return {{p.label, Formula::next(p.i, Formula::neg(*p.a))}};
      if (premise_index == 1 && p.a) return {{p.label2, Formula::next(p.i, *p.a)}};
      return {};
    case NdRule::OrE:
      if (premise_index == 1 && p.a) return {{p.label, Formula::next(p.i, *p.a)}};
      if (premise_index == 2 && p.b) return {{p.label2, Formula::next(p.i, *p.b)}};
      return {};
    default:
      return {};
  }
}

std::vector<std::pair<std::int64_t, Formula>> discharges_for_member(const NdDerivation& d,
                                                                    const IndexExpr& index) {
  const NdParams& p = d.params();
  if (d.rule() == NdRule::FE && p.a) return {{p.label, Formula::next(p.i + index, *p.a)}};
  return {};
}

struct SubstState {
  std::int64_t label;
  const NdDerivation* replacement;
  std::set<std::string> replacement_free;
  std::set<std::string> replacement_bound;
  std::int64_t next_label;

  NdDerivation fresh_copy(const std::set<std::string>& bound_on_path,
                          const std::set<std::int64_t>& active_labels) {
    NdDerivation copy = *this->replacement;
    for (const auto& v : replacement_free)
      if (bound_on_path.count(v))
        throw ProofError("substitution would capture schema variable '" + v + "'");
    bool collision = false;
    for (const auto& v : replacement_bound)
      if (bound_on_path.count(v)) collision = true;
    if (collision) copy = nd_freshen_family_vars(copy, bound_on_path);
    // Labels already discharged on the path above the insertion point would
    // capture equally-labeled leaves of the copy; rename exactly those.
    std::map<std::int64_t, std::int64_t> mapping;
    for (std::int64_t l : copy.labels())
      if (active_labels.count(l)) mapping[l] = next_label++;
    if (mapping.empty()) return copy;
    return relabel(copy, mapping);
  }

  static NdDerivation relabel(const NdDerivation& d,
                              const std::map<std::int64_t, std::int64_t>& mapping) {
    NdParams params = d.params();
    if (params.label >= 0 && mapping.count(params.label)) params.label = mapping.at(params.label);
    if (params.label2 >= 0 && mapping.count(params.label2))
      params.label2 = mapping.at(params.label2);
    std::vector<NdDerivation> premises;
    premises.reserve(d.premises().size());
    for (const auto& p : d.premises()) premises.push_back(relabel(p, mapping));
    if (!d.has_family())
      return NdDerivation::make(d.conclusion(), d.rule(), std::move(params), std::move(premises));
    NdFamily fam;
    fam.var = d.family().var;
    for (const auto& p : d.family().explicit_members)
      fam.explicit_members.push_back(relabel(p, mapping));
    fam.tail = std::make_shared<const NdDerivation>(relabel(*d.family().tail, mapping));
    return NdDerivation::make_omega(d.conclusion(), d.rule(), std::move(params),
                                    std::move(premises), std::move(fam));
  }

  NdDerivation walk(const NdDerivation& d, std::set<std::string>& bound_on_path,
                    std::set<std::int64_t>& active_labels) {
    if (d.rule() == NdRule::Hyp) {
      if (d.params().label != label) return d;
      if (!(d.conclusion() == replacement->conclusion()))
        throw ProofError("substitution target leaf concludes " + d.conclusion().debug_str() +
                         " but the replacement ends in " +
                         replacement->conclusion().debug_str());
      return fresh_copy(bound_on_path, active_labels);
    }
    auto walk_scoped = [&](const NdDerivation& sub,
                           const std::vector<std::pair<std::int64_t, Formula>>& scoped,
                           bool bind_var, const std::string& var) {
      bool shadowed = false;
      for (const auto& [l, f] : scoped) shadowed = shadowed || l == label;
      if (shadowed) return sub;
      std::vector<std::int64_t> added;
      for (const auto& [l, f] : scoped)
        if (active_labels.insert(l).second) added.push_back(l);
      bool inserted = bind_var && bound_on_path.insert(var).second;
      NdDerivation out = walk(sub, bound_on_path, active_labels);
      if (inserted) bound_on_path.erase(var);
      for (std::int64_t l : added) active_labels.erase(l);
      return out;
    };
    std::vector<NdDerivation> premises;
    premises.reserve(d.premises().size());
    for (std::size_t n = 0; n < d.premises().size(); ++n)
      premises.push_back(walk_scoped(d.premises()[n], discharges_for_premise(d, n), false, ""));
    if (!d.has_family())
      return NdDerivation::make(d.conclusion(), d.rule(), d.params(), std::move(premises));
    const NdFamily& fam = d.family();
    NdFamily out;
    out.var = fam.var;
    for (std::size_t n = 0; n < fam.explicit_members.size(); ++n)
      out.explicit_members.push_back(walk_scoped(
          fam.explicit_members[n], discharges_for_member(d, IndexExpr(n)), false, ""));
    out.tail = std::make_shared<const NdDerivation>(walk_scoped(
        *fam.tail, discharges_for_member(d, IndexExpr::var(fam.var)), true, fam.var));
    return NdDerivation::make_omega(d.conclusion(), d.rule(), d.params(), std::move(premises),
                                    std::move(out));
  }
};

}  // namespace

NdDerivation nd_substitute(const NdDerivation& d, std::int64_t label,
                           const NdDerivation& replacement) {
  SubstState state;
  state.label = label;
  state.replacement = &replacement;
  state.replacement_free = replacement.free_index_vars();
  state.replacement_bound = replacement.bound_family_vars();
  state.next_label = nd_fresh_label({&d, &replacement});
  std::set<std::string> bound;
  std::set<std::int64_t> active;
  return state.walk(d, bound, active);
}

namespace {

NdDerivation relabel_open_rec(const NdDerivation& d, const Formula& formula,
                              std::int64_t fresh_label,
                              std::vector<std::pair<std::int64_t, Formula>>& active) {
  if (d.rule() == NdRule::Hyp) {
    if (!(d.conclusion() == formula)) return d;
    for (const auto& [l, f] : active)
      if (l == d.params().label && f == d.conclusion()) return d;  // already discharged
    return NdDerivation::hyp(d.conclusion(), fresh_label);
  }
  std::vector<NdDerivation> premises;
  premises.reserve(d.premises().size());
  for (std::size_t n = 0; n < d.premises().size(); ++n) {
    auto scoped = discharges_for_premise(d, n);
    for (const auto& pair : scoped) active.push_back(pair);
    premises.push_back(relabel_open_rec(d.premises()[n], formula, fresh_label, active));
    active.resize(active.size() - scoped.size());
  }
  if (!d.has_family())
    return NdDerivation::make(d.conclusion(), d.rule(), d.params(), std::move(premises));
  const NdFamily& fam = d.family();
  NdFamily out;
  out.var = fam.var;
  for (std::size_t n = 0; n < fam.explicit_members.size(); ++n) {
    auto scoped = discharges_for_member(d, IndexExpr(n));
    for (const auto& pair : scoped) active.push_back(pair);
    out.explicit_members.push_back(
        relabel_open_rec(fam.explicit_members[n], formula, fresh_label, active));
    active.resize(active.size() - scoped.size());
  }
  auto scoped = discharges_for_member(d, IndexExpr::var(fam.var));
  for (const auto& pair : scoped) active.push_back(pair);
  out.tail = std::make_shared<const NdDerivation>(
      relabel_open_rec(*fam.tail, formula, fresh_label, active));
  active.resize(active.size() - scoped.size());
  return NdDerivation::make_omega(d.conclusion(), d.rule(), d.params(), std::move(premises),
                                  std::move(out));
}

}  // namespace

NdDerivation nd_relabel_open(const NdDerivation& d, const Formula& formula,
                             std::int64_t fresh_label) {
  std::vector<std::pair<std::int64_t, Formula>> active;
  return relabel_open_rec(d, formula, fresh_label, active);
}

}  // namespace proofkit
