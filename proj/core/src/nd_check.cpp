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

#include "proofkit/nd_check.hpp"

#include <functional>

#include "proofkit/errors.hpp"

namespace proofkit {

std::string nd_path_str(const NdPath& path) {
  if (path.empty()) return "root";
  std::string out;
  for (const auto& step : path) {
    if (!out.empty()) out += ".";
    switch (step.kind) {
      case NdStep::Kind::Premise: out += std::to_string(step.index); break;
      case NdStep::Kind::FamilyExplicit: out += "omega[" + std::to_string(step.index) + "]"; break;
      case NdStep::Kind::FamilyTail: out += "omega.tail"; break;
    }
  }
  return out;
}

NdDerivation nd_subtree_at(const NdDerivation& d, const NdPath& path) {
  NdDerivation cur = d;
  for (const auto& step : path) {
    switch (step.kind) {
      case NdStep::Kind::Premise:
        if (step.index >= cur.premises().size()) throw ProofError("stale node path");
        cur = cur.premises()[step.index];
        break;
      case NdStep::Kind::FamilyExplicit:
        if (!cur.has_family() || step.index >= cur.family().explicit_members.size())
          throw ProofError("stale node path");
        cur = cur.family().explicit_members[step.index];
        break;
      case NdStep::Kind::FamilyTail:
        if (!cur.has_family()) throw ProofError("stale node path");
        cur = *cur.family().tail;
        break;
    }
  }
  return cur;
}

NdDerivation nd_replace_at(const NdDerivation& d, const NdPath& path,
                           const NdDerivation& replacement) {
  if (path.empty()) return replacement;
  NdStep step = path.front();
  NdPath rest(path.begin() + 1, path.end());
  std::vector<NdDerivation> premises = d.premises();
  std::optional<NdFamily> family;
  if (d.has_family()) family = d.family();
  switch (step.kind) {
    case NdStep::Kind::Premise:
      if (step.index >= premises.size()) throw ProofError("stale node path");
      premises[step.index] = nd_replace_at(premises[step.index], rest, replacement);
      break;
    case NdStep::Kind::FamilyExplicit:
      if (!family || step.index >= family->explicit_members.size())
        throw ProofError("stale node path");
      family->explicit_members[step.index] =
          nd_replace_at(family->explicit_members[step.index], rest, replacement);
      break;
    case NdStep::Kind::FamilyTail:
      if (!family) throw ProofError("stale node path");
      family->tail =
          std::make_shared<const NdDerivation>(nd_replace_at(*family->tail, rest, replacement));
      break;
  }
  if (family)
    return NdDerivation::make_omega(d.conclusion(), d.rule(), d.params(), std::move(premises),
                                    std::move(*family));
  return NdDerivation::make(d.conclusion(), d.rule(), d.params(), std::move(premises));
}

namespace {

std::vector<std::pair<std::int64_t, Formula>> scoped_discharges(const NdDerivation& d,
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

std::vector<std::pair<std::int64_t, Formula>> member_discharges(const NdDerivation& d,
                                                                const IndexExpr& index) {
  const NdParams& p = d.params();
  if (d.rule() == NdRule::FE && p.a) return {{p.label, Formula::next(p.i + index, *p.a)}};
  return {};
}

struct NdChecker {
  CheckReport report;
  std::set<std::string> bound_vars;
  std::vector<std::pair<std::int64_t, Formula>> active;

  void violation(const NdPath& path, const std::string& msg) {
    report.violations.emplace_back(nd_path_str(path), msg);
  }

  const Formula* need_a(const NdDerivation& d, const NdPath& path) {
    if (!d.params().a) {
      violation(path, std::string(nd_rule_name(d.rule())) + " is missing its formula parameter");
      return nullptr;
    }
    return &*d.params().a;
  }

  const Formula* need_b(const NdDerivation& d, const NdPath& path) {
    if (!d.params().b) {
      violation(path,
                std::string(nd_rule_name(d.rule())) + " is missing its second formula parameter");
      return nullptr;
    }
    return &*d.params().b;
  }

  bool need_label(const NdDerivation& d, const NdPath& path, std::int64_t label) {
    if (label < 0) {
      violation(path, std::string(nd_rule_name(d.rule())) + " needs a discharge label");
      return false;
    }
    return true;
  }

  static bool family_rule(NdRule rule) { return rule == NdRule::GI || rule == NdRule::FE; }

  static std::size_t arity(NdRule rule) {
    switch (rule) {
      case NdRule::Hyp:
      case NdRule::GI: return 0;
      case NdRule::ImpI:
      case NdRule::AndE1:
      case NdRule::AndE2:
      case NdRule::OrI1:
      case NdRule::OrI2:
      case NdRule::GE:
      case NdRule::FI:
      case NdRule::FE: return 1;
      case NdRule::OrE: return 3;
      default: return 2;
    }
  }

  void check(const NdDerivation& d, NdPath& path) {
    if (family_rule(d.rule()) != d.has_family())
      violation(path, std::string(nd_rule_name(d.rule())) +
                          (d.has_family() ? " does not take a premise family"
                                          : " requires a premise family"));
    else if (d.premises().size() != arity(d.rule()))
      violation(path, std::string(nd_rule_name(d.rule())) + " expects " +
                          std::to_string(arity(d.rule())) + " premises, found " +
                          std::to_string(d.premises().size()));
    else
      check_rule(d, path);

    for (std::size_t n = 0; n < d.premises().size(); ++n) {
      auto scoped = scoped_discharges(d, n);
      push_discharges(path, scoped);
      path.push_back({NdStep::Kind::Premise, n});
      check(d.premises()[n], path);
      path.pop_back();
      active.resize(active.size() - scoped.size());
    }
    if (d.has_family()) check_family(d, path);
  }

  void push_discharges(const NdPath& path,
                       const std::vector<std::pair<std::int64_t, Formula>>& scoped) {
    for (const auto& [label, formula] : scoped) {
      for (const auto& [other, f2] : active)
        if (other == label)
          violation(path, "label " + std::to_string(label) +
                              " is discharged twice on one path");
      active.emplace_back(label, formula);
    }
  }

  void check_family(const NdDerivation& d, NdPath& path) {
    const NdFamily& fam = d.family();
    if (fam.var.empty()) {
      violation(path, "premise family has an empty schema variable");
      return;
    }
    for (std::size_t n = 0; n < fam.explicit_members.size(); ++n) {
      auto scoped = member_discharges(d, IndexExpr(n));
      push_discharges(path, scoped);
      path.push_back({NdStep::Kind::FamilyExplicit, n});
      check(fam.explicit_members[n], path);
      path.pop_back();
      active.resize(active.size() - scoped.size());
    }
    if (bound_vars.count(fam.var)) {
      violation(path, "schema variable '" + fam.var +
                          "' is already bound by an enclosing family");
      return;
    }
    bound_vars.insert(fam.var);
    auto scoped = member_discharges(d, IndexExpr::var(fam.var));
    push_discharges(path, scoped);
    path.push_back({NdStep::Kind::FamilyTail, 0});
    check(*fam.tail, path);
    path.pop_back();
    active.resize(active.size() - scoped.size());
    bound_vars.erase(fam.var);
  }

  void check_rule(const NdDerivation& d, const NdPath& path) {
    const NdParams& ps = d.params();
    const Formula& c = d.conclusion();
    auto fail = [&](const std::string& msg) { violation(path, msg); };
    auto end_of = [&](std::size_t n) -> const Formula& { return d.premises()[n].conclusion(); };

    switch (d.rule()) {
      case NdRule::Hyp: {
        if (ps.label < 0) fail("assumption leaf needs a nonnegative label");
        // Leaf formula versus an enclosing discharge of the same label.
        for (auto it = active.rbegin(); it != active.rend(); ++it) {
          if (it->first == ps.label) {
            if (!(it->second == c))
              fail("assumption labeled " + std::to_string(ps.label) + " concludes " +
                   c.debug_str() + " but its discharger declares " + it->second.debug_str());
            break;
          }
        }
        return;
      }
      case NdRule::ImpI: {
        const Formula* a = need_a(d, path);
        const Formula* b = need_b(d, path);
        if (!a || !b || !need_label(d, path, ps.label)) return;
        if (!(c == Formula::next(ps.i, Formula::imp(*a, *b))))
          return fail("conclusion does not match the stated implication");
        if (!(end_of(0) == Formula::next(ps.i, *b)))
          return fail("premise must end in the consequent");
        return;
      }
      case NdRule::ImpE: {
        const Formula* a = need_a(d, path);
        const Formula* b = need_b(d, path);
        if (!a || !b) return;
        if (!(end_of(0) == Formula::next(ps.i, Formula::imp(*a, *b))))
          return fail("major premise must end in the implication");
        if (!(end_of(1) == Formula::next(ps.i, *a)))
          return fail("minor premise must end in the antecedent at the same exponent");
        if (!(c == Formula::next(ps.i, *b))) return fail("conclusion must be the consequent");
        return;
      }
      case NdRule::Exp: {
        const Formula* a = need_a(d, path);
        if (!a) return;
        if (!(end_of(0) == Formula::next(ps.i, Formula::neg(*a))))
          return fail("major premise must end in the negation");
        if (!(end_of(1) == Formula::next(ps.i, *a)))
          return fail("minor premise must end in the body at the same exponent");
        return;  // conclusion is arbitrary
      }
      case NdRule::Exm: {
        const Formula* a = need_a(d, path);
        if (!a || !need_label(d, path, ps.label) || !need_label(d, path, ps.label2)) return;
        if (ps.label == ps.label2) return fail("case labels must differ");
        if (!(end_of(0) == c) || !(end_of(1) == c))
          return fail("both case premises must end in the conclusion");
        return;
      }
      case NdRule::NegI: {
        const Formula* a = need_a(d, path);
        if (!a || !need_label(d, path, ps.label)) return;
        if (!ps.g) return fail("neg-i is missing its side-formula parameter");
        if (!(c == Formula::next(ps.i, Formula::neg(*a))))
          return fail("conclusion does not match the stated negation");
        if (!(end_of(0) == Formula::next(ps.j, Formula::neg(*ps.g))))
          return fail("first premise must end in the negated side formula");
        if (!(end_of(1) == Formula::next(ps.j, *ps.g)))
          return fail("second premise must end in the side formula");
        return;
      }
      case NdRule::AndI: {
        const Formula* a = need_a(d, path);
        const Formula* b = need_b(d, path);
        if (!a || !b) return;
        if (!(end_of(0) == Formula::next(ps.i, *a)) || !(end_of(1) == Formula::next(ps.i, *b)))
          return fail("premises must end in the conjuncts");
        if (!(c == Formula::next(ps.i, Formula::conj(*a, *b))))
          return fail("conclusion must be the conjunction");
        return;
      }
      case NdRule::AndE1:
      case NdRule::AndE2: {
        const Formula* a = need_a(d, path);
        const Formula* b = need_b(d, path);
        if (!a || !b) return;
        if (!(end_of(0) == Formula::next(ps.i, Formula::conj(*a, *b))))
          return fail("premise must end in the conjunction");
        Formula want = Formula::next(ps.i, d.rule() == NdRule::AndE1 ? *a : *b);
        if (!(c == want)) return fail("conclusion must be the selected conjunct");
        return;
      }
      case NdRule::OrI1:
      case NdRule::OrI2: {
        const Formula* a = need_a(d, path);
        const Formula* b = need_b(d, path);
        if (!a || !b) return;
        Formula want = Formula::next(ps.i, d.rule() == NdRule::OrI1 ? *a : *b);
        if (!(end_of(0) == want)) return fail("premise must end in the chosen disjunct");
        if (!(c == Formula::next(ps.i, Formula::disj(*a, *b))))
          return fail("conclusion must be the disjunction");
        return;
      }
      case NdRule::OrE: {
        const Formula* a = need_a(d, path);
        const Formula* b = need_b(d, path);
        if (!a || !b || !need_label(d, path, ps.label) || !need_label(d, path, ps.label2)) return;
        if (ps.label == ps.label2) return fail("branch labels must differ");
        if (!(end_of(0) == Formula::next(ps.i, Formula::disj(*a, *b))))
          return fail("major premise must end in the disjunction");
        if (!(end_of(1) == c) || !(end_of(2) == c))
          return fail("both branches must end in the conclusion");
        return;
      }
      case NdRule::GI: {
        const Formula* a = need_a(d, path);
        if (!a) return;
        if (!(c == Formula::next(ps.i, Formula::globally(*a))))
          return fail("conclusion must be the globally formula");
        match_family(d, path, [&](const IndexExpr& e) { return Formula::next(ps.i + e, *a); });
        return;
      }
      case NdRule::GE: {
        const Formula* a = need_a(d, path);
        if (!a) return;
        if (!(end_of(0) == Formula::next(ps.i, Formula::globally(*a))))
          return fail("premise must end in the globally formula");
        if (!(c == Formula::next(ps.i + ps.k, *a)))
          return fail("conclusion must be the shifted body");
        return;
      }
      case NdRule::FI: {
        const Formula* a = need_a(d, path);
        if (!a) return;
        if (!(end_of(0) == Formula::next(ps.i + ps.k, *a)))
          return fail("premise must end in the shifted body");
        if (!(c == Formula::next(ps.i, Formula::eventually(*a))))
          return fail("conclusion must be the eventually formula");
        return;
      }
      case NdRule::FE: {
        const Formula* a = need_a(d, path);
        if (!a || !need_label(d, path, ps.label)) return;
        if (!(end_of(0) == Formula::next(ps.i, Formula::eventually(*a))))
          return fail("major premise must end in the eventually formula");
        match_family(d, path, [&](const IndexExpr&) { return c; });
        return;
      }
    }
  }

  void match_family(const NdDerivation& d, const NdPath& path,
                    const std::function<Formula(const IndexExpr&)>& required) {
    const NdFamily& fam = d.family();
    for (std::size_t n = 0; n < fam.explicit_members.size(); ++n) {
      Formula want = required(IndexExpr(n));
      if (!(fam.explicit_members[n].conclusion() == want))
        violation(path, "family member " + std::to_string(n) + " ends in " +
                            fam.explicit_members[n].conclusion().debug_str() + " instead of " +
                            want.debug_str());
    }
    Formula want = required(IndexExpr::var(fam.var));
    if (!(fam.tail->conclusion() == want))
      violation(path, "family tail ends in " + fam.tail->conclusion().debug_str() +
                          " instead of " + want.debug_str());
  }
};

}  // namespace

CheckReport check_nd(const NdDerivation& d) {
  NdChecker checker;
  if (!d.valid()) {
    checker.report.violations.emplace_back("root", "empty derivation");
    return checker.report;
  }
  NdPath path;
  checker.check(d, path);
  checker.report.uses_omega = d.contains_omega();
  return checker.report;
}

namespace {

void collect_open(const NdDerivation& d,
                  std::vector<std::pair<std::int64_t, Formula>>& active,
                  std::vector<Formula>& out) {
  if (d.rule() == NdRule::Hyp) {
    for (auto it = active.rbegin(); it != active.rend(); ++it)
      if (it->first == d.params().label && it->second == d.conclusion()) return;
    out.push_back(d.conclusion());
    return;
  }
  for (std::size_t n = 0; n < d.premises().size(); ++n) {
    auto scoped = scoped_discharges(d, n);
    for (const auto& pair : scoped) active.push_back(pair);
    collect_open(d.premises()[n], active, out);
    active.resize(active.size() - scoped.size());
  }
  if (d.has_family()) {
    const NdFamily& fam = d.family();
    for (std::size_t n = 0; n < fam.explicit_members.size(); ++n) {
      auto scoped = member_discharges(d, IndexExpr(n));
      for (const auto& pair : scoped) active.push_back(pair);
      collect_open(fam.explicit_members[n], active, out);
      active.resize(active.size() - scoped.size());
    }
    auto scoped = member_discharges(d, IndexExpr::var(fam.var));
    for (const auto& pair : scoped) active.push_back(pair);
    collect_open(*fam.tail, active, out);
    active.resize(active.size() - scoped.size());
  }
}

void collect_maxima(const NdDerivation& d, NdPath& path, std::vector<NdPath>& out) {
  if (nd_is_elimination(d.rule()) && !d.premises().empty()) {
    const NdDerivation& major = d.premises()[0];
    if (nd_is_introduction(major.rule()) || major.rule() == NdRule::OrE ||
        major.rule() == NdRule::Exp) {
      path.push_back({NdStep::Kind::Premise, 0});
      out.push_back(path);
      path.pop_back();
    }
  }
  for (std::size_t n = 0; n < d.premises().size(); ++n) {
    path.push_back({NdStep::Kind::Premise, n});
    collect_maxima(d.premises()[n], path, out);
    path.pop_back();
  }
  if (d.has_family()) {
    const NdFamily& fam = d.family();
    for (std::size_t n = 0; n < fam.explicit_members.size(); ++n) {
      path.push_back({NdStep::Kind::FamilyExplicit, n});
      collect_maxima(fam.explicit_members[n], path, out);
      path.pop_back();
    }
    path.push_back({NdStep::Kind::FamilyTail, 0});
    collect_maxima(*fam.tail, path, out);
    path.pop_back();
  }
}

}  // namespace

FormulaSet open_assumptions(const NdDerivation& d) {
  std::vector<std::pair<std::int64_t, Formula>> active;
  std::vector<Formula> out;
  collect_open(d, active, out);
  return FormulaSet(std::move(out));
}

Formula end_formula(const NdDerivation& d) { return d.conclusion(); }

std::vector<NdPath> maximum_formulas(const NdDerivation& d) {
  std::vector<NdPath> out;
  NdPath path;
  collect_maxima(d, path, out);
  return out;
}

bool is_normal(const NdDerivation& d) { return maximum_formulas(d).empty(); }

}  // namespace proofkit
