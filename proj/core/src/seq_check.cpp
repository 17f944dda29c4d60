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

#include "proofkit/seq_check.hpp"

#include <algorithm>
#include <functional>
#include <set>

#include "proofkit/errors.hpp"

namespace proofkit {

std::string CheckReport::str() const {
  std::string out;
  out += "ok: ";
  out += ok() ? "true" : "false";
  out += "\ncuts: " + std::to_string(cut_count);
  out += "\nomega: ";
  out += uses_omega ? "true" : "false";
  for (const auto& [path, msg] : violations)
    out += "\nviolation: [" + (path.empty() ? "root" : path) + "] " + msg;
  return out;
}

namespace {

enum class Calc { Lt, Slt };

// Set-based rule matching. A rule written with context Gamma next to a
// principal formula admits instances where Gamma itself still contains the
// principal, so "conclusion minus principal" is not the only decomposition.
// There is a context Gamma with C == {phi} u Gamma and P_i == NF_i u Gamma
// for all premises exactly when the minimal candidate works; phi never
// coincides with a premise formula NF_i (it is structurally larger).
bool shared_context(const FormulaSet& conclusion, const Formula& principal,
                    const std::vector<std::pair<const FormulaSet*, FormulaSet>>& premises) {
  if (!conclusion.contains(principal)) return false;
  FormulaSet gamma = conclusion.without(principal);
  for (const auto& [premise, fresh] : premises) gamma = gamma.set_union(premise->set_minus(fresh));
  if (!(gamma.with(principal) == conclusion)) return false;
  for (const auto& [premise, fresh] : premises)
    if (!(fresh.set_union(gamma) == *premise)) return false;
  return true;
}

struct Checker {
  Calc calc;
  CheckReport report;
  std::set<std::string> bound_vars;

  void violation(const std::string& path, const std::string& msg) {
    report.violations.emplace_back(path, msg);
  }

  bool in_calculus(SeqRule rule) const {
    switch (rule) {
      case SeqRule::WeLeft:
      case SeqRule::OrRight:
        return calc == Calc::Lt;
      case SeqRule::OrRight1:
      case SeqRule::OrRight2:
      case SeqRule::ExMiddle:
        return calc == Calc::Slt;
      default:
        return true;
    }
  }

  static bool needs_family(SeqRule rule) {
    return rule == SeqRule::GRight || rule == SeqRule::FLeft;
  }

  static std::size_t arity(SeqRule rule) {
    switch (rule) {
      case SeqRule::Init: return 0;
      case SeqRule::Cut:
      case SeqRule::ImpLeft:
      case SeqRule::AndRight:
      case SeqRule::OrLeft:
      case SeqRule::ExMiddle: return 2;
      default: return 1;
    }
  }

  const Formula* param_a(const SeqDerivation& d, const std::string& path) {
    if (!d.params().a) {
      violation(path, std::string(seq_rule_name(d.rule())) + " is missing its formula parameter");
      return nullptr;
    }
    return &*d.params().a;
  }

  const Formula* param_b(const SeqDerivation& d, const std::string& path) {
    if (!d.params().b) {
      violation(path, std::string(seq_rule_name(d.rule())) + " is missing its second formula parameter");
      return nullptr;
    }
    return &*d.params().b;
  }

  void check(const SeqDerivation& d, const std::string& path) {
    const Sequent& c = d.conclusion();
    if (calc == Calc::Slt && c.succedent.size() > 1)
      violation(path, "single-succedent sequent has " + std::to_string(c.succedent.size()) +
                          " succedent formulas");

    if (!in_calculus(d.rule())) {
      violation(path, std::string(seq_rule_name(d.rule())) + " is not a rule of this calculus");
    } else if (needs_family(d.rule())) {
      if (!d.has_family() || !d.premises().empty())
        violation(path, std::string(seq_rule_name(d.rule())) + " requires a premise family");
      else
        check_rule(d, path);
    } else if (d.has_family()) {
      violation(path, std::string(seq_rule_name(d.rule())) + " does not take a premise family");
    } else if (d.premises().size() != arity(d.rule())) {
      violation(path, std::string(seq_rule_name(d.rule())) + " expects " +
                          std::to_string(arity(d.rule())) + " premises, found " +
                          std::to_string(d.premises().size()));
    } else {
      check_rule(d, path);
    }

    for (std::size_t n = 0; n < d.premises().size(); ++n)
      check(d.premises()[n], path.empty() ? std::to_string(n) : path + "." + std::to_string(n));
    if (d.has_family()) check_family_members(d.family(), path);
  }

  void check_family_members(const SeqFamily& fam, const std::string& path) {
    for (std::size_t n = 0; n < fam.explicit_members.size(); ++n)
      check(fam.explicit_members[n],
            (path.empty() ? "" : path + ".") + "omega[" + std::to_string(n) + "]");
    std::string tail_path = (path.empty() ? "" : path + ".") + "omega.tail";
    if (fam.var.empty()) {
      violation(tail_path, "premise family has an empty schema variable");
      return;
    }
    if (bound_vars.count(fam.var)) {
      violation(tail_path, "schema variable '" + fam.var + "' is already bound by an enclosing family");
      check(*fam.tail, tail_path);
      return;
    }
    bound_vars.insert(fam.var);
    check(*fam.tail, tail_path);
    bound_vars.erase(fam.var);
  }

  /// Matches explicit members and the symbolic tail against the rule-required
  /// member sequent. `required` maps a family index to the needed conclusion.
  void match_family(const SeqFamily& fam, const std::string& path,
                    const std::function<Sequent(const IndexExpr&)>& required) {
    for (std::size_t n = 0; n < fam.explicit_members.size(); ++n) {
      Sequent want = required(IndexExpr(static_cast<std::uint64_t>(n)));
      if (!(fam.explicit_members[n].conclusion() == want))
        violation(path, "family member " + std::to_string(n) + " concludes [" +
                            fam.explicit_members[n].conclusion().str() + "] instead of [" +
                            want.str() + "]");
    }
    Sequent want = required(IndexExpr::var(fam.var));
    if (!(fam.tail->conclusion() == want))
      violation(path, "family tail concludes [" + fam.tail->conclusion().str() +
                          "] instead of [" + want.str() + "]");
  }

  void check_rule(const SeqDerivation& d, const std::string& path) {
    const Sequent& c = d.conclusion();
    const SeqParams& ps = d.params();
    auto fail = [&](const std::string& msg) { violation(path, msg); };

    switch (d.rule()) {
      case SeqRule::Init: {
        if (c.succedent.size() != 1) return fail("initial sequent needs exactly one succedent formula");
        const Formula& f = c.succedent.front();
        if (f.core().tag() != Conn::Var)
          return fail("initial sequent formula must be a prefixed propositional variable");
        if (!c.antecedent.contains(f))
          return fail("initial sequent antecedent does not contain the succedent formula");
        if (calc == Calc::Lt && c.antecedent.size() != 1)
          return fail("initial sequents admit no side context here");
        return;
      }

      case SeqRule::Cut: {
        const Formula* a = param_a(d, path);
        if (!a) return;
        const Sequent& l = d.premises()[0].conclusion();
        const Sequent& r = d.premises()[1].conclusion();
        if (calc == Calc::Slt && !(l.succedent == FormulaSet{*a}))
          return fail("left cut premise must conclude exactly the cut formula");
        if (!l.succedent.contains(*a)) return fail("cut formula missing from left premise succedent");
        if (!r.antecedent.contains(*a)) return fail("cut formula missing from right premise antecedent");
        FormulaSet ant1 = l.antecedent.set_union(r.antecedent.without(*a));
        FormulaSet ant2 = l.antecedent.set_union(r.antecedent);
        if (!(c.antecedent == ant1) && !(c.antecedent == ant2))
          return fail("cut conclusion antecedent does not combine the premise contexts");
        FormulaSet suc1 = l.succedent.without(*a).set_union(r.succedent);
        FormulaSet suc2 = l.succedent.set_union(r.succedent);
        if (!(c.succedent == suc1) && !(c.succedent == suc2))
          return fail("cut conclusion succedent does not combine the premise contexts");
        return;
      }

      case SeqRule::WeLeft: {
        const Formula* a = param_a(d, path);
        if (!a) return;
        const Sequent& p = d.premises()[0].conclusion();
        if (!(c.antecedent == p.antecedent.with(*a)))
          return fail("left weakening must add exactly the stated formula");
        if (!(c.succedent == p.succedent)) return fail("left weakening must keep the succedent");
        return;
      }

      case SeqRule::WeRight: {
        const Formula* a = param_a(d, path);
        if (!a) return;
        const Sequent& p = d.premises()[0].conclusion();
        if (!(c.antecedent == p.antecedent)) return fail("right weakening must keep the antecedent");
        if (calc == Calc::Slt) {
          if (!p.succedent.empty()) return fail("right weakening premise must have an empty succedent");
          if (!(c.succedent == FormulaSet{*a}))
            return fail("right weakening must conclude exactly the stated formula");
        } else if (!(c.succedent == p.succedent.with(*a))) {
          return fail("right weakening must add exactly the stated formula");
        }
        return;
      }

      case SeqRule::ImpLeft: {
        const Formula* a = param_a(d, path);
        const Formula* b = param_b(d, path);
        if (!a || !b) return;
        Formula phi = Formula::next(ps.i, Formula::imp(*a, *b));
        Formula xa = Formula::next(ps.i, *a);
        Formula xb = Formula::next(ps.i, *b);
        const Sequent& p1 = d.premises()[0].conclusion();
        const Sequent& p2 = d.premises()[1].conclusion();
        if (!(c.antecedent == p1.antecedent.with(phi)))
          return fail("conclusion antecedent must be the first premise context plus the principal");
        if (!(p2.antecedent == p1.antecedent.with(xb)))
          return fail("second premise antecedent must add the consequent to the shared context");
        if (calc == Calc::Slt) {
          if (!(p1.succedent == FormulaSet{xa}))
            return fail("first premise must conclude exactly the antecedent formula");
          if (!(p2.succedent == c.succedent)) return fail("second premise succedent must match");
        } else {
          if (!(p1.succedent == c.succedent.with(xa)))
            return fail("first premise succedent must extend the conclusion by the antecedent formula");
          if (!(p2.succedent == c.succedent)) return fail("second premise succedent must match");
        }
        return;
      }

      case SeqRule::ImpRight: {
        const Formula* a = param_a(d, path);
        const Formula* b = param_b(d, path);
        if (!a || !b) return;
        Formula phi = Formula::next(ps.i, Formula::imp(*a, *b));
        Formula xa = Formula::next(ps.i, *a);
        Formula xb = Formula::next(ps.i, *b);
        const Sequent& p = d.premises()[0].conclusion();
        if (!(p.antecedent == c.antecedent.with(xa)))
          return fail("premise antecedent must extend the conclusion by the antecedent formula");
        if (calc == Calc::Slt) {
          if (!(c.succedent == FormulaSet{phi})) return fail("conclusion must be exactly the implication");
          if (!(p.succedent == FormulaSet{xb})) return fail("premise must conclude exactly the consequent");
        } else if (!shared_context(c.succedent, phi, {{&p.succedent, FormulaSet{xb}}})) {
          return fail("succedents do not match the implication-right schema");
        }
        return;
      }

      case SeqRule::NegLeft: {
        const Formula* a = param_a(d, path);
        if (!a) return;
        Formula phi = Formula::next(ps.i, Formula::neg(*a));
        Formula xa = Formula::next(ps.i, *a);
        const Sequent& p = d.premises()[0].conclusion();
        if (!(c.antecedent == p.antecedent.with(phi)))
          return fail("conclusion antecedent must be the premise context plus the negation");
        if (calc == Calc::Slt) {
          if (!c.succedent.empty()) return fail("negation-left conclusion must have an empty succedent");
          if (!(p.succedent == FormulaSet{xa})) return fail("premise must conclude exactly the body");
        } else if (!(p.succedent == c.succedent.with(xa))) {
          return fail("premise succedent must extend the conclusion by the body");
        }
        return;
      }

      case SeqRule::NegRight: {
        const Formula* a = param_a(d, path);
        if (!a) return;
        Formula phi = Formula::next(ps.i, Formula::neg(*a));
        Formula xa = Formula::next(ps.i, *a);
        const Sequent& p = d.premises()[0].conclusion();
        if (!(p.antecedent == c.antecedent.with(xa)))
          return fail("premise antecedent must extend the conclusion by the body");
        if (calc == Calc::Slt) {
          if (!(c.succedent == FormulaSet{phi})) return fail("conclusion must be exactly the negation");
          if (!p.succedent.empty()) return fail("premise succedent must be empty");
        } else if (!shared_context(c.succedent, phi, {{&p.succedent, FormulaSet{}}})) {
          return fail("succedents do not match the negation-right schema");
        }
        return;
      }

      case SeqRule::AndLeft: {
        const Formula* a = param_a(d, path);
        const Formula* b = param_b(d, path);
        if (!a || !b) return;
        Formula phi = Formula::next(ps.i, Formula::conj(*a, *b));
        FormulaSet comps{Formula::next(ps.i, *a), Formula::next(ps.i, *b)};
        const Sequent& p = d.premises()[0].conclusion();
        if (!shared_context(c.antecedent, phi, {{&p.antecedent, comps}}))
          return fail("antecedents do not match the conjunction-left schema");
        if (!(p.succedent == c.succedent)) return fail("premise succedent must match");
        return;
      }

      case SeqRule::AndRight: {
        const Formula* a = param_a(d, path);
        const Formula* b = param_b(d, path);
        if (!a || !b) return;
        Formula phi = Formula::next(ps.i, Formula::conj(*a, *b));
        Formula xa = Formula::next(ps.i, *a);
        Formula xb = Formula::next(ps.i, *b);
        const Sequent& p1 = d.premises()[0].conclusion();
        const Sequent& p2 = d.premises()[1].conclusion();
        if (!(p1.antecedent == c.antecedent) || !(p2.antecedent == c.antecedent))
          return fail("premise antecedents must match the conclusion");
        if (calc == Calc::Slt) {
          if (!(c.succedent == FormulaSet{phi})) return fail("conclusion must be exactly the conjunction");
          if (!(p1.succedent == FormulaSet{xa}) || !(p2.succedent == FormulaSet{xb}))
            return fail("premises must conclude exactly the conjuncts");
        } else if (!shared_context(c.succedent, phi,
                                   {{&p1.succedent, FormulaSet{xa}}, {&p2.succedent, FormulaSet{xb}}})) {
          return fail("succedents do not match the conjunction-right schema");
        }
        return;
      }

      case SeqRule::OrLeft: {
        const Formula* a = param_a(d, path);
        const Formula* b = param_b(d, path);
        if (!a || !b) return;
        Formula phi = Formula::next(ps.i, Formula::disj(*a, *b));
        Formula xa = Formula::next(ps.i, *a);
        Formula xb = Formula::next(ps.i, *b);
        const Sequent& p1 = d.premises()[0].conclusion();
        const Sequent& p2 = d.premises()[1].conclusion();
        if (!shared_context(c.antecedent, phi,
                            {{&p1.antecedent, FormulaSet{xa}}, {&p2.antecedent, FormulaSet{xb}}}))
          return fail("antecedents do not match the disjunction-left schema");
        if (!(p1.succedent == c.succedent) || !(p2.succedent == c.succedent))
          return fail("premise succedents must match");
        return;
      }

      case SeqRule::OrRight: {
        const Formula* a = param_a(d, path);
        const Formula* b = param_b(d, path);
        if (!a || !b) return;
        Formula phi = Formula::next(ps.i, Formula::disj(*a, *b));
        FormulaSet comps{Formula::next(ps.i, *a), Formula::next(ps.i, *b)};
        const Sequent& p = d.premises()[0].conclusion();
        if (!(p.antecedent == c.antecedent)) return fail("premise antecedent must match");
        if (!shared_context(c.succedent, phi, {{&p.succedent, comps}}))
          return fail("succedents do not match the disjunction-right schema");
        return;
      }

      case SeqRule::OrRight1:
      case SeqRule::OrRight2: {
        const Formula* a = param_a(d, path);
        const Formula* b = param_b(d, path);
        if (!a || !b) return;
        Formula phi = Formula::next(ps.i, Formula::disj(*a, *b));
        Formula shown = Formula::next(ps.i, d.rule() == SeqRule::OrRight1 ? *a : *b);
        const Sequent& p = d.premises()[0].conclusion();
        if (!(p.antecedent == c.antecedent)) return fail("premise antecedent must match");
        if (!(c.succedent == FormulaSet{phi})) return fail("conclusion must be exactly the disjunction");
        if (!(p.succedent == FormulaSet{shown}))
          return fail("premise must conclude exactly the chosen disjunct");
        return;
      }

      case SeqRule::ExMiddle: {
        const Formula* a = param_a(d, path);
        if (!a) return;
        Formula pos = Formula::next(ps.i, *a);
        Formula negf = Formula::next(ps.i, Formula::neg(*a));
        const Sequent& p1 = d.premises()[0].conclusion();
        const Sequent& p2 = d.premises()[1].conclusion();
        if (!(p1.antecedent == c.antecedent.with(negf)))
          return fail("first premise must add exactly the negated case formula");
        if (!(p2.antecedent == c.antecedent.with(pos)))
          return fail("second premise must add exactly the case formula");
        if (!(p1.succedent == c.succedent) || !(p2.succedent == c.succedent))
          return fail("premise succedents must match");
        return;
      }

      case SeqRule::GLeft: {
        const Formula* a = param_a(d, path);
        if (!a) return;
        Formula phi = Formula::next(ps.i, Formula::globally(*a));
        FormulaSet comp{Formula::next(ps.i + ps.k, *a)};
        const Sequent& p = d.premises()[0].conclusion();
        if (!shared_context(c.antecedent, phi, {{&p.antecedent, comp}}))
          return fail("antecedents do not match the globally-left schema");
        if (!(p.succedent == c.succedent)) return fail("premise succedent must match");
        return;
      }

      case SeqRule::GRight: {
        const Formula* a = param_a(d, path);
        if (!a) return;
        Formula phi = Formula::next(ps.i, Formula::globally(*a));
        const SeqFamily& fam = d.family();
        if (calc == Calc::Slt) {
          if (!(c.succedent == FormulaSet{phi}))
            return fail("conclusion must be exactly the globally formula");
          match_family(fam, path, [&](const IndexExpr& e) {
            return Sequent{c.antecedent, FormulaSet{Formula::next(ps.i + e, *a)}};
          });
          return;
        }
        if (!c.succedent.contains(phi)) return fail("principal formula missing from the succedent");
        bool matched = false;
        for (const FormulaSet& delta : {c.succedent.without(phi), c.succedent}) {
          bool all = true;
          auto want = [&](const IndexExpr& e) {
            return Sequent{c.antecedent, delta.with(Formula::next(ps.i + e, *a))};
          };
          for (std::size_t n = 0; n < fam.explicit_members.size() && all; ++n)
            all = fam.explicit_members[n].conclusion() == want(IndexExpr(n));
          all = all && fam.tail->conclusion() == want(IndexExpr::var(fam.var));
          if (all) { matched = true; break; }
        }
        if (!matched) {
          // Report against the canonical reading for a usable message.
          match_family(fam, path, [&](const IndexExpr& e) {
            return Sequent{c.antecedent, c.succedent.without(phi).with(Formula::next(ps.i + e, *a))};
          });
        }
        return;
      }

      case SeqRule::FLeft: {
        const Formula* a = param_a(d, path);
        if (!a) return;
        Formula phi = Formula::next(ps.i, Formula::eventually(*a));
        const SeqFamily& fam = d.family();
        if (!c.antecedent.contains(phi)) return fail("principal formula missing from the antecedent");
        bool matched = false;
        for (const FormulaSet& gamma : {c.antecedent.without(phi), c.antecedent}) {
          bool all = true;
          auto want = [&](const IndexExpr& e) {
            return Sequent{gamma.with(Formula::next(ps.i + e, *a)), c.succedent};
          };
          for (std::size_t n = 0; n < fam.explicit_members.size() && all; ++n)
            all = fam.explicit_members[n].conclusion() == want(IndexExpr(n));
          all = all && fam.tail->conclusion() == want(IndexExpr::var(fam.var));
          if (all) { matched = true; break; }
        }
        if (!matched) {
          match_family(fam, path, [&](const IndexExpr& e) {
            return Sequent{c.antecedent.without(phi).with(Formula::next(ps.i + e, *a)), c.succedent};
          });
        }
        return;
      }

      case SeqRule::FRight: {
        const Formula* a = param_a(d, path);
        if (!a) return;
        Formula phi = Formula::next(ps.i, Formula::eventually(*a));
        Formula shown = Formula::next(ps.i + ps.k, *a);
        const Sequent& p = d.premises()[0].conclusion();
        if (!(p.antecedent == c.antecedent)) return fail("premise antecedent must match");
        if (calc == Calc::Slt) {
          if (!(c.succedent == FormulaSet{phi}))
            return fail("conclusion must be exactly the eventually formula");
          if (!(p.succedent == FormulaSet{shown}))
            return fail("premise must conclude exactly the shifted body");
        } else if (!shared_context(c.succedent, phi, {{&p.succedent, FormulaSet{shown}}})) {
          return fail("succedents do not match the eventually-right schema");
        }
        return;
      }
    }
  }
};

CheckReport run_checker(const SeqDerivation& d, Calc calc) {
  Checker checker{calc, {}, {}};
  if (!d.valid()) {
    checker.violation("", "empty derivation");
    return checker.report;
  }
  checker.check(d, "");
  checker.report.cut_count = d.cut_count();
  checker.report.uses_omega = d.contains_omega();
  return checker.report;
}

}  // namespace

CheckReport check_lt(const SeqDerivation& d) { return run_checker(d, Calc::Lt); }
CheckReport check_slt(const SeqDerivation& d) { return run_checker(d, Calc::Slt); }

bool is_cut_free(const SeqDerivation& d) { return !d.contains_cut(); }

namespace {

std::size_t height_rec(const SeqDerivation& d) {
  if (d.has_family())
    throw ProofError("height is defined only for fully concrete derivations");
  std::size_t best = 0;
  for (const auto& p : d.premises()) best = std::max(best, 1 + height_rec(p));
  return best;
}

}  // namespace

std::size_t height(const SeqDerivation& d) {
  if (!d.free_index_vars().empty())
    throw ProofError("height is defined only for fully concrete derivations");
  return height_rec(d);
}

std::size_t restricted_height(const SeqDerivation& d, std::uint64_t n) {
  std::size_t best = 0;
  for (const auto& p : d.premises()) best = std::max(best, 1 + restricted_height(p, n));
  if (d.has_family())
    best = std::max(best, 1 + restricted_height(family_member_at(d.family(), IndexExpr(n)), n));
  return best;
}

}  // namespace proofkit
