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

#include "proofkit/seq_ops.hpp"

#include "proofkit/errors.hpp"
#include "proofkit/seq_build.hpp"
#include "proofkit/seq_check.hpp"

namespace proofkit {

namespace {

struct IdentityBuilder {
  Calculus calculus;
  VarSupply supply;
  std::set<std::string> avoid;

  SeqDerivation build(const Formula& alpha, const IndexExpr& i, const FormulaSet& context) {
    // A context member equal to a consumed side formula is swallowed by the
    // canonical rule constructors; restore the exact conclusion afterwards.
    SeqDerivation out = build_core(alpha, i, context);
    Formula shown = Formula::next(i, alpha);
    Sequent want{context.with(shown), FormulaSet{shown}};
    if (out.conclusion() == want) return out;
    if (calculus == Calculus::Slt) return weaken_antecedent_to(out, want.antecedent);
    return lt::weaken_to(std::move(out), want);
  }

  SeqDerivation build_core(const Formula& alpha, const IndexExpr& i, const FormulaSet& context) {
    // The prefix of an X-rooted body folds into the rule exponent, so the
    // case analysis below only sees prefix-free cores.
    PrefixedFormula pf = strip_x(Formula::next(i, alpha));
    const IndexExpr& e = pf.prefix;
    const Formula& core = pf.core;
    switch (core.tag()) {
      case Conn::Var:
        if (calculus == Calculus::Slt) return slt::init(e, core.name(), context);
        return lt::weaken_to(lt::init(e, core.name()),
                             {context.with(Formula::next(e, core)), FormulaSet{Formula::next(e, core)}});
      case Conn::Imp: {
        Formula a = core.lhs(), b = core.rhs();
        Formula xa = Formula::next(e, a), xb = Formula::next(e, b);
        SeqDerivation p1 = build(a, e, context);
        SeqDerivation p2 = build(b, e, context.with(xa));
        if (calculus == Calculus::Slt)
          return slt::imp_right(slt::imp_left(std::move(p1), std::move(p2), e, a, b), e, a, b);
        p1 = lt::we_right(std::move(p1), xb);
        return lt::imp_right(lt::imp_left(std::move(p1), std::move(p2), e, a, b), e, a, b);
      }
      case Conn::Neg: {
        Formula a = core.body();
        SeqDerivation p = build(a, e, context);
        if (calculus == Calculus::Slt)
          return slt::neg_right(slt::neg_left(std::move(p), e, a), e, a);
        return lt::neg_right(lt::neg_left(std::move(p), e, a), e, a);
      }
      case Conn::And: {
        Formula a = core.lhs(), b = core.rhs();
        Formula xa = Formula::next(e, a), xb = Formula::next(e, b);
        SeqDerivation p1 = build(a, e, context.with(xb));
        SeqDerivation p2 = build(b, e, context.with(xa));
        if (calculus == Calculus::Slt)
          return slt::and_right(slt::and_left(std::move(p1), e, a, b),
                                slt::and_left(std::move(p2), e, a, b), e, a, b);
        return lt::and_right(lt::and_left(std::move(p1), e, a, b),
                             lt::and_left(std::move(p2), e, a, b), e, a, b);
      }
      case Conn::Or: {
        Formula a = core.lhs(), b = core.rhs();
        Formula xa = Formula::next(e, a), xb = Formula::next(e, b);
        SeqDerivation p1 = build(a, e, context);
        SeqDerivation p2 = build(b, e, context);
        if (calculus == Calculus::Slt)
          return slt::or_left(slt::or_right1(std::move(p1), e, a, b),
                              slt::or_right2(std::move(p2), e, a, b), e, a, b);
        p1 = lt::or_right(lt::we_right(std::move(p1), xb), e, a, b);
        p2 = lt::or_right(lt::we_right(std::move(p2), xa), e, a, b);
        return lt::or_left(std::move(p1), std::move(p2), e, a, b);
      }
      case Conn::G: {
        Formula a = core.body();
        std::string j = supply.fresh(avoid);
        avoid.insert(j);
        SeqDerivation inner = build(a, e + IndexExpr::var(j), context);
        SeqDerivation member =
            calculus == Calculus::Slt ? slt::g_left(std::move(inner), e, IndexExpr::var(j), a)
                                      : lt::g_left(std::move(inner), e, IndexExpr::var(j), a);
        SeqFamily fam = tail_family(j, std::move(member));
        return calculus == Calculus::Slt ? slt::g_right(std::move(fam), e, a)
                                         : lt::g_right(std::move(fam), e, a);
      }
      case Conn::F: {
        Formula a = core.body();
        std::string j = supply.fresh(avoid);
        avoid.insert(j);
        SeqDerivation inner = build(a, e + IndexExpr::var(j), context);
        SeqDerivation member =
            calculus == Calculus::Slt ? slt::f_right(std::move(inner), e, IndexExpr::var(j), a)
                                      : lt::f_right(std::move(inner), e, IndexExpr::var(j), a);
        SeqFamily fam = tail_family(j, std::move(member));
        return calculus == Calculus::Slt ? slt::f_left(std::move(fam), e, a)
                                         : lt::f_left(std::move(fam), e, a);
      }
      case Conn::Next:
        break;  // unreachable: strip_x returned an X-rooted core
    }
    throw ProofError("identity derivation: unreachable formula shape");
  }
};

}  // namespace

SeqDerivation derive_identity(const Formula& alpha, const IndexExpr& i, const FormulaSet& context,
                              Calculus calculus) {
  IdentityBuilder builder;
  builder.calculus = calculus;
  for (const auto& v : i.variables()) builder.avoid.insert(v);
  std::set<std::string> formula_vars;
  alpha.collect_index_vars(formula_vars);
  for (const auto& f : context) f.collect_index_vars(formula_vars);
  builder.avoid.insert(formula_vars.begin(), formula_vars.end());
  return builder.build(alpha, i, context);
}

namespace {

SeqDerivation extend_antecedents(const SeqDerivation& d, const Formula& added) {
  std::vector<SeqDerivation> premises;
  premises.reserve(d.premises().size());
  for (const auto& p : d.premises()) premises.push_back(extend_antecedents(p, added));
  Sequent conclusion{d.conclusion().antecedent.with(added), d.conclusion().succedent};
  if (!d.has_family())
    return SeqDerivation::make(std::move(conclusion), d.rule(), d.params(), std::move(premises));
  const SeqFamily& fam = d.family();
  if (added.mentions_index(fam.var))
    throw ProofError("weakening formula would be captured by family variable '" + fam.var + "'");
  SeqFamily out;
  out.var = fam.var;
  for (const auto& p : fam.explicit_members) out.explicit_members.push_back(extend_antecedents(p, added));
  out.tail = std::make_shared<const SeqDerivation>(extend_antecedents(*fam.tail, added));
  return SeqDerivation::make_omega(std::move(conclusion), d.rule(), d.params(), std::move(out));
}

}  // namespace

SeqDerivation weaken_left_any(const SeqDerivation& d, const Formula& added) {
  std::set<std::string> added_vars;
  added.collect_index_vars(added_vars);
  SeqDerivation safe = d;
  if (!added_vars.empty()) {
    for (const auto& v : d.bound_family_vars()) {
      if (added_vars.count(v)) {
        safe = freshen_family_vars(d, added_vars);
        break;
      }
    }
  }
  return extend_antecedents(safe, added);
}

SeqDerivation weaken_left(const SeqDerivation& d, const Formula& added) {
  if (d.contains_cut()) throw ProofError("weaken_left rejects derivations containing cut");
  return weaken_left_any(d, added);
}

SeqDerivation weaken_antecedent_to(const SeqDerivation& d, const FormulaSet& target) {
  if (!d.conclusion().antecedent.subset_of(target))
    throw ProofError("weaken_antecedent_to: conclusion antecedent exceeds the target");
  SeqDerivation out = d;
  for (const Formula& f : target.set_minus(d.conclusion().antecedent))
    out = weaken_left_any(out, f);
  return out;
}

SeqDerivation neg_left_inverse(const SeqDerivation& d, const IndexExpr& i, const Formula& alpha) {
  if (d.contains_cut()) throw ProofError("neg_left_inverse requires a cut-free derivation");
  Formula negated = Formula::next(i, Formula::neg(alpha));
  Formula shown = Formula::next(i, alpha);
  const Sequent& c = d.conclusion();
  if (!c.succedent.empty())
    throw ProofError("neg_left_inverse input must have an empty succedent");
  if (!c.antecedent.contains(negated))
    throw ProofError("neg_left_inverse input must assume " + negated.debug_str());
  FormulaSet gamma = c.antecedent.without(negated);
  SeqDerivation left = slt::we_right(d, shown);
  SeqDerivation right = derive_identity(alpha, i, gamma, Calculus::Slt);
  return slt::ex_middle(std::move(left), std::move(right), i, alpha);
}

SeqDerivation instantiate_schema(const SeqDerivation& d, const std::string& var, std::uint64_t n) {
  if (!d.free_index_vars().count(var)) {
    if (d.bound_family_vars().count(var))
      throw ProofError("schema variable '" + var + "' is bound by a premise family, not free");
    return d;  // no occurrence
  }
  return d.substitute_index(var, IndexExpr(n));
}

}  // namespace proofkit
