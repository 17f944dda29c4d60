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

#include "proofkit/transform.hpp"

#include <optional>

#include "proofkit/errors.hpp"
#include "proofkit/nd_build.hpp"
#include "proofkit/seq_build.hpp"
#include "proofkit/seq_check.hpp"

namespace proofkit {

namespace {

void require_checked(const CheckReport& report, const char* what) {
  if (report.ok()) return;
  throw ProofError(std::string(what) + ": input fails its checker: [" +
                   report.violations.front().first + "] " + report.violations.front().second);
}

}  // namespace

// ---------------------------------------------------------------------------
// Natural deduction into the single-succedent calculus.

namespace {

struct NdToSlt {
  // Invariant: translate(d) proves A => end(d) with A a subset of oa(d).
  SeqDerivation translate(const NdDerivation& d) {
    const NdParams& ps = d.params();
    switch (d.rule()) {
      case NdRule::Hyp: {
        PrefixedFormula pf = strip_x(d.conclusion());
        return derive_identity(pf.core, pf.prefix, {}, Calculus::Slt);
      }
      case NdRule::ImpI: {
        Formula xa = Formula::next(ps.i, *ps.a);
        SeqDerivation body = translate(d.premises()[0]);
        body = weaken_antecedent_to(body, body.conclusion().antecedent.with(xa));
        return slt::imp_right(std::move(body), ps.i, *ps.a, *ps.b);
      }
      case NdRule::ImpE: {
        SeqDerivation major = translate(d.premises()[0]);
        SeqDerivation minor = translate(d.premises()[1]);
        SeqDerivation idb =
            derive_identity(*ps.b, ps.i, minor.conclusion().antecedent, Calculus::Slt);
        SeqDerivation left = slt::imp_left(std::move(minor), std::move(idb), ps.i, *ps.a, *ps.b);
        Formula phi = Formula::next(ps.i, Formula::imp(*ps.a, *ps.b));
        return slt::cut(std::move(major), std::move(left), phi);
      }
      case NdRule::Exp: {
        SeqDerivation major = translate(d.premises()[0]);
        SeqDerivation minor = translate(d.premises()[1]);
        Formula xa = Formula::next(ps.i, *ps.a);
        Formula negated = Formula::next(ps.i, Formula::neg(*ps.a));
        SeqDerivation clash =
            slt::neg_left(derive_identity(*ps.a, ps.i, {}, Calculus::Slt), ps.i, *ps.a);
        SeqDerivation c1 = slt::cut(std::move(major), std::move(clash), negated);
        SeqDerivation c2 = slt::cut(std::move(minor), std::move(c1), xa);
        return slt::we_right(std::move(c2), d.conclusion());
      }
      case NdRule::Exm: {
        Formula pos = Formula::next(ps.i, *ps.a);
        Formula negated = Formula::next(ps.i, Formula::neg(*ps.a));
        SeqDerivation left = translate(d.premises()[0]);
        SeqDerivation right = translate(d.premises()[1]);
        FormulaSet gamma = left.conclusion().antecedent.without(negated).set_union(
            right.conclusion().antecedent.without(pos));
        left = weaken_antecedent_to(left, gamma.with(negated));
        right = weaken_antecedent_to(right, gamma.with(pos));
        return slt::ex_middle(std::move(left), std::move(right), ps.i, *ps.a);
      }
      case NdRule::NegI: {
        Formula pos = Formula::next(ps.i, *ps.a);
        SeqDerivation p1 = translate(d.premises()[0]);
        SeqDerivation p2 = translate(d.premises()[1]);
        p1 = weaken_antecedent_to(p1, p1.conclusion().antecedent.with(pos));
        p2 = weaken_antecedent_to(p2, p2.conclusion().antecedent.with(pos));
        SeqDerivation clash = slt::neg_left(std::move(p2), ps.j, *ps.g);
        Formula negside = Formula::next(ps.j, Formula::neg(*ps.g));
        SeqDerivation c = slt::cut(std::move(p1), std::move(clash), negside);
        return slt::neg_right(std::move(c), ps.i, *ps.a);
      }
      case NdRule::AndI: {
        SeqDerivation p1 = translate(d.premises()[0]);
        SeqDerivation p2 = translate(d.premises()[1]);
        FormulaSet gamma =
            p1.conclusion().antecedent.set_union(p2.conclusion().antecedent);
        p1 = weaken_antecedent_to(p1, gamma);
        p2 = weaken_antecedent_to(p2, gamma);
        return slt::and_right(std::move(p1), std::move(p2), ps.i, *ps.a, *ps.b);
      }
      case NdRule::AndE1:
      case NdRule::AndE2: {
        SeqDerivation major = translate(d.premises()[0]);
        bool first = d.rule() == NdRule::AndE1;
        Formula xa = Formula::next(ps.i, *ps.a);
        Formula xb = Formula::next(ps.i, *ps.b);
        SeqDerivation id = first ? derive_identity(*ps.a, ps.i, FormulaSet{xb}, Calculus::Slt)
                                 : derive_identity(*ps.b, ps.i, FormulaSet{xa}, Calculus::Slt);
        SeqDerivation sel = slt::and_left(std::move(id), ps.i, *ps.a, *ps.b);
        Formula phi = Formula::next(ps.i, Formula::conj(*ps.a, *ps.b));
        return slt::cut(std::move(major), std::move(sel), phi);
      }
      case NdRule::OrI1:
        return slt::or_right1(translate(d.premises()[0]), ps.i, *ps.a, *ps.b);
      case NdRule::OrI2:
        return slt::or_right2(translate(d.premises()[0]), ps.i, *ps.a, *ps.b);
      case NdRule::OrE: {
        Formula xa = Formula::next(ps.i, *ps.a);
        Formula xb = Formula::next(ps.i, *ps.b);
        SeqDerivation major = translate(d.premises()[0]);
        SeqDerivation b1 = translate(d.premises()[1]);
        SeqDerivation b2 = translate(d.premises()[2]);
        FormulaSet gamma = b1.conclusion().antecedent.without(xa).set_union(
            b2.conclusion().antecedent.without(xb));
        b1 = weaken_antecedent_to(b1, gamma.with(xa));
        b2 = weaken_antecedent_to(b2, gamma.with(xb));
        SeqDerivation split = slt::or_left(std::move(b1), std::move(b2), ps.i, *ps.a, *ps.b);
        Formula phi = Formula::next(ps.i, Formula::disj(*ps.a, *ps.b));
        return slt::cut(std::move(major), std::move(split), phi);
      }
      case NdRule::GI: {
        SeqFamily fam = translate_family(d.family(), "g-i");
        return slt::g_right(std::move(fam), ps.i, *ps.a);
      }
      case NdRule::GE: {
        SeqDerivation major = translate(d.premises()[0]);
        SeqDerivation id = derive_identity(*ps.a, ps.i + ps.k, {}, Calculus::Slt);
        SeqDerivation sel = slt::g_left(std::move(id), ps.i, ps.k, *ps.a);
        Formula phi = Formula::next(ps.i, Formula::globally(*ps.a));
        return slt::cut(std::move(major), std::move(sel), phi);
      }
      case NdRule::FI:
        return slt::f_right(translate(d.premises()[0]), ps.i, ps.k, *ps.a);
      case NdRule::FE: {
        SeqDerivation major = translate(d.premises()[0]);
        auto shifted = [&](const IndexExpr& e) { return Formula::next(ps.i + e, *ps.a); };
        SeqFamily fam = translate_family_with(
            d.family(), "f-e", [&](const IndexExpr& e, SeqDerivation member) {
              return weaken_antecedent_to(
                  member, member.conclusion().antecedent.with(shifted(e)));
            });
        // Align the residual contexts of the members.
        FormulaSet gamma = fam.tail->conclusion().antecedent.without(
            shifted(IndexExpr::var(fam.var)));
        if (gamma.mentions_index(fam.var))
          throw ProofError(
              "f-e: family tail has open assumptions depending on the schema variable");
        for (std::size_t n = 0; n < fam.explicit_members.size(); ++n)
          gamma = gamma.set_union(
              fam.explicit_members[n].conclusion().antecedent.without(shifted(IndexExpr(n))));
        SeqFamily aligned;
        aligned.var = fam.var;
        for (std::size_t n = 0; n < fam.explicit_members.size(); ++n)
          aligned.explicit_members.push_back(
              weaken_antecedent_to(fam.explicit_members[n], gamma.with(shifted(IndexExpr(n)))));
        aligned.tail = std::make_shared<const SeqDerivation>(weaken_antecedent_to(
            *fam.tail, gamma.with(shifted(IndexExpr::var(fam.var)))));
        SeqDerivation split = slt::f_left(std::move(aligned), ps.i, *ps.a);
        Formula phi = Formula::next(ps.i, Formula::eventually(*ps.a));
        return slt::cut(std::move(major), std::move(split), phi);
      }
    }
    throw ProofError("nlt_to_slt: unreachable rule");
  }

  SeqFamily translate_family(const NdFamily& fam, const char* what) {
    return translate_family_with(fam, what,
                                 [](const IndexExpr&, SeqDerivation member) { return member; });
  }

  template <typename Fix>
  SeqFamily translate_family_with(const NdFamily& fam, const char* what, Fix&& fix) {
    SeqFamily out;
    out.var = fam.var;
    std::vector<SeqDerivation> members;
    for (std::size_t n = 0; n < fam.explicit_members.size(); ++n)
      members.push_back(fix(IndexExpr(n), translate(fam.explicit_members[n])));
    SeqDerivation tail = fix(IndexExpr::var(fam.var), translate(*fam.tail));
    FormulaSet gamma = tail.conclusion().antecedent;
    // For G introduction the exhibited formula lives in the succedent, so the
    // whole tail antecedent is context and must not depend on the variable.
    for (const auto& m : members) gamma = gamma.set_union(m.conclusion().antecedent);
    if (std::string(what) == "g-i") {
      if (gamma.mentions_index(fam.var))
        throw ProofError(
            "g-i: family tail has open assumptions depending on the schema variable");
      for (auto& m : members) m = weaken_antecedent_to(m, gamma);
      tail = weaken_antecedent_to(tail, gamma);
    }
    out.explicit_members = std::move(members);
    out.tail = std::make_shared<const SeqDerivation>(std::move(tail));
    return out;
  }
};

}  // namespace

SeqDerivation nlt_to_slt(const NdDerivation& d, const Contradiction&) {
  require_checked(check_nd(d), "nlt_to_slt");
  NdToSlt state;
  SeqDerivation result = state.translate(d);
  result = weaken_antecedent_to(result, open_assumptions(d));
  // Identity derivations built under translated families may reuse variable
  // names bound further out; one renaming pass restores global freshness.
  return freshen_family_vars(result, {});
}

// ---------------------------------------------------------------------------
// Cut-free single-succedent derivations into normal natural deduction.

namespace {

struct SltToNd {
  Formula bottom;      // the designated contradiction ~v /\ v
  Formula bottom_var;  // v
  std::int64_t next_label = 0;

  std::int64_t fresh() { return next_label++; }

  // Re-points a derivation of the designated contradiction at `target`
  // without creating a maximum formula: an Exp conclusion is re-targeted
  // directly, Exm and OrE push the consumer into their branches, and any
  // other root is safe as the major premise of a projection.
  NdDerivation from_bottom(const NdDerivation& d, const Formula& target) {
    if (d.conclusion() == target) return d;
    switch (d.rule()) {
      case NdRule::Exp:
        return nd::exp(d.premises()[0], d.premises()[1], d.params().i, *d.params().a, target);
      case NdRule::Exm:
        return nd::exm(from_bottom(d.premises()[0], target),
                       from_bottom(d.premises()[1], target), d.params().i, *d.params().a,
                       d.params().label, d.params().label2);
      case NdRule::OrE:
        return nd::or_e(d.premises()[0], from_bottom(d.premises()[1], target),
                        from_bottom(d.premises()[2], target), d.params().i, *d.params().a,
                        *d.params().b, d.params().label, d.params().label2);
      default: {
        NdDerivation neg_part = project(d, true);
        NdDerivation pos_part = project(d, false);
        return nd::exp(std::move(neg_part), std::move(pos_part), IndexExpr(0), bottom_var,
                       target);
      }
    }
  }

  // Derivation of ~v (first = true) or v from a derivation of ~v /\ v,
  // again without creating a maximum formula.
  NdDerivation project(const NdDerivation& d, bool first) {
    switch (d.rule()) {
      case NdRule::Exp: {
        Formula target = first ? Formula::neg(bottom_var) : bottom_var;
        return nd::exp(d.premises()[0], d.premises()[1], d.params().i, *d.params().a, target);
      }
      case NdRule::Exm:
        return nd::exm(project(d.premises()[0], first), project(d.premises()[1], first),
                       d.params().i, *d.params().a, d.params().label, d.params().label2);
      case NdRule::OrE:
        return nd::or_e(d.premises()[0], project(d.premises()[1], first),
                        project(d.premises()[2], first), d.params().i, *d.params().a,
                        *d.params().b, d.params().label, d.params().label2);
      default:
        return first ? nd::and_e1(d, IndexExpr(0), Formula::neg(bottom_var), bottom_var)
                     : nd::and_e2(d, IndexExpr(0), Formula::neg(bottom_var), bottom_var);
    }
  }

  Formula goal(const Sequent& s) const {
    return s.succedent.empty() ? bottom : s.succedent.front();
  }

  // Replaces every open assumption leaf of `formula` by `replacement`.
  NdDerivation plug(const NdDerivation& host, const Formula& formula,
                    const NdDerivation& replacement) {
    std::int64_t l = fresh();
    NdDerivation marked = nd_relabel_open(host, formula, l);
    return nd_substitute(marked, l, replacement);
  }

  NdDerivation translate(const SeqDerivation& d) {
    const SeqParams& ps = d.params();
    const Sequent& c = d.conclusion();
    switch (d.rule()) {
      case SeqRule::Init:
        return NdDerivation::hyp(c.succedent.front(), fresh());
      case SeqRule::Cut:
        throw ProofError("slt_cutfree_to_nd_normal: input contains cut");
      case SeqRule::WeRight:
        return from_bottom(translate(d.premises()[0]), *ps.a);
      case SeqRule::ImpLeft: {
        NdDerivation minor = translate(d.premises()[0]);
        NdDerivation host = translate(d.premises()[1]);
        Formula phi = Formula::next(ps.i, Formula::imp(*ps.a, *ps.b));
        NdDerivation use =
            nd::imp_e(NdDerivation::hyp(phi, fresh()), std::move(minor), ps.i, *ps.a, *ps.b);
        return plug(host, Formula::next(ps.i, *ps.b), use);
      }
      case SeqRule::ImpRight: {
        NdDerivation body = translate(d.premises()[0]);
        std::int64_t l = fresh();
        body = nd_relabel_open(body, Formula::next(ps.i, *ps.a), l);
        return nd::imp_i(std::move(body), ps.i, *ps.a, *ps.b, l);
      }
      case SeqRule::NegLeft: {
        NdDerivation minor = translate(d.premises()[0]);
        Formula negf = Formula::next(ps.i, Formula::neg(*ps.a));
        return nd::exp(NdDerivation::hyp(negf, fresh()), std::move(minor), ps.i, *ps.a, bottom);
      }
      case SeqRule::NegRight: {
        NdDerivation body = translate(d.premises()[0]);
        std::int64_t l = fresh();
        body = nd_relabel_open(body, Formula::next(ps.i, *ps.a), l);
        NdDerivation neg_part = project(body, true);
        NdDerivation pos_part = project(body, false);
        return nd::neg_i(std::move(neg_part), std::move(pos_part), ps.i, *ps.a, IndexExpr(0),
                         bottom_var, l);
      }
      case SeqRule::ExMiddle: {
        NdDerivation left = translate(d.premises()[0]);
        NdDerivation right = translate(d.premises()[1]);
        std::int64_t l1 = fresh();
        std::int64_t l2 = fresh();
        left = nd_relabel_open(left, Formula::next(ps.i, Formula::neg(*ps.a)), l1);
        right = nd_relabel_open(right, Formula::next(ps.i, *ps.a), l2);
        return nd::exm(std::move(left), std::move(right), ps.i, *ps.a, l1, l2);
      }
      case SeqRule::AndLeft: {
        NdDerivation host = translate(d.premises()[0]);
        Formula phi = Formula::next(ps.i, Formula::conj(*ps.a, *ps.b));
        host = plug(host, Formula::next(ps.i, *ps.a),
                    nd::and_e1(NdDerivation::hyp(phi, fresh()), ps.i, *ps.a, *ps.b));
        host = plug(host, Formula::next(ps.i, *ps.b),
                    nd::and_e2(NdDerivation::hyp(phi, fresh()), ps.i, *ps.a, *ps.b));
        return host;
      }
      case SeqRule::AndRight:
        return nd::and_i(translate(d.premises()[0]), translate(d.premises()[1]), ps.i, *ps.a,
                         *ps.b);
      case SeqRule::OrLeft: {
        NdDerivation b1 = translate(d.premises()[0]);
        NdDerivation b2 = translate(d.premises()[1]);
        Formula phi = Formula::next(ps.i, Formula::disj(*ps.a, *ps.b));
        std::int64_t l1 = fresh();
        std::int64_t l2 = fresh();
        b1 = nd_relabel_open(b1, Formula::next(ps.i, *ps.a), l1);
        b2 = nd_relabel_open(b2, Formula::next(ps.i, *ps.b), l2);
        return nd::or_e(NdDerivation::hyp(phi, fresh()), std::move(b1), std::move(b2), ps.i,
                        *ps.a, *ps.b, l1, l2);
      }
      case SeqRule::OrRight1:
        return nd::or_i1(translate(d.premises()[0]), ps.i, *ps.a, *ps.b);
      case SeqRule::OrRight2:
        return nd::or_i2(translate(d.premises()[0]), ps.i, *ps.a, *ps.b);
      case SeqRule::GLeft: {
        NdDerivation host = translate(d.premises()[0]);
        Formula phi = Formula::next(ps.i, Formula::globally(*ps.a));
        NdDerivation use = nd::g_e(NdDerivation::hyp(phi, fresh()), ps.i, ps.k, *ps.a);
        return plug(host, Formula::next(ps.i + ps.k, *ps.a), use);
      }
      case SeqRule::GRight: {
        NdFamily fam;
        fam.var = d.family().var;
        for (const auto& m : d.family().explicit_members)
          fam.explicit_members.push_back(translate(m));
        fam.tail = std::make_shared<const NdDerivation>(translate(*d.family().tail));
        return nd::g_i(std::move(fam), ps.i, *ps.a);
      }
      case SeqRule::FLeft: {
        Formula phi = Formula::next(ps.i, Formula::eventually(*ps.a));
        std::int64_t l = fresh();
        NdFamily fam;
        fam.var = d.family().var;
        for (std::size_t n = 0; n < d.family().explicit_members.size(); ++n) {
          NdDerivation m = translate(d.family().explicit_members[n]);
          fam.explicit_members.push_back(
              nd_relabel_open(m, Formula::next(ps.i + IndexExpr(n), *ps.a), l));
        }
        NdDerivation tail = translate(*d.family().tail);
        tail = nd_relabel_open(tail, Formula::next(ps.i + IndexExpr::var(d.family().var), *ps.a),
                               l);
        fam.tail = std::make_shared<const NdDerivation>(std::move(tail));
        return nd::f_e(NdDerivation::hyp(phi, fresh()), std::move(fam), ps.i, *ps.a, l);
      }
      case SeqRule::FRight:
        return nd::f_i(translate(d.premises()[0]), ps.i, ps.k, *ps.a);
      case SeqRule::WeLeft:
      case SeqRule::OrRight:
        throw ProofError("slt_cutfree_to_nd_normal: not a single-succedent rule");
    }
    throw ProofError("slt_cutfree_to_nd_normal: unreachable rule");
  }
};

}  // namespace

NdDerivation slt_cutfree_to_nd_normal(const SeqDerivation& d, const Contradiction& bottom) {
  require_checked(check_slt(d), "slt_cutfree_to_nd_normal");
  if (d.contains_cut()) throw ProofError("slt_cutfree_to_nd_normal: input contains cut");
  SltToNd state;
  state.bottom = bottom.formula();
  state.bottom_var = Formula::var(bottom.variable);
  return state.translate(d);
}

// ---------------------------------------------------------------------------
// Cut-free multi-succedent derivations into cut-free single-succedent ones.

namespace {

FormulaSet negate_all(const FormulaSet& s) {
  std::vector<Formula> out;
  for (const auto& f : s) out.push_back(Formula::neg(f));
  return FormulaSet(std::move(out));
}

struct LtToSlt {
  // Target for a sequent Gamma => Delta: the set ~Delta u Gamma.
  static FormulaSet target_of(const Sequent& s) {
    return negate_all(s.succedent).set_union(s.antecedent);
  }

  // Removes ~f from the antecedent of an empty-succedent derivation and
  // proves f instead.
  static SeqDerivation recover(SeqDerivation d, const Formula& f) {
    return neg_left_inverse(std::move(d), IndexExpr(0), f);
  }

  static SeqDerivation seal(SeqDerivation d, const Formula& f) {
    // Turns Gamma => f into ~f, Gamma => (empty).
    return slt::neg_left(std::move(d), IndexExpr(0), f);
  }

  SeqDerivation finish(SeqDerivation d, const Sequent& original) {
    return weaken_antecedent_to(std::move(d), target_of(original));
  }

  SeqDerivation translate(const SeqDerivation& d) {
    const SeqParams& ps = d.params();
    const Sequent& c = d.conclusion();
    switch (d.rule()) {
      case SeqRule::Init: {
        const Formula& f = c.succedent.front();
        PrefixedFormula pf = strip_x(f);
        SeqDerivation base = slt::init(pf.prefix, pf.core.name(), {});
        return finish(seal(std::move(base), f), c);
      }
      case SeqRule::Cut:
        throw ProofError("lt_cutfree_to_slt_cutfree: input contains cut");
      case SeqRule::WeLeft:
      case SeqRule::WeRight:
        return finish(translate(d.premises()[0]), c);
      case SeqRule::ImpLeft: {
        Formula xa = Formula::next(ps.i, *ps.a);
        Formula xb = Formula::next(ps.i, *ps.b);
        SeqDerivation p1 = recover(translate(d.premises()[0]), xa);
        SeqDerivation p2 = translate(d.premises()[1]);
        FormulaSet gamma = p1.conclusion().antecedent.set_union(
            p2.conclusion().antecedent.without(xb));
        p1 = weaken_antecedent_to(p1, gamma);
        p2 = weaken_antecedent_to(p2, gamma.with(xb));
        return finish(slt::imp_left(std::move(p1), std::move(p2), ps.i, *ps.a, *ps.b), c);
      }
      case SeqRule::ImpRight: {
        Formula xa = Formula::next(ps.i, *ps.a);
        Formula xb = Formula::next(ps.i, *ps.b);
        Formula phi = Formula::next(ps.i, Formula::imp(*ps.a, *ps.b));
        SeqDerivation p = recover(translate(d.premises()[0]), xb);
        p = weaken_antecedent_to(p, p.conclusion().antecedent.with(xa));
        return finish(seal(slt::imp_right(std::move(p), ps.i, *ps.a, *ps.b), phi), c);
      }
      case SeqRule::NegLeft: {
        Formula xa = Formula::next(ps.i, *ps.a);
        SeqDerivation p = recover(translate(d.premises()[0]), xa);
        return finish(slt::neg_left(std::move(p), ps.i, *ps.a), c);
      }
      case SeqRule::NegRight: {
        Formula xa = Formula::next(ps.i, *ps.a);
        Formula phi = Formula::next(ps.i, Formula::neg(*ps.a));
        SeqDerivation p = translate(d.premises()[0]);
        p = weaken_antecedent_to(p, p.conclusion().antecedent.with(xa));
        return finish(seal(slt::neg_right(std::move(p), ps.i, *ps.a), phi), c);
      }
      case SeqRule::AndLeft: {
        Formula xa = Formula::next(ps.i, *ps.a);
        Formula xb = Formula::next(ps.i, *ps.b);
        SeqDerivation p = translate(d.premises()[0]);
        p = weaken_antecedent_to(p, p.conclusion().antecedent.with(xa).with(xb));
        return finish(slt::and_left(std::move(p), ps.i, *ps.a, *ps.b), c);
      }
      case SeqRule::AndRight: {
        Formula xa = Formula::next(ps.i, *ps.a);
        Formula xb = Formula::next(ps.i, *ps.b);
        Formula phi = Formula::next(ps.i, Formula::conj(*ps.a, *ps.b));
        SeqDerivation p1 = recover(translate(d.premises()[0]), xa);
        SeqDerivation p2 = recover(translate(d.premises()[1]), xb);
        FormulaSet gamma =
            p1.conclusion().antecedent.set_union(p2.conclusion().antecedent);
        p1 = weaken_antecedent_to(p1, gamma);
        p2 = weaken_antecedent_to(p2, gamma);
        return finish(seal(slt::and_right(std::move(p1), std::move(p2), ps.i, *ps.a, *ps.b), phi),
                      c);
      }
      case SeqRule::OrLeft: {
        Formula xa = Formula::next(ps.i, *ps.a);
        Formula xb = Formula::next(ps.i, *ps.b);
        SeqDerivation p1 = translate(d.premises()[0]);
        SeqDerivation p2 = translate(d.premises()[1]);
        FormulaSet gamma = p1.conclusion().antecedent.without(xa).set_union(
            p2.conclusion().antecedent.without(xb));
        p1 = weaken_antecedent_to(p1, gamma.with(xa));
        p2 = weaken_antecedent_to(p2, gamma.with(xb));
        return finish(slt::or_left(std::move(p1), std::move(p2), ps.i, *ps.a, *ps.b), c);
      }
      case SeqRule::OrRight: {
        Formula xa = Formula::next(ps.i, *ps.a);
        Formula xb = Formula::next(ps.i, *ps.b);
        Formula phi = Formula::next(ps.i, Formula::disj(*ps.a, *ps.b));
        SeqDerivation s1 = recover(translate(d.premises()[0]), xa);
        SeqDerivation s2 = slt::or_right1(std::move(s1), ps.i, *ps.a, *ps.b);
        SeqDerivation s3 = seal(std::move(s2), phi);
        // With equal disjuncts the set held one negation, already consumed.
        if (!s3.conclusion().antecedent.contains(Formula::neg(xb)))
          return finish(std::move(s3), c);
        SeqDerivation s4 = recover(std::move(s3), xb);
        SeqDerivation s5 = slt::or_right2(std::move(s4), ps.i, *ps.a, *ps.b);
        SeqDerivation s6 = seal(std::move(s5), phi);
        return finish(std::move(s6), c);
      }
      case SeqRule::GLeft: {
        Formula shifted = Formula::next(ps.i + ps.k, *ps.a);
        SeqDerivation p = translate(d.premises()[0]);
        p = weaken_antecedent_to(p, p.conclusion().antecedent.with(shifted));
        return finish(slt::g_left(std::move(p), ps.i, ps.k, *ps.a), c);
      }
      case SeqRule::GRight: {
        Formula phi = Formula::next(ps.i, Formula::globally(*ps.a));
        const SeqFamily& fam = d.family();
        auto member = [&](const SeqDerivation& m, const IndexExpr& e) {
          return recover(translate(m), Formula::next(ps.i + e, *ps.a));
        };
        std::vector<SeqDerivation> members;
        for (std::size_t n = 0; n < fam.explicit_members.size(); ++n)
          members.push_back(member(fam.explicit_members[n], IndexExpr(n)));
        SeqDerivation tail = member(*fam.tail, IndexExpr::var(fam.var));
        FormulaSet gamma = tail.conclusion().antecedent;
        for (const auto& m : members) gamma = gamma.set_union(m.conclusion().antecedent);
        if (gamma.mentions_index(fam.var))
          throw ProofError("g-right: family context depends on the schema variable");
        SeqFamily out;
        out.var = fam.var;
        for (auto& m : members) out.explicit_members.push_back(weaken_antecedent_to(m, gamma));
        out.tail =
            std::make_shared<const SeqDerivation>(weaken_antecedent_to(std::move(tail), gamma));
        return finish(seal(slt::g_right(std::move(out), ps.i, *ps.a), phi), c);
      }
      case SeqRule::FLeft: {
        const SeqFamily& fam = d.family();
        auto shifted = [&](const IndexExpr& e) { return Formula::next(ps.i + e, *ps.a); };
        std::vector<SeqDerivation> members;
        for (std::size_t n = 0; n < fam.explicit_members.size(); ++n) {
          SeqDerivation m = translate(fam.explicit_members[n]);
          members.push_back(
              weaken_antecedent_to(m, m.conclusion().antecedent.with(shifted(IndexExpr(n)))));
        }
        SeqDerivation tail = translate(*fam.tail);
        tail = weaken_antecedent_to(
            tail, tail.conclusion().antecedent.with(shifted(IndexExpr::var(fam.var))));
        FormulaSet gamma =
            tail.conclusion().antecedent.without(shifted(IndexExpr::var(fam.var)));
        if (gamma.mentions_index(fam.var))
          throw ProofError("f-left: family context depends on the schema variable");
        for (std::size_t n = 0; n < members.size(); ++n)
          gamma = gamma.set_union(
              members[n].conclusion().antecedent.without(shifted(IndexExpr(n))));
        SeqFamily out;
        out.var = fam.var;
        for (std::size_t n = 0; n < members.size(); ++n)
          out.explicit_members.push_back(
              weaken_antecedent_to(members[n], gamma.with(shifted(IndexExpr(n)))));
        out.tail = std::make_shared<const SeqDerivation>(
            weaken_antecedent_to(std::move(tail), gamma.with(shifted(IndexExpr::var(fam.var)))));
        return finish(slt::f_left(std::move(out), ps.i, *ps.a), c);
      }
      case SeqRule::FRight: {
        Formula shifted = Formula::next(ps.i + ps.k, *ps.a);
        Formula phi = Formula::next(ps.i, Formula::eventually(*ps.a));
        SeqDerivation p = recover(translate(d.premises()[0]), shifted);
        return finish(seal(slt::f_right(std::move(p), ps.i, ps.k, *ps.a), phi), c);
      }
      case SeqRule::OrRight1:
      case SeqRule::OrRight2:
      case SeqRule::ExMiddle:
        throw ProofError("lt_cutfree_to_slt_cutfree: not a multi-succedent rule");
    }
    throw ProofError("lt_cutfree_to_slt_cutfree: unreachable rule");
  }
};

}  // namespace

SeqDerivation lt_cutfree_to_slt_cutfree(const SeqDerivation& d) {
  require_checked(check_lt(d), "lt_cutfree_to_slt_cutfree");
  if (d.contains_cut()) throw ProofError("lt_cutfree_to_slt_cutfree: input contains cut");
  LtToSlt state;
  return freshen_family_vars(state.translate(d), {});
}

// ---------------------------------------------------------------------------
// Single-succedent derivations into the multi-succedent calculus.

namespace {

struct SltToLt {
  SeqDerivation finish(SeqDerivation d, const Sequent& original) {
    return lt::weaken_to(std::move(d), original);
  }

  SeqDerivation translate(const SeqDerivation& d) {
    const SeqParams& ps = d.params();
    const Sequent& c = d.conclusion();
    switch (d.rule()) {
      case SeqRule::Init: {
        const Formula& f = c.succedent.front();
        PrefixedFormula pf = strip_x(f);
        return finish(lt::init(pf.prefix, pf.core.name()), c);
      }
      case SeqRule::Cut:
        return finish(
            lt::cut(translate(d.premises()[0]), translate(d.premises()[1]), *ps.a), c);
      case SeqRule::WeRight:
        return finish(lt::we_right(translate(d.premises()[0]), *ps.a), c);
      case SeqRule::ImpLeft: {
        SeqDerivation p1 = translate(d.premises()[0]);
        SeqDerivation p2 = translate(d.premises()[1]);
        // The first premise needs the conclusion's succedent as side context.
        for (const Formula& f : d.premises()[1].conclusion().succedent)
          p1 = lt::we_right(std::move(p1), f);
        return finish(lt::imp_left(std::move(p1), std::move(p2), ps.i, *ps.a, *ps.b), c);
      }
      case SeqRule::ImpRight:
        return finish(lt::imp_right(translate(d.premises()[0]), ps.i, *ps.a, *ps.b), c);
      case SeqRule::NegLeft:
        return finish(lt::neg_left(translate(d.premises()[0]), ps.i, *ps.a), c);
      case SeqRule::NegRight:
        return finish(lt::neg_right(translate(d.premises()[0]), ps.i, *ps.a), c);
      case SeqRule::ExMiddle: {
        Formula pos = Formula::next(ps.i, *ps.a);
        Formula negf = Formula::next(ps.i, Formula::neg(*ps.a));
        SeqDerivation split = lt::neg_right(derive_identity(*ps.a, ps.i, {}, Calculus::Lt),
                                            ps.i, *ps.a);  // => X^i a, X^i ~a
        SeqDerivation c1 = lt::cut(std::move(split), translate(d.premises()[0]), negf);
        SeqDerivation c2 = lt::cut(std::move(c1), translate(d.premises()[1]), pos);
        return finish(std::move(c2), c);
      }
      case SeqRule::AndLeft:
        return finish(lt::and_left(translate(d.premises()[0]), ps.i, *ps.a, *ps.b), c);
      case SeqRule::AndRight:
        return finish(lt::and_right(translate(d.premises()[0]), translate(d.premises()[1]), ps.i,
                                    *ps.a, *ps.b),
                      c);
      case SeqRule::OrLeft:
        return finish(lt::or_left(translate(d.premises()[0]), translate(d.premises()[1]), ps.i,
                                  *ps.a, *ps.b),
                      c);
      case SeqRule::OrRight1: {
        SeqDerivation p = lt::we_right(translate(d.premises()[0]), Formula::next(ps.i, *ps.b));
        return finish(lt::or_right(std::move(p), ps.i, *ps.a, *ps.b), c);
      }
      case SeqRule::OrRight2: {
        SeqDerivation p = lt::we_right(translate(d.premises()[0]), Formula::next(ps.i, *ps.a));
        return finish(lt::or_right(std::move(p), ps.i, *ps.a, *ps.b), c);
      }
      case SeqRule::GLeft:
        return finish(lt::g_left(translate(d.premises()[0]), ps.i, ps.k, *ps.a), c);
      case SeqRule::GRight:
      case SeqRule::FLeft: {
        const SeqFamily& fam = d.family();
        SeqFamily out;
        out.var = fam.var;
        for (const auto& m : fam.explicit_members) out.explicit_members.push_back(translate(m));
        out.tail = std::make_shared<const SeqDerivation>(translate(*fam.tail));
        SeqDerivation node = d.rule() == SeqRule::GRight
                                 ? lt::g_right(std::move(out), ps.i, *ps.a)
                                 : lt::f_left(std::move(out), ps.i, *ps.a);
        return finish(std::move(node), c);
      }
      case SeqRule::FRight:
        return finish(lt::f_right(translate(d.premises()[0]), ps.i, ps.k, *ps.a), c);
      case SeqRule::WeLeft:
      case SeqRule::OrRight:
        throw ProofError("slt_to_lt: not a single-succedent rule");
    }
    throw ProofError("slt_to_lt: unreachable rule");
  }
};

}  // namespace

SeqDerivation slt_to_lt(const SeqDerivation& d) {
  require_checked(check_slt(d), "slt_to_lt");
  SltToLt state;
  return freshen_family_vars(state.translate(d), {});
}

// ---------------------------------------------------------------------------
// Cut elimination for the multi-succedent calculus.

namespace {

struct CutElim {
  std::size_t fuel;
  CutElimTrace* trace;
  std::size_t step = 0;
  // Family variables bound on the path above the node being rewritten; fresh
  // names must avoid them or a renamed binder would nest inside an equal one.
  std::set<std::string> scope;

  void burn(const char* kind, const Formula& about) {
    if (fuel == 0) throw FuelExhausted("cut elimination ran out of fuel");
    --fuel;
    ++step;
    if (trace) trace->steps.push_back({step, kind, about.debug_str()});
  }

  SeqDerivation eliminate(const SeqDerivation& d) {
    std::vector<SeqDerivation> premises;
    premises.reserve(d.premises().size());
    for (const auto& p : d.premises()) premises.push_back(eliminate(p));
    std::optional<SeqFamily> family;
    if (d.has_family()) {
      SeqFamily out;
      out.var = d.family().var;
      for (const auto& m : d.family().explicit_members)
        out.explicit_members.push_back(eliminate(m));
      bool inserted = scope.insert(d.family().var).second;
      out.tail = std::make_shared<const SeqDerivation>(eliminate(*d.family().tail));
      if (inserted) scope.erase(d.family().var);
      family = std::move(out);
    }
    if (d.rule() == SeqRule::Cut) {
      SeqDerivation reduced = reduce_cut(premises[0], premises[1], *d.params().a);
      return lt::weaken_to(std::move(reduced), d.conclusion());
    }
    if (family)
      return SeqDerivation::make_omega(d.conclusion(), d.rule(), d.params(), std::move(*family));
    return SeqDerivation::make(d.conclusion(), d.rule(), d.params(), std::move(premises));
  }

  SeqDerivation maybe_cut(const SeqDerivation& left, const SeqDerivation& right,
                          const Formula& a) {
    if (!left.conclusion().succedent.contains(a)) return left;
    if (!right.conclusion().antecedent.contains(a)) return right;
    return reduce_cut(left, right, a);
  }

  static std::optional<Formula> principal_right(const SeqDerivation& d) {
    const SeqParams& ps = d.params();
    switch (d.rule()) {
      case SeqRule::ImpRight: return Formula::next(ps.i, Formula::imp(*ps.a, *ps.b));
      case SeqRule::NegRight: return Formula::next(ps.i, Formula::neg(*ps.a));
      case SeqRule::AndRight: return Formula::next(ps.i, Formula::conj(*ps.a, *ps.b));
      case SeqRule::OrRight: return Formula::next(ps.i, Formula::disj(*ps.a, *ps.b));
      case SeqRule::GRight: return Formula::next(ps.i, Formula::globally(*ps.a));
      case SeqRule::FRight: return Formula::next(ps.i, Formula::eventually(*ps.a));
      default: return std::nullopt;
    }
  }

  static std::optional<Formula> principal_left(const SeqDerivation& d) {
    const SeqParams& ps = d.params();
    switch (d.rule()) {
      case SeqRule::ImpLeft: return Formula::next(ps.i, Formula::imp(*ps.a, *ps.b));
      case SeqRule::NegLeft: return Formula::next(ps.i, Formula::neg(*ps.a));
      case SeqRule::AndLeft: return Formula::next(ps.i, Formula::conj(*ps.a, *ps.b));
      case SeqRule::OrLeft: return Formula::next(ps.i, Formula::disj(*ps.a, *ps.b));
      case SeqRule::GLeft: return Formula::next(ps.i, Formula::globally(*ps.a));
      case SeqRule::FLeft: return Formula::next(ps.i, Formula::eventually(*ps.a));
      default: return std::nullopt;
    }
  }

  // Formulas the rule schema demands in the succedent of premise `n`.
  static FormulaSet succ_formulas(const SeqDerivation& d, std::size_t n) {
    const SeqParams& ps = d.params();
    switch (d.rule()) {
      case SeqRule::ImpLeft:
        return n == 0 ? FormulaSet{Formula::next(ps.i, *ps.a)} : FormulaSet{};
      case SeqRule::ImpRight:
        return FormulaSet{Formula::next(ps.i, *ps.b)};
      case SeqRule::NegLeft:
        return FormulaSet{Formula::next(ps.i, *ps.a)};
      case SeqRule::AndRight:
        return FormulaSet{Formula::next(ps.i, n == 0 ? *ps.a : *ps.b)};
      case SeqRule::OrRight:
        return FormulaSet{Formula::next(ps.i, *ps.a), Formula::next(ps.i, *ps.b)};
      case SeqRule::FRight:
        return FormulaSet{Formula::next(ps.i + ps.k, *ps.a)};
      default:
        return {};
    }
  }

  static FormulaSet succ_formulas_member(const SeqDerivation& d, const IndexExpr& e) {
    const SeqParams& ps = d.params();
    if (d.rule() == SeqRule::GRight) return FormulaSet{Formula::next(ps.i + e, *ps.a)};
    return {};
  }

  // Formulas the rule schema demands in the antecedent of premise `n`.
  static FormulaSet ant_formulas(const SeqDerivation& d, std::size_t n) {
    const SeqParams& ps = d.params();
    switch (d.rule()) {
      case SeqRule::ImpLeft:
        return n == 1 ? FormulaSet{Formula::next(ps.i, *ps.b)} : FormulaSet{};
      case SeqRule::ImpRight:
        return FormulaSet{Formula::next(ps.i, *ps.a)};
      case SeqRule::NegRight:
        return FormulaSet{Formula::next(ps.i, *ps.a)};
      case SeqRule::AndLeft:
        return FormulaSet{Formula::next(ps.i, *ps.a), Formula::next(ps.i, *ps.b)};
      case SeqRule::OrLeft:
        return FormulaSet{Formula::next(ps.i, n == 0 ? *ps.a : *ps.b)};
      case SeqRule::GLeft:
        return FormulaSet{Formula::next(ps.i + ps.k, *ps.a)};
      default:
        return {};
    }
  }

  static FormulaSet ant_formulas_member(const SeqDerivation& d, const IndexExpr& e) {
    const SeqParams& ps = d.params();
    if (d.rule() == SeqRule::FLeft) return FormulaSet{Formula::next(ps.i + e, *ps.a)};
    return {};
  }

  SeqDerivation against_family(const SeqDerivation& other, const std::string& var) {
    // `other` is pushed under the family binder; its own binders must not
    // shadow the variable.
    if (other.bound_family_vars().count(var))
      return freshen_family_vars(other, {var});
    return other;
  }

  // Both inputs cut-free, a in succ(left) and ant(right). The result is
  // cut-free and proves a sequent contained in
  // ant(left) u (ant(right) - a) => (succ(left) - a) u succ(right).
  SeqDerivation reduce_cut(const SeqDerivation& left_in, const SeqDerivation& right_in,
                           const Formula& a) {
    // The reduction interleaves copies of both trees, so shared binder names
    // would end up nested; rename the right side apart when they clash.
    const SeqDerivation& left = left_in;
    SeqDerivation right = right_in;
    std::set<std::string> avoid = left.bound_family_vars();
    avoid.insert(scope.begin(), scope.end());
    bool clash = false;
    for (const auto& v : right.bound_family_vars()) clash = clash || avoid.count(v) > 0;
    if (clash) right = freshen_family_vars(right, avoid);
    if (left.rule() == SeqRule::Init) {
      burn("axiom-left", a);
      return right;
    }
    if (right.rule() == SeqRule::Init) {
      burn("axiom-right", a);
      return left;
    }
    if (left.rule() == SeqRule::WeRight && *left.params().a == a &&
        !left.premises()[0].conclusion().succedent.contains(a)) {
      burn("erase-left", a);
      return left.premises()[0];
    }
    if (right.rule() == SeqRule::WeLeft && *right.params().a == a &&
        !right.premises()[0].conclusion().antecedent.contains(a)) {
      burn("erase-right", a);
      return right.premises()[0];
    }
    auto lp = principal_right(left);
    auto rp = principal_left(right);
    if (lp && *lp == a && rp && *rp == a) return principal(left, right, a);
    if (!lp || !(*lp == a)) return permute_left(left, right, a);
    return permute_right(left, right, a);
  }

  SeqDerivation principal(const SeqDerivation& left, const SeqDerivation& right,
                          const Formula& a) {
    burn("principal", a);
    // Cross-cuts first: clear residual copies of `a` from the premise
    // contexts so the smaller cuts below see none.
    auto clean_left = [&](const SeqDerivation& p) {
      return p.conclusion().succedent.contains(a) ? reduce_cut(p, right, a) : p;
    };
    auto clean_right = [&](const SeqDerivation& p) {
      return p.conclusion().antecedent.contains(a) ? reduce_cut(left, p, a) : p;
    };
    const SeqParams& lps = left.params();
    const SeqParams& rps = right.params();
    switch (left.rule()) {
      case SeqRule::ImpRight: {
        Formula xa = Formula::next(lps.i, *lps.a);
        Formula xb = Formula::next(lps.i, *lps.b);
        SeqDerivation l1 = clean_left(left.premises()[0]);
        SeqDerivation r1 = clean_right(right.premises()[0]);
        SeqDerivation r2 = clean_right(right.premises()[1]);
        SeqDerivation inner = maybe_cut(l1, r2, xb);
        return maybe_cut(r1, inner, xa);
      }
      case SeqRule::NegRight: {
        Formula xa = Formula::next(lps.i, *lps.a);
        SeqDerivation l1 = clean_left(left.premises()[0]);
        SeqDerivation r1 = clean_right(right.premises()[0]);
        return maybe_cut(r1, l1, xa);
      }
      case SeqRule::AndRight: {
        Formula xa = Formula::next(lps.i, *lps.a);
        Formula xb = Formula::next(lps.i, *lps.b);
        SeqDerivation l1 = clean_left(left.premises()[0]);
        SeqDerivation l2 = clean_left(left.premises()[1]);
        SeqDerivation r1 = clean_right(right.premises()[0]);
        return maybe_cut(l1, maybe_cut(l2, r1, xb), xa);
      }
      case SeqRule::OrRight: {
        Formula xa = Formula::next(lps.i, *lps.a);
        Formula xb = Formula::next(lps.i, *lps.b);
        SeqDerivation l1 = clean_left(left.premises()[0]);
        SeqDerivation r1 = clean_right(right.premises()[0]);
        SeqDerivation r2 = clean_right(right.premises()[1]);
        return maybe_cut(maybe_cut(l1, r1, xa), r2, xb);
      }
      case SeqRule::GRight: {
        Formula shifted = Formula::next(rps.i + rps.k, *rps.a);
        SeqDerivation member = family_member_at(left.family(), rps.k);
        member = clean_left(member);
        SeqDerivation r1 = clean_right(right.premises()[0]);
        return maybe_cut(member, r1, shifted);
      }
      case SeqRule::FRight: {
        Formula shifted = Formula::next(lps.i + lps.k, *lps.a);
        SeqDerivation member = family_member_at(right.family(), lps.k);
        member = clean_right(member);
        SeqDerivation l1 = clean_left(left.premises()[0]);
        return maybe_cut(l1, member, shifted);
      }
      default:
        throw ProofError("cut elimination: unexpected principal rule");
    }
  }

  SeqDerivation permute_left(const SeqDerivation& left, const SeqDerivation& right,
                             const Formula& a) {
    burn("permute-left", a);
    const FormulaSet ant_extra = right.conclusion().antecedent.without(a);
    const FormulaSet succ_extra = right.conclusion().succedent;

    if (left.rule() == SeqRule::WeRight) {
      const Formula& added = *left.params().a;
      SeqDerivation rec = maybe_cut(left.premises()[0], right, a);
      if (added == a || rec.conclusion().succedent.contains(added)) return rec;
      return lt::we_right(std::move(rec), added);
    }
    if (left.rule() == SeqRule::WeLeft) {
      const Formula& added = *left.params().a;
      SeqDerivation rec = maybe_cut(left.premises()[0], right, a);
      if (rec.conclusion().antecedent.contains(added)) return rec;
      return lt::we_left(std::move(rec), added);
    }

    Sequent conclusion{left.conclusion().antecedent.set_union(ant_extra),
                       left.conclusion().succedent.without(a).set_union(succ_extra)};
    auto rework = [&](const SeqDerivation& premise, const FormulaSet& required_succ,
                      const SeqDerivation& opponent) {
      SeqDerivation p = premise.conclusion().succedent.contains(a)
                            ? reduce_cut(premise, opponent, a)
                            : premise;
      Sequent target{premise.conclusion().antecedent.set_union(ant_extra),
                     premise.conclusion().succedent.without(a).set_union(succ_extra).set_union(
                         required_succ)};
      return lt::weaken_to(std::move(p), target);
    };

    if (left.has_family()) {
      const SeqFamily& fam = left.family();
      SeqDerivation opponent = against_family(right, fam.var);
      SeqFamily out;
      out.var = fam.var;
      for (std::size_t n = 0; n < fam.explicit_members.size(); ++n)
        out.explicit_members.push_back(rework(
            fam.explicit_members[n], succ_formulas_member(left, IndexExpr(n)), opponent));
      bool inserted = scope.insert(fam.var).second;
      out.tail = std::make_shared<const SeqDerivation>(
          rework(*fam.tail, succ_formulas_member(left, IndexExpr::var(fam.var)), opponent));
      if (inserted) scope.erase(fam.var);
      return SeqDerivation::make_omega(std::move(conclusion), left.rule(), left.params(),
                                       std::move(out));
    }
    std::vector<SeqDerivation> premises;
    for (std::size_t n = 0; n < left.premises().size(); ++n)
      premises.push_back(rework(left.premises()[n], succ_formulas(left, n), right));
    return SeqDerivation::make(std::move(conclusion), left.rule(), left.params(),
                               std::move(premises));
  }

  SeqDerivation permute_right(const SeqDerivation& left, const SeqDerivation& right,
                              const Formula& a) {
    burn("permute-right", a);
    const FormulaSet ant_extra = left.conclusion().antecedent;
    const FormulaSet succ_extra = left.conclusion().succedent.without(a);

    if (right.rule() == SeqRule::WeLeft) {
      const Formula& added = *right.params().a;
      SeqDerivation rec = maybe_cut(left, right.premises()[0], a);
      if (added == a || rec.conclusion().antecedent.contains(added)) return rec;
      return lt::we_left(std::move(rec), added);
    }
    if (right.rule() == SeqRule::WeRight) {
      const Formula& added = *right.params().a;
      SeqDerivation rec = maybe_cut(left, right.premises()[0], a);
      if (rec.conclusion().succedent.contains(added)) return rec;
      return lt::we_right(std::move(rec), added);
    }

    Sequent conclusion{right.conclusion().antecedent.without(a).set_union(ant_extra),
                       right.conclusion().succedent.set_union(succ_extra)};
    auto rework = [&](const SeqDerivation& premise, const FormulaSet& required_ant,
                      const SeqDerivation& opponent) {
      SeqDerivation p = premise.conclusion().antecedent.contains(a)
                            ? reduce_cut(opponent, premise, a)
                            : premise;
      Sequent target{
          premise.conclusion().antecedent.without(a).set_union(ant_extra).set_union(required_ant),
          premise.conclusion().succedent.set_union(succ_extra)};
      return lt::weaken_to(std::move(p), target);
    };

    if (right.has_family()) {
      const SeqFamily& fam = right.family();
      SeqDerivation opponent = against_family(left, fam.var);
      SeqFamily out;
      out.var = fam.var;
      for (std::size_t n = 0; n < fam.explicit_members.size(); ++n)
        out.explicit_members.push_back(
            rework(fam.explicit_members[n], ant_formulas_member(right, IndexExpr(n)), opponent));
      bool inserted = scope.insert(fam.var).second;
      out.tail = std::make_shared<const SeqDerivation>(
          rework(*fam.tail, ant_formulas_member(right, IndexExpr::var(fam.var)), opponent));
      if (inserted) scope.erase(fam.var);
      return SeqDerivation::make_omega(std::move(conclusion), right.rule(), right.params(),
                                       std::move(out));
    }
    std::vector<SeqDerivation> premises;
    for (std::size_t n = 0; n < right.premises().size(); ++n)
      premises.push_back(rework(right.premises()[n], ant_formulas(right, n), left));
    return SeqDerivation::make(std::move(conclusion), right.rule(), right.params(),
                               std::move(premises));
  }
};

}  // namespace

SeqDerivation cut_eliminate_lt(const SeqDerivation& d, std::size_t fuel, CutElimTrace* trace) {
  require_checked(check_lt(d), "cut_eliminate_lt");
  CutElim state{fuel, trace};
  return state.eliminate(d);
}

SeqDerivation cut_eliminate_slt(const SeqDerivation& d, std::size_t fuel, CutElimTrace* trace) {
  require_checked(check_slt(d), "cut_eliminate_slt");
  const Sequent& goal = d.conclusion();
  SeqDerivation wide = slt_to_lt(d);
  SeqDerivation cut_free = cut_eliminate_lt(wide, fuel, trace);
  SeqDerivation narrowed = lt_cutfree_to_slt_cutfree(cut_free);
  if (goal.succedent.empty()) return weaken_antecedent_to(narrowed, goal.antecedent);
  const Formula& shown = goal.succedent.front();
  SeqDerivation recovered = neg_left_inverse(narrowed, IndexExpr(0), shown);
  return weaken_antecedent_to(recovered, goal.antecedent);
}

NdDerivation normalize_indirect(const NdDerivation& d, std::size_t fuel,
                                const Contradiction& bottom) {
  require_checked(check_nd(d), "normalize_indirect");
  SeqDerivation translated = nlt_to_slt(d, bottom);
  SeqDerivation cut_free = cut_eliminate_slt(translated, fuel);
  return slt_cutfree_to_nd_normal(cut_free, bottom);
}

}  // namespace proofkit
