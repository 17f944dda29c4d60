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

#include <functional>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "proofkit/errors.hpp"
#include "proofkit/proof_io.hpp"
#include "proofkit/seq_build.hpp"
#include "proofkit/seq_check.hpp"
#include "proofkit/trace.hpp"

namespace proofkit {
namespace {

using testing::Rng;

Formula P() { return Formula::var("p"); }
Formula Q() { return Formula::var("q"); }
Formula R() { return Formula::var("r"); }

TEST(CheckLt, InitialSequentWithPrefix) {
  SeqDerivation d = lt::init(IndexExpr(2), "p");
  CheckReport report = check_lt(d);
  EXPECT_TRUE(report.ok()) << report.str();
  EXPECT_EQ(report.cut_count, 0u);
  EXPECT_FALSE(report.uses_omega);
}

TEST(CheckLt, InitialSequentRejectsContext) {
  Formula f = Formula::next(P());
  SeqDerivation d = SeqDerivation::make({FormulaSet{f, Q()}, FormulaSet{f}}, SeqRule::Init, {}, {});
  EXPECT_FALSE(check_lt(d).ok());
  // The same sequent is a fine initial sequent in the single-succedent
  // calculus, which allows side context.
  EXPECT_TRUE(check_slt(d).ok());
}

TEST(CheckLt, InitialSequentRejectsCompoundFormula) {
  Formula f = Formula::conj(P(), Q());
  SeqDerivation d = SeqDerivation::make({FormulaSet{f}, FormulaSet{f}}, SeqRule::Init, {}, {});
  EXPECT_FALSE(check_lt(d).ok());
}

TEST(CheckLt, IdentityOfGloballyViaFamilyChecks) {
  SeqDerivation d = derive_identity(Formula::globally(P()), IndexExpr(0), {}, Calculus::Lt);
  CheckReport report = check_lt(d);
  EXPECT_TRUE(report.ok()) << report.str();
  EXPECT_TRUE(report.uses_omega);
}

TEST(CheckLt, OrRightWrongDisjunctIsViolation) {
  // or-right concluding => X (p \/ q) from premise => X p, X r.
  Formula xp = Formula::next(P());
  Formula xr = Formula::next(R());
  SeqDerivation premise = lt::we_right(lt::we_right(lt::init(IndexExpr(1), "p"), xr), xp);
  premise = lt::we_left(premise, Q());  // just to have some context
  SeqParams params;
  params.i = IndexExpr(1);
  params.a = P();
  params.b = Q();
  Formula phi = Formula::next(IndexExpr(1), Formula::disj(P(), Q()));
  SeqDerivation bad = SeqDerivation::make(
      {premise.conclusion().antecedent, FormulaSet{phi}}, SeqRule::OrRight, params, {premise});
  CheckReport report = check_lt(bad);
  EXPECT_FALSE(report.ok());
}

TEST(CheckSlt, InitialWithContext) {
  SeqDerivation d = slt::init(IndexExpr(1), "p", FormulaSet{Q()});
  EXPECT_TRUE(check_slt(d).ok());
}

TEST(CheckSlt, ExMiddleGolden) {
  SeqDerivation d = testing::golden_exmid_slt();
  CheckReport report = check_slt(d);
  EXPECT_TRUE(report.ok()) << report.str();
  EXPECT_EQ(d.conclusion().antecedent.size(), 0u);
  EXPECT_EQ(d.conclusion().succedent, FormulaSet{Formula::disj(Formula::neg(P()), P())});
}

TEST(CheckSlt, NegLeftNeedsEmptySuccedent) {
  // A neg-left node whose conclusion keeps a succedent formula is rejected.
  SeqDerivation premise = slt::init(IndexExpr(0), "p", {});
  SeqParams params;
  params.i = IndexExpr(0);
  params.a = P();
  SeqDerivation bad = SeqDerivation::make(
      {FormulaSet{Formula::neg(P()), P()}, FormulaSet{Q()}}, SeqRule::NegLeft, params, {premise});
  CheckReport report = check_slt(bad);
  EXPECT_FALSE(report.ok());
}

TEST(CheckSlt, RejectsMultiSuccedentRules) {
  SeqDerivation d = lt::we_left(lt::init(IndexExpr(0), "p"), Q());
  EXPECT_TRUE(check_lt(d).ok());
  EXPECT_FALSE(check_slt(d).ok());
}

TEST(CheckSlt, ReportsPathOfViolation) {
  SeqDerivation good = slt::init(IndexExpr(0), "p", {});
  SeqDerivation weakened = weaken_left(good, Q());
  // Corrupt the inner node: claim an ex-middle with too few premises.
  SeqParams params;
  params.i = IndexExpr(0);
  params.a = Q();
  SeqDerivation bad_leaf =
      SeqDerivation::make(good.conclusion(), SeqRule::ExMiddle, params, {weakened});
  SeqDerivation root = slt::we_right(
      slt::neg_left(bad_leaf, IndexExpr(0), P()), Q());
  CheckReport report = check_slt(root);
  ASSERT_FALSE(report.ok());
  EXPECT_EQ(report.violations.front().first, "0.0");
}

TEST(DeriveIdentity, BaseCase) {
  SeqDerivation d = derive_identity(P(), IndexExpr(0), {}, Calculus::Slt);
  EXPECT_EQ(d.rule(), SeqRule::Init);
  EXPECT_TRUE(check_slt(d).ok());
  EXPECT_EQ(d.conclusion().antecedent, FormulaSet{P()});
  EXPECT_EQ(d.conclusion().succedent, FormulaSet{P()});
}

TEST(DeriveIdentity, GloballyCaseRechecks) {
  SeqDerivation d = derive_identity(Formula::globally(P()), IndexExpr(0), {}, Calculus::Slt);
  CheckReport report = check_slt(d);
  EXPECT_TRUE(report.ok()) << report.str();
  EXPECT_TRUE(report.uses_omega);
  EXPECT_TRUE(is_cut_free(d));
}

TEST(DeriveIdentity, ImplicationWithContextAndPrefix) {
  SeqDerivation d =
      derive_identity(Formula::imp(P(), Q()), IndexExpr(1), FormulaSet{R()}, Calculus::Slt);
  EXPECT_TRUE(check_slt(d).ok());
  Formula want = Formula::next(IndexExpr(1), Formula::imp(P(), Q()));
  EXPECT_EQ(d.conclusion().antecedent, (FormulaSet{want, R()}));
  EXPECT_EQ(d.conclusion().succedent, FormulaSet{want});
}

TEST(DeriveIdentity, SymbolicPrefix) {
  SeqDerivation d = derive_identity(Formula::eventually(P()), IndexExpr::var("i"), {},
                                    Calculus::Slt);
  EXPECT_TRUE(check_slt(d).ok());
  EXPECT_EQ(d.free_index_vars(), std::set<std::string>{"i"});
}

TEST(DeriveIdentity, ExhaustiveSmallFormulas) {
  for (const Formula& f : testing::all_formulas(4, {"p", "q"})) {
    for (Calculus calc : {Calculus::Slt, Calculus::Lt}) {
      SeqDerivation d = derive_identity(f, IndexExpr(1), FormulaSet{R()}, calc);
      CheckReport report = calc == Calculus::Slt ? check_slt(d) : check_lt(d);
      ASSERT_TRUE(report.ok()) << print_formula(f) << "\n" << report.str();
      ASSERT_TRUE(is_cut_free(d));
      Formula want = Formula::next(IndexExpr(1), f);
      ASSERT_TRUE(d.conclusion().antecedent.contains(want));
      ASSERT_EQ(d.conclusion().succedent, FormulaSet{want});
    }
  }
}

TEST(CheckSlt, ExplicitFamilyMembersCheckConcretely) {
  // g-right with one explicit member and a tail; the member is checked at
  // index 0, the tail symbolically.
  Formula gp = Formula::globally(P());
  SeqDerivation member0 = slt::g_left(
      derive_identity(P(), IndexExpr(0), FormulaSet{}, Calculus::Slt), IndexExpr(0),
      IndexExpr(0), P());
  SeqDerivation tail = slt::g_left(
      derive_identity(P(), IndexExpr::var("j"), FormulaSet{}, Calculus::Slt), IndexExpr(0),
      IndexExpr::var("j"), P());
  SeqFamily fam;
  fam.var = "j";
  fam.explicit_members.push_back(member0);
  fam.tail = std::make_shared<const SeqDerivation>(tail);
  SeqDerivation d = slt::g_right(std::move(fam), IndexExpr(0), P());
  CheckReport report = check_slt(d);
  EXPECT_TRUE(report.ok()) << report.str();
  EXPECT_EQ(d.conclusion().antecedent, FormulaSet{gp});

  // A wrong explicit member is reported concretely.
  SeqFamily bad;
  bad.var = "j";
  bad.explicit_members.push_back(
      slt::g_left(derive_identity(P(), IndexExpr(2), FormulaSet{}, Calculus::Slt), IndexExpr(0),
                  IndexExpr(2), P()));
  bad.tail = std::make_shared<const SeqDerivation>(tail);
  SeqDerivation wrong = slt::g_right(std::move(bad), IndexExpr(0), P());
  EXPECT_FALSE(check_slt(wrong).ok());
}

TEST(WeakenLeft, SingleInitNode) {
  SeqDerivation d = slt::init(IndexExpr(0), "p", {});
  SeqDerivation w = weaken_left(d, Q());
  EXPECT_TRUE(check_slt(w).ok());
  EXPECT_EQ(w.rule(), SeqRule::Init);
  EXPECT_EQ(w.conclusion().antecedent, (FormulaSet{P(), Q()}));
  EXPECT_EQ(w.node_count(), d.node_count());
}

TEST(WeakenLeft, ExMiddleProofKeepsShapeAndHeight) {
  SeqDerivation d = testing::golden_exmid_slt();
  SeqDerivation w = weaken_left(d, R());
  EXPECT_TRUE(check_slt(w).ok());
  EXPECT_EQ(w.rule(), d.rule());
  EXPECT_EQ(height(w), height(d));
  EXPECT_TRUE(w.conclusion().antecedent.contains(R()));
}

TEST(WeakenLeft, FamilyRewrittenUniformly) {
  SeqDerivation d = derive_identity(Formula::globally(P()), IndexExpr(0), {}, Calculus::Slt);
  SeqDerivation w = weaken_left(d, Q());
  EXPECT_TRUE(check_slt(w).ok());
  for (std::uint64_t n = 0; n <= 8; ++n)
    EXPECT_LE(restricted_height(w, n), restricted_height(d, n));
}

TEST(WeakenLeft, RejectsCut) {
  Rng rng(23);
  SeqDerivation d = testing::gen_slt_with_cuts(rng, 3);
  ASSERT_FALSE(is_cut_free(d));
  EXPECT_THROW(weaken_left(d, Q()), ProofError);
  // The unrestricted variant accepts it.
  SeqDerivation w = weaken_left_any(d, Q());
  EXPECT_TRUE(check_slt(w).ok());
}

TEST(WeakenLeft, HeightNeverIncreasesOnGeneratedCorpus) {
  Rng rng(29);
  for (int n = 0; n < 60; ++n) {
    SeqDerivation d = testing::gen_cutfree_slt(rng, 4);
    ASSERT_TRUE(check_slt(d).ok());
    SeqDerivation w = weaken_left(d, Formula::next(IndexExpr(1), Q()));
    ASSERT_TRUE(check_slt(w).ok());
    for (std::uint64_t j = 0; j <= 8; ++j)
      ASSERT_LE(restricted_height(w, j), restricted_height(d, j));
  }
}

TEST(NegLeftInverse, RecoversTheFormula) {
  // From ~p, p => (empty) to p => p, wrapped in a case split.
  SeqDerivation base = slt::neg_left(slt::init(IndexExpr(0), "p", {}), IndexExpr(0), P());
  ASSERT_TRUE(check_slt(base).ok());
  SeqDerivation d = neg_left_inverse(base, IndexExpr(0), P());
  EXPECT_TRUE(check_slt(d).ok());
  EXPECT_TRUE(is_cut_free(d));
  EXPECT_EQ(d.rule(), SeqRule::ExMiddle);
  EXPECT_EQ(d.conclusion().antecedent, FormulaSet{P()});
  EXPECT_EQ(d.conclusion().succedent, FormulaSet{P()});
}

TEST(NegLeftInverse, PrefixTwo) {
  Formula xxq = Formula::next(IndexExpr(2), Q());
  SeqDerivation base =
      slt::neg_left(derive_identity(Q(), IndexExpr(2), {}, Calculus::Slt), IndexExpr(2), Q());
  // base: X^2 ~q, X^2 q => ; strip the extra context by construction
  ASSERT_TRUE(check_slt(base).ok());
  SeqDerivation d = neg_left_inverse(base, IndexExpr(2), Q());
  EXPECT_TRUE(check_slt(d).ok());
  EXPECT_EQ(d.conclusion().succedent, FormulaSet{xxq});
}

TEST(NegLeftInverse, NeverIntroducesCut) {
  Rng rng(31);
  for (int n = 0; n < 100; ++n) {
    SeqDerivation d = testing::gen_cutfree_slt(rng, 3);
    if (!d.conclusion().succedent.empty()) {
      PrefixedFormula pf = strip_x(d.conclusion().succedent.front());
      d = slt::neg_left(d, pf.prefix, pf.core);
    }
    Formula negated = Formula::neg(Q());
    d = weaken_left(d, negated);
    SeqDerivation inverse = neg_left_inverse(d, IndexExpr(0), Q());
    ASSERT_TRUE(is_cut_free(inverse));
    ASSERT_TRUE(check_slt(inverse).ok());
  }
}

TEST(NegLeftInverse, ShapeMismatchThrows) {
  SeqDerivation d = slt::init(IndexExpr(0), "p", {});
  EXPECT_THROW(neg_left_inverse(d, IndexExpr(0), P()), ProofError);
}

TEST(InstantiateSchema, TailInstanceRechecksConcretely) {
  SeqDerivation d = derive_identity(Formula::globally(P()), IndexExpr(0), {}, Calculus::Slt);
  const SeqFamily& fam = d.family();
  SeqDerivation instance = family_member_at(fam, IndexExpr(3));
  EXPECT_TRUE(check_slt(instance).ok());
  EXPECT_TRUE(instance.free_index_vars().empty());
  EXPECT_EQ(instance.conclusion().succedent,
            FormulaSet{Formula::next(IndexExpr(3), P())});
}

TEST(InstantiateSchema, NoOccurrenceIsIdentity) {
  SeqDerivation d = slt::init(IndexExpr(0), "p", {});
  SeqDerivation out = instantiate_schema(d, "j", 0);
  EXPECT_EQ(print_seq_derivation(out), print_seq_derivation(d));
}

TEST(InstantiateSchema, BoundVariableThrows) {
  SeqDerivation d = derive_identity(Formula::globally(P()), IndexExpr(0), {}, Calculus::Slt);
  const std::string var = d.family().var;
  EXPECT_THROW(instantiate_schema(d, var, 2), ProofError);
}

TEST(InstantiateSchema, VarFreeDerivationUnchangedAfterNoop) {
  SeqDerivation d = derive_identity(Formula::imp(P(), Q()), IndexExpr(1), {}, Calculus::Slt);
  ASSERT_TRUE(d.free_index_vars().empty());
  // Substituting into a template then instantiating at 0 equals the
  // rule-required zeroth premise.
  SeqDerivation g = derive_identity(Formula::globally(P()), IndexExpr(0), {}, Calculus::Slt);
  SeqDerivation member0 = family_member_at(g.family(), IndexExpr(0));
  Formula want = Formula::next(IndexExpr(0), P());
  EXPECT_EQ(member0.conclusion().succedent, FormulaSet{want});
}

TEST(InstantiateSchema, CommutesWithWeakenLeft) {
  SeqDerivation d = derive_identity(Formula::globally(P()), IndexExpr(0), FormulaSet{Q()},
                                    Calculus::Slt);
  SeqDerivation tail = *d.family().tail;
  Formula extra = Formula::next(IndexExpr(1), R());
  SeqDerivation a = weaken_left(tail, extra).substitute_index(d.family().var, IndexExpr(4));
  SeqDerivation b = weaken_left(tail.substitute_index(d.family().var, IndexExpr(4)), extra);
  EXPECT_EQ(print_seq_derivation(a), print_seq_derivation(b));
  EXPECT_TRUE(check_slt(a).ok());
  EXPECT_TRUE(check_slt(b).ok());
}

TEST(InstantiateSchema, EverySymbolicTailChecksConcretelyAtSmallInstances) {
  // Symbolic acceptance of a family tail must imply concrete acceptance of
  // each instance.
  Rng rng(139);
  std::function<void(const SeqDerivation&)> visit = [&](const SeqDerivation& d) {
    if (d.has_family()) {
      for (std::uint64_t j = 0; j <= 5; ++j) {
        SeqDerivation inst = family_member_at(d.family(), IndexExpr(j));
        CheckReport report = check_slt(inst);
        ASSERT_TRUE(report.ok()) << "instance " << j << "\n" << report.str();
      }
      visit(*d.family().tail);
      for (const auto& m : d.family().explicit_members) visit(m);
    }
    for (const auto& p : d.premises()) visit(p);
  };
  for (int n = 0; n < 40; ++n) {
    SeqDerivation d = testing::gen_cutfree_slt(rng, 4);
    ASSERT_TRUE(check_slt(d).ok());
    visit(d);
  }
}

TEST(Height, DefinitionCases) {
  SeqDerivation leaf = slt::init(IndexExpr(0), "p", {});
  EXPECT_EQ(height(leaf), 0u);
  SeqDerivation one = slt::imp_right(
      derive_identity(Q(), IndexExpr(0), FormulaSet{P()}, Calculus::Slt), IndexExpr(0), P(), Q());
  // imp-right over an initial sequent: one edge.
  EXPECT_EQ(height(one), 1u);
}

TEST(Height, SchematicDerivationThrows) {
  SeqDerivation d = derive_identity(Formula::globally(P()), IndexExpr(0), {}, Calculus::Slt);
  EXPECT_THROW(height(d), ProofError);
  EXPECT_EQ(restricted_height(d, 0), 2u);
}

TEST(IsCutFree, TagScan) {
  Rng rng(37);
  SeqDerivation d = testing::gen_cutfree_slt(rng, 3);
  EXPECT_TRUE(is_cut_free(d));
  SeqDerivation with_cut = testing::gen_slt_with_cuts(rng, 3);
  EXPECT_FALSE(is_cut_free(with_cut));
  EXPECT_GE(check_slt(with_cut).cut_count, 1u);
}

TEST(Generators, CutFreeCorporaCheck) {
  Rng rng(41);
  for (int n = 0; n < 80; ++n) {
    SeqDerivation s = testing::gen_cutfree_slt(rng, 4);
    ASSERT_TRUE(check_slt(s).ok()) << check_slt(s).str();
    ASSERT_TRUE(is_cut_free(s));
    SeqDerivation l = testing::gen_cutfree_lt(rng, 4);
    ASSERT_TRUE(check_lt(l).ok()) << check_lt(l).str();
    ASSERT_TRUE(is_cut_free(l));
  }
}

TEST(Generators, CutBearingCorporaCheck) {
  Rng rng(43);
  for (int n = 0; n < 60; ++n) {
    SeqDerivation s = testing::gen_slt_with_cuts(rng, 4);
    ASSERT_TRUE(check_slt(s).ok()) << check_slt(s).str();
    SeqDerivation l = testing::gen_lt_with_cuts(rng, 4);
    ASSERT_TRUE(check_lt(l).ok()) << check_lt(l).str();
  }
}

TEST(Soundness, CutFreeClosedProofsAreValidOnSmallTraces) {
  // Checker-passing closed proofs only ever prove trace-valid formulas.
  SeqDerivation d = testing::golden_exmid_slt();
  ASSERT_TRUE(check_slt(d).ok());
  ASSERT_TRUE(d.conclusion().antecedent.empty());
  EXPECT_TRUE(valid_on_all_traces(d.conclusion().succedent.front(), 4));
}

}  // namespace
}  // namespace proofkit
