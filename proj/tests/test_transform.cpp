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

#include <gtest/gtest.h>

#include "generators.hpp"
#include "proofkit/errors.hpp"
#include "proofkit/nd_check.hpp"
#include "proofkit/reduce.hpp"
#include "proofkit/seq_build.hpp"
#include "proofkit/seq_check.hpp"
#include "proofkit/trace.hpp"

namespace proofkit {
namespace {

using testing::Rng;

Formula P() { return Formula::var("p"); }
Formula Q() { return Formula::var("q"); }

TEST(NltToSlt, AssumptionLeafBecomesIdentity) {
  SeqDerivation d = nlt_to_slt(NdDerivation::hyp(P(), 0));
  EXPECT_TRUE(check_slt(d).ok());
  EXPECT_EQ(d.conclusion().antecedent, FormulaSet{P()});
  EXPECT_EQ(d.conclusion().succedent, FormulaSet{P()});
}

TEST(NltToSlt, GoldenProofsTranslate) {
  for (const NdDerivation& nd_proof : testing::golden_nd_proofs()) {
    SeqDerivation d = nlt_to_slt(nd_proof);
    CheckReport report = check_slt(d);
    ASSERT_TRUE(report.ok()) << report.str();
    EXPECT_EQ(d.conclusion().antecedent, open_assumptions(nd_proof));
    EXPECT_EQ(d.conclusion().succedent, FormulaSet{end_formula(nd_proof)});
  }
}

TEST(NltToSlt, ExmTranslatesToCaseSplit) {
  SeqDerivation d = nlt_to_slt(testing::golden_exmid_nd());
  ASSERT_TRUE(check_slt(d).ok());
  EXPECT_EQ(d.rule(), SeqRule::ExMiddle);
  EXPECT_TRUE(d.conclusion().antecedent.empty());
  EXPECT_EQ(d.conclusion().succedent,
            FormulaSet{Formula::disj(Formula::neg(P()), P())});
}

TEST(NltToSlt, RandomCorpusTranslates) {
  Rng rng(67);
  for (int n = 0; n < 120; ++n) {
    NdDerivation nd_d = testing::gen_nd(rng, 3);
    ASSERT_TRUE(check_nd(nd_d).ok());
    SeqDerivation d = nlt_to_slt(nd_d);
    CheckReport report = check_slt(d);
    ASSERT_TRUE(report.ok()) << report.str();
    ASSERT_EQ(d.conclusion().antecedent, open_assumptions(nd_d));
    ASSERT_EQ(d.conclusion().succedent, FormulaSet{end_formula(nd_d)});
  }
}

TEST(NltToSlt, ExplicitFamilyMembersWithNonzeroExponent) {
  // f-e with one explicit member and a prefixed eventuality; the member's
  // discharged assumption has exponent 1+0, the tail's 1+j.
  Formula a = P();
  IndexExpr one(1);
  std::int64_t l = 5;
  NdDerivation member0 =
      nd::f_i(NdDerivation::hyp(Formula::next(one, a), l), one, IndexExpr(0), a);
  NdDerivation tail = nd::f_i(
      NdDerivation::hyp(Formula::next(one + IndexExpr::var("j"), a), l), one,
      IndexExpr::var("j"), a);
  NdFamily fam;
  fam.var = "j";
  fam.explicit_members.push_back(std::move(member0));
  fam.tail = std::make_shared<const NdDerivation>(std::move(tail));
  NdDerivation major = NdDerivation::hyp(Formula::next(one, Formula::eventually(a)), 9);
  NdDerivation d = nd::f_e(std::move(major), std::move(fam), one, a, l);
  ASSERT_TRUE(check_nd(d).ok()) << check_nd(d).str();
  SeqDerivation out = nlt_to_slt(d);
  CheckReport report = check_slt(out);
  ASSERT_TRUE(report.ok()) << report.str();
  EXPECT_EQ(out.conclusion().antecedent, open_assumptions(d));
  EXPECT_EQ(out.conclusion().succedent, FormulaSet{end_formula(d)});
}

TEST(SltToNd, InitialBecomesAssumption) {
  SeqDerivation d = slt::init(IndexExpr(1), "p", FormulaSet{Q()});
  NdDerivation out = slt_cutfree_to_nd_normal(d);
  EXPECT_TRUE(check_nd(out).ok());
  EXPECT_TRUE(out.is_hyp());
  EXPECT_EQ(end_formula(out), Formula::next(P()));
  EXPECT_TRUE(open_assumptions(out).subset_of(d.conclusion().antecedent));
}

TEST(SltToNd, NegLeftBecomesExplosion) {
  SeqDerivation d = slt::neg_left(slt::init(IndexExpr(0), "p", {}), IndexExpr(0), P());
  NdDerivation out = slt_cutfree_to_nd_normal(d);
  ASSERT_TRUE(check_nd(out).ok()) << check_nd(out).str();
  EXPECT_EQ(out.rule(), NdRule::Exp);
  EXPECT_EQ(end_formula(out), parse_formula("~p /\\ p"));
  EXPECT_EQ(open_assumptions(out), (FormulaSet{Formula::neg(P()), P()}));
  EXPECT_TRUE(is_normal(out));
}

TEST(SltToNd, ExMiddleBecomesCaseSplit) {
  NdDerivation out = slt_cutfree_to_nd_normal(testing::golden_exmid_slt());
  ASSERT_TRUE(check_nd(out).ok()) << check_nd(out).str();
  EXPECT_EQ(out.rule(), NdRule::Exm);
  EXPECT_TRUE(is_normal(out));
  EXPECT_TRUE(open_assumptions(out).empty());
  EXPECT_EQ(end_formula(out), Formula::disj(Formula::neg(P()), P()));
}

TEST(SltToNd, WeakeningAfterEmptySuccedentStaysNormal) {
  // ~p, p => (empty) then we-right to q: the explosion is re-targeted, not
  // projected, so no maximum formula appears.
  SeqDerivation d = slt::neg_left(slt::init(IndexExpr(0), "p", {}), IndexExpr(0), P());
  d = slt::we_right(d, Q());
  NdDerivation out = slt_cutfree_to_nd_normal(d);
  ASSERT_TRUE(check_nd(out).ok()) << check_nd(out).str();
  EXPECT_TRUE(is_normal(out));
  EXPECT_EQ(end_formula(out), Q());
}

TEST(SltToNd, CaseSplitUnderWeakeningStaysNormal) {
  // Gamma => (empty) by a case split, then we-right: the consumer is pushed
  // into the branches.
  SeqDerivation boom = slt::neg_left(slt::init(IndexExpr(0), "p", {}), IndexExpr(0), P());
  SeqDerivation left = weaken_left(boom, Formula::neg(Q()));
  SeqDerivation right = weaken_left(boom, Q());
  SeqDerivation split = slt::ex_middle(std::move(left), std::move(right), IndexExpr(0), Q());
  SeqDerivation d = slt::we_right(split, Formula::globally(P()));
  ASSERT_TRUE(check_slt(d).ok());
  NdDerivation out = slt_cutfree_to_nd_normal(d);
  ASSERT_TRUE(check_nd(out).ok()) << check_nd(out).str();
  EXPECT_TRUE(is_normal(out));
  EXPECT_EQ(end_formula(out), Formula::globally(P()));
}

TEST(SltToNd, RandomCutFreeCorpus) {
  Rng rng(71);
  for (int n = 0; n < 120; ++n) {
    SeqDerivation d = testing::gen_cutfree_slt(rng, 4);
    ASSERT_TRUE(check_slt(d).ok());
    NdDerivation out = slt_cutfree_to_nd_normal(d);
    ASSERT_TRUE(check_nd(out).ok()) << check_nd(out).str();
    ASSERT_TRUE(is_normal(out)) << "not normal at case " << n;
    ASSERT_TRUE(open_assumptions(out).subset_of(d.conclusion().antecedent));
    Formula want = d.conclusion().succedent.empty() ? parse_formula("~p /\\ p")
                                                    : d.conclusion().succedent.front();
    ASSERT_EQ(end_formula(out), want);
  }
}

TEST(SltToNd, RejectsCuts) {
  Rng rng(73);
  SeqDerivation d = testing::gen_slt_with_cuts(rng, 3);
  EXPECT_THROW(slt_cutfree_to_nd_normal(d), ProofError);
}

TEST(NltToSlt, PropagatesCheckerFailure) {
  // imp-e with mismatched exponents fails check_nd; the translation refuses.
  NdParams params;
  params.i = IndexExpr(1);
  params.a = P();
  params.b = Q();
  NdDerivation bad = NdDerivation::make(
      Formula::next(Q()), NdRule::ImpE, params,
      {NdDerivation::hyp(Formula::next(Formula::imp(P(), Q())), 0), NdDerivation::hyp(P(), 1)});
  EXPECT_THROW(nlt_to_slt(bad), ProofError);
}

TEST(SltToNd, ContradictionVariableIsConfigurable) {
  // An empty succedent reads as the designated contradiction of the chosen
  // variable.
  SeqDerivation d = slt::neg_left(slt::init(IndexExpr(0), "p", {}), IndexExpr(0), P());
  Contradiction bottom{"r"};
  NdDerivation out = slt_cutfree_to_nd_normal(d, bottom);
  ASSERT_TRUE(check_nd(out).ok()) << check_nd(out).str();
  EXPECT_TRUE(is_normal(out));
  EXPECT_EQ(end_formula(out), parse_formula("~r /\\ r"));
}
TEST(LtToSlt, RejectsCuts) {
  Rng rng(131);
  SeqDerivation d = testing::gen_lt_with_cuts(rng, 3);
  EXPECT_THROW(lt_cutfree_to_slt_cutfree(d), ProofError);
}

TEST(LtToSlt, InitialCase) {
  SeqDerivation d = lt::init(IndexExpr(1), "p");
  SeqDerivation out = lt_cutfree_to_slt_cutfree(d);
  ASSERT_TRUE(check_slt(out).ok()) << check_slt(out).str();
  EXPECT_TRUE(is_cut_free(out));
  Formula xp = Formula::next(P());
  EXPECT_EQ(out.conclusion().antecedent, (FormulaSet{Formula::neg(xp), xp}));
  EXPECT_TRUE(out.conclusion().succedent.empty());
}

TEST(LtToSlt, OrRightFollowsTheSixStepConstruction) {
  // p => p, q then or-right to p => p \/ q.
  SeqDerivation p1 = lt::we_right(lt::init(IndexExpr(0), "p"), Q());
  SeqDerivation d = lt::or_right(p1, IndexExpr(0), P(), Q());
  ASSERT_TRUE(check_lt(d).ok());
  SeqDerivation out = lt_cutfree_to_slt_cutfree(d);
  ASSERT_TRUE(check_slt(out).ok()) << check_slt(out).str();
  EXPECT_TRUE(is_cut_free(out));
  // Conclusion: ~(p \/ q), p => (empty).
  EXPECT_EQ(out.conclusion().antecedent,
            (FormulaSet{Formula::neg(Formula::disj(P(), Q())), P()}));
  EXPECT_TRUE(out.conclusion().succedent.empty());
  // The displayed construction: inner or-right1 and or-right2 on the way.
  EXPECT_EQ(out.rule(), SeqRule::NegLeft);
  EXPECT_EQ(out.premises()[0].rule(), SeqRule::OrRight2);
}

TEST(LtToSlt, GloballyFamilyTranslates) {
  // G q on the right via a family of weakened members over ~p, p => .
  SeqDerivation core = lt::neg_left(lt::init(IndexExpr(0), "p"), IndexExpr(0), P());
  SeqDerivation tail =
      lt::we_right(core, Formula::next(IndexExpr::var("j"), Q()));
  SeqDerivation d = lt::g_right(tail_family("j", std::move(tail)), IndexExpr(0), Q());
  ASSERT_TRUE(check_lt(d).ok()) << check_lt(d).str();
  SeqDerivation out = lt_cutfree_to_slt_cutfree(d);
  ASSERT_TRUE(check_slt(out).ok()) << check_slt(out).str();
  EXPECT_TRUE(is_cut_free(out));
  EXPECT_TRUE(out.conclusion().antecedent.contains(Formula::neg(Formula::globally(Q()))));
}

TEST(LtToSlt, RandomCorpus) {
  Rng rng(79);
  for (int n = 0; n < 100; ++n) {
    SeqDerivation d = testing::gen_cutfree_lt(rng, 4);
    ASSERT_TRUE(check_lt(d).ok());
    SeqDerivation out = lt_cutfree_to_slt_cutfree(d);
    ASSERT_TRUE(check_slt(out).ok()) << check_slt(out).str();
    ASSERT_TRUE(is_cut_free(out));
    FormulaSet want = d.conclusion().antecedent;
    for (const Formula& f : d.conclusion().succedent) want = want.with(Formula::neg(f));
    ASSERT_EQ(out.conclusion().antecedent, want);
    ASSERT_TRUE(out.conclusion().succedent.empty());
  }
}

TEST(SltToLt, InitialGainsWeakening) {
  SeqDerivation d = slt::init(IndexExpr(1), "p", FormulaSet{Q()});
  SeqDerivation out = slt_to_lt(d);
  ASSERT_TRUE(check_lt(out).ok()) << check_lt(out).str();
  EXPECT_EQ(out.conclusion(), d.conclusion());
  EXPECT_EQ(out.rule(), SeqRule::WeLeft);
}

TEST(SltToLt, ExMiddleBecomesTwoCuts) {
  SeqDerivation d = testing::golden_exmid_slt();
  SeqDerivation out = slt_to_lt(d);
  ASSERT_TRUE(check_lt(out).ok()) << check_lt(out).str();
  EXPECT_EQ(out.conclusion(), d.conclusion());
  EXPECT_EQ(check_lt(out).cut_count, 2u);
}

TEST(SltToLt, CutMapsDirectly) {
  Rng rng(83);
  SeqDerivation d = testing::gen_slt_with_cuts(rng, 3);
  SeqDerivation out = slt_to_lt(d);
  ASSERT_TRUE(check_lt(out).ok()) << check_lt(out).str();
  EXPECT_EQ(out.conclusion(), d.conclusion());
  EXPECT_GE(check_lt(out).cut_count, 1u);
}

TEST(SltToLt, RandomCorpusSameEndSequent) {
  Rng rng(89);
  for (int n = 0; n < 100; ++n) {
    SeqDerivation d = n % 2 ? testing::gen_slt_with_cuts(rng, 4)
                            : testing::gen_cutfree_slt(rng, 4);
    ASSERT_TRUE(check_slt(d).ok());
    SeqDerivation out = slt_to_lt(d);
    ASSERT_TRUE(check_lt(out).ok()) << check_lt(out).str();
    ASSERT_EQ(out.conclusion(), d.conclusion());
  }
}

TEST(CutEliminateLt, AxiomCutErases) {
  SeqDerivation left = lt::init(IndexExpr(0), "p");
  SeqDerivation right = lt::init(IndexExpr(0), "p");
  SeqDerivation d = lt::cut(left, right, P());
  ASSERT_TRUE(check_lt(d).ok());
  SeqDerivation out = cut_eliminate_lt(d);
  EXPECT_TRUE(is_cut_free(out));
  EXPECT_TRUE(check_lt(out).ok());
  EXPECT_EQ(out.conclusion(), d.conclusion());
}

TEST(CutEliminateLt, PrincipalGloballyCutInstantiatesTheFamily) {
  // Cut on G p between g-right(family) and g-left(k = 2).
  SeqDerivation core = lt::neg_left(lt::init(IndexExpr(0), "p"), IndexExpr(0), P());
  SeqDerivation tail = lt::we_right(core, Formula::next(IndexExpr::var("j"), P()));
  SeqDerivation left = lt::g_right(tail_family("j", std::move(tail)), IndexExpr(0), P());
  SeqDerivation right = lt::g_left(
      lt::we_left(lt::init(IndexExpr(2), "p"), Formula::neg(P())), IndexExpr(0), IndexExpr(2),
      P());
  SeqDerivation d = lt::cut(left, right, Formula::globally(P()));
  ASSERT_TRUE(check_lt(d).ok()) << check_lt(d).str();
  SeqDerivation out = cut_eliminate_lt(d);
  EXPECT_TRUE(is_cut_free(out));
  CheckReport report = check_lt(out);
  EXPECT_TRUE(report.ok()) << report.str();
  EXPECT_EQ(out.conclusion(), d.conclusion());
}

TEST(CutEliminateLt, GeneratedCorpusPreservesEndSequent) {
  Rng rng(97);
  for (int n = 0; n < 200; ++n) {
    SeqDerivation d = testing::gen_lt_with_cuts(rng, 4);
    ASSERT_TRUE(check_lt(d).ok());
    SeqDerivation out = cut_eliminate_lt(d, 100000);
    ASSERT_TRUE(is_cut_free(out));
    CheckReport report = check_lt(out);
    ASSERT_TRUE(report.ok()) << report.str();
    ASSERT_EQ(out.conclusion(), d.conclusion());
  }
}

TEST(CutEliminateLt, FuelExhaustionThrows) {
  Rng rng(101);
  SeqDerivation d = testing::gen_lt_with_cuts(rng, 4);
  ASSERT_FALSE(is_cut_free(d));
  EXPECT_THROW(cut_eliminate_lt(d, 0), FuelExhausted);
}

TEST(CutEliminateSlt, TranslatedGoldenProofsLoseTheirCuts) {
  for (const NdDerivation& nd_proof : testing::golden_nd_proofs()) {
    SeqDerivation with_cuts = nlt_to_slt(nd_proof);
    SeqDerivation out = cut_eliminate_slt(with_cuts);
    ASSERT_TRUE(is_cut_free(out));
    CheckReport report = check_slt(out);
    ASSERT_TRUE(report.ok()) << report.str();
    ASSERT_EQ(out.conclusion(), with_cuts.conclusion());
  }
}

TEST(CutEliminateSlt, InjectedCutOnExcludedMiddle) {
  SeqDerivation d = testing::golden_exmid_slt();
  Formula goal = d.conclusion().succedent.front();
  PrefixedFormula pf = strip_x(goal);
  SeqDerivation id = derive_identity(pf.core, pf.prefix, {}, Calculus::Slt);
  SeqDerivation with_cut = slt::cut(d, id, goal);
  ASSERT_TRUE(check_slt(with_cut).ok());
  ASSERT_FALSE(is_cut_free(with_cut));
  SeqDerivation out = cut_eliminate_slt(with_cut);
  EXPECT_TRUE(is_cut_free(out));
  EXPECT_TRUE(check_slt(out).ok());
  EXPECT_EQ(out.conclusion(), with_cut.conclusion());
}

TEST(CutEliminateSlt, CutFreeInputKeepsEndSequent) {
  Rng rng(103);
  SeqDerivation d = testing::gen_cutfree_slt(rng, 3);
  SeqDerivation out = cut_eliminate_slt(d);
  EXPECT_TRUE(is_cut_free(out));
  EXPECT_TRUE(check_slt(out).ok());
  EXPECT_EQ(out.conclusion(), d.conclusion());
}

TEST(NormalizeIndirect, NormalInputStaysNormalWithSameEnd) {
  NdDerivation d = testing::golden_imp_dneg();
  NdDerivation out = normalize_indirect(d);
  EXPECT_TRUE(check_nd(out).ok());
  EXPECT_TRUE(is_normal(out));
  EXPECT_EQ(end_formula(out), end_formula(d));
  EXPECT_TRUE(open_assumptions(out).subset_of(open_assumptions(d)));
}

TEST(NormalizeIndirect, InjectedDetourIsRemoved) {
  NdDerivation d =
      testing::inject_detour(testing::golden_imp_dneg(), testing::Detour::And);
  ASSERT_FALSE(is_normal(d));
  NdDerivation out = normalize_indirect(d);
  ASSERT_TRUE(check_nd(out).ok()) << check_nd(out).str();
  EXPECT_TRUE(is_normal(out));
  EXPECT_EQ(end_formula(out), parse_formula("p -> ~~p"));
  EXPECT_TRUE(open_assumptions(out).empty());
}

TEST(NormalizeIndirect, ExmProofStaysClosed) {
  NdDerivation out = normalize_indirect(testing::golden_exmid_nd());
  EXPECT_TRUE(is_normal(out));
  EXPECT_TRUE(open_assumptions(out).empty());
  EXPECT_EQ(end_formula(out), Formula::disj(Formula::neg(P()), P()));
}

TEST(Equivalence, ProvabilityTransfersBothWays) {
  // Single-succedent proof of => a gives a multi-succedent proof of => a;
  // a cut-free multi-succedent proof of => a comes back via the negation
  // translation plus the inverse of negation-left.
  std::vector<SeqDerivation> proofs = {testing::golden_exmid_slt()};
  for (const NdDerivation& g : testing::golden_nd_proofs()) proofs.push_back(nlt_to_slt(g));
  for (const SeqDerivation& slt_proof : proofs) {
    ASSERT_TRUE(slt_proof.conclusion().antecedent.empty());
    SeqDerivation lt_proof = slt_to_lt(slt_proof);
    ASSERT_TRUE(check_lt(lt_proof).ok());
    ASSERT_EQ(lt_proof.conclusion(), slt_proof.conclusion());

    SeqDerivation lt_cutfree = cut_eliminate_lt(lt_proof);
    ASSERT_TRUE(is_cut_free(lt_cutfree));
    SeqDerivation negated = lt_cutfree_to_slt_cutfree(lt_cutfree);
    Formula goal = slt_proof.conclusion().succedent.front();
    SeqDerivation back = neg_left_inverse(negated, IndexExpr(0), goal);
    ASSERT_TRUE(check_slt(back).ok()) << check_slt(back).str();
    ASSERT_TRUE(is_cut_free(back));
    ASSERT_EQ(back.conclusion(), slt_proof.conclusion());
  }
}

TEST(Soundness, PipelineProofsAreTraceValid) {
  for (const NdDerivation& nd_proof : testing::golden_nd_proofs()) {
    NdDerivation normalized = normalize_indirect(nd_proof);
    ASSERT_TRUE(open_assumptions(normalized).empty());
    EXPECT_TRUE(valid_on_all_traces(end_formula(normalized), 4))
        << print_formula(end_formula(normalized));
  }
}

}  // namespace
}  // namespace proofkit
