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

// Acceptance suite. Each test covers one acceptance criterion end to end and
// prints a single PASS/FAIL line with its runtime.

#include <chrono>
#include <iostream>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "proofkit/errors.hpp"
#include "proofkit/nd_check.hpp"
#include "proofkit/proof_io.hpp"
#include "proofkit/reduce.hpp"
#include "proofkit/seq_build.hpp"
#include "proofkit/seq_check.hpp"
#include "proofkit/trace.hpp"

namespace proofkit {
namespace {

using testing::Detour;
using testing::Rng;

class Criterion {
 public:
  Criterion(int number, std::string label, double budget_seconds)
      : number_(number), label_(std::move(label)), budget_(budget_seconds) {
    start_ = std::chrono::steady_clock::now();
  }

  ~Criterion() {
    double elapsed =
        std::chrono::duration<double>(std::chrono::steady_clock::now() - start_).count();
    bool pass = !::testing::Test::HasFailure() && elapsed <= budget_;
    if (elapsed > budget_)
      ADD_FAILURE() << "criterion " << number_ << " exceeded its " << budget_
                    << "s budget: " << elapsed << "s";
    std::cout << "criterion " << number_ << " (" << label_ << "): "
              << (pass ? "PASS" : "FAIL") << " [" << elapsed << "s]" << std::endl;
  }

 private:
  int number_;
  std::string label_;
  double budget_;
  std::chrono::steady_clock::time_point start_;
};

// The corpus of detoured golden proofs shared by criteria 6 and 7:
// every golden proof with each single detour kind, plus seeded two- and
// three-detour combinations.
std::vector<NdDerivation> detour_corpus() {
  std::vector<NdDerivation> corpus;
  Rng rng(2026);
  for (const NdDerivation& g : testing::golden_nd_proofs()) {
    for (Detour kind : {Detour::Imp, Detour::And, Detour::Or, Detour::G, Detour::F})
      corpus.push_back(testing::inject_detour(g, kind));
    corpus.push_back(testing::inject_random_detours(rng, g, 2));
    corpus.push_back(testing::inject_random_detours(rng, g, 3));
  }
  return corpus;
}

TEST(Acceptance, Criterion1GoldenProofs) {
  Criterion c(1, "golden proofs check and are normal", 1.0);
  for (NdDerivation d : {testing::golden_imp_dneg(), testing::golden_dneg_imp()}) {
    CheckReport report = check_nd(d);
    EXPECT_TRUE(report.ok()) << report.str();
    EXPECT_TRUE(is_normal(d));
    EXPECT_TRUE(open_assumptions(d).empty());
  }
  SeqDerivation exmid = testing::golden_exmid_slt();
  CheckReport report = check_slt(exmid);
  EXPECT_TRUE(report.ok()) << report.str();
  EXPECT_EQ(exmid.rule(), SeqRule::ExMiddle);
  EXPECT_TRUE(exmid.conclusion().antecedent.empty());
  EXPECT_EQ(exmid.conclusion().succedent, FormulaSet{parse_formula("~p \\/ p")});
}

TEST(Acceptance, Criterion2IdentityDerivations) {
  Criterion c(2, "identity derivations over all formulas of size <= 7", 30.0);
  const std::vector<Formula> formulas = testing::all_formulas(7, {"p", "q"});
  ASSERT_GT(formulas.size(), 1000u);
  const FormulaSet empty_ctx;
  const FormulaSet r_ctx{Formula::var("r")};
  std::size_t built = 0;
  for (const Formula& f : formulas) {
    for (std::uint64_t i = 0; i <= 2; ++i) {
      for (const FormulaSet* ctx : {&empty_ctx, &r_ctx}) {
        SeqDerivation d = derive_identity(f, IndexExpr(i), *ctx, Calculus::Slt);
        CheckReport report = check_slt(d);
        ASSERT_TRUE(report.ok()) << print_formula(f) << "\n" << report.str();
        ASSERT_TRUE(is_cut_free(d));
        Formula shown = Formula::next(IndexExpr(i), f);
        ASSERT_EQ(d.conclusion().antecedent, ctx->with(shown));
        ASSERT_EQ(d.conclusion().succedent, FormulaSet{shown});
        ++built;
      }
    }
  }
  // The multi-succedent construction, exhaustively one size down.
  for (const Formula& f : testing::all_formulas(6, {"p", "q"})) {
    for (std::uint64_t i = 0; i <= 2; ++i) {
      for (const FormulaSet* ctx : {&empty_ctx, &r_ctx}) {
        SeqDerivation d = derive_identity(f, IndexExpr(i), *ctx, Calculus::Lt);
        CheckReport report = check_lt(d);
        ASSERT_TRUE(report.ok()) << print_formula(f) << "\n" << report.str();
        ASSERT_TRUE(is_cut_free(d));
        Formula shown = Formula::next(IndexExpr(i), f);
        ASSERT_EQ(d.conclusion().antecedent, ctx->with(shown));
        ASSERT_EQ(d.conclusion().succedent, FormulaSet{shown});
        ++built;
      }
    }
  }
  std::cout << "  identity derivations built and checked: " << built << std::endl;
}

TEST(Acceptance, Criterion3WeakeningPreservesHeight) {
  Criterion c(3, "left weakening is height-preserving on 200 derivations", 60.0);
  Rng rng(3001);
  for (int n = 0; n < 200; ++n) {
    SeqDerivation d = testing::gen_cutfree_slt(rng, 4);
    ASSERT_TRUE(check_slt(d).ok());
    Formula extra = Formula::next(IndexExpr(n % 3),
                                  testing::gen_formula(rng, 3, {"p", "q", "r"}));
    SeqDerivation w = weaken_left(d, extra);
    CheckReport report = check_slt(w);
    ASSERT_TRUE(report.ok()) << report.str();
    ASSERT_TRUE(is_cut_free(w));
    ASSERT_TRUE(w.conclusion().antecedent.contains(extra));
    for (std::uint64_t j = 0; j <= 8; ++j)
      ASSERT_LE(restricted_height(w, j), restricted_height(d, j)) << "instance " << j;
  }
}

TEST(Acceptance, Criterion4TranslationRoundTrips) {
  Criterion c(4, "translations between the calculi on 100+100 derivations", 60.0);
  Rng rng(4001);
  for (int n = 0; n < 100; ++n) {
    SeqDerivation d = testing::gen_cutfree_lt(rng, 4);
    ASSERT_TRUE(check_lt(d).ok());
    SeqDerivation out = lt_cutfree_to_slt_cutfree(d);
    CheckReport report = check_slt(out);
    ASSERT_TRUE(report.ok()) << report.str();
    ASSERT_TRUE(is_cut_free(out));
    FormulaSet want = d.conclusion().antecedent;
    for (const Formula& f : d.conclusion().succedent) want = want.with(Formula::neg(f));
    ASSERT_EQ(out.conclusion().antecedent, want);
    ASSERT_TRUE(out.conclusion().succedent.empty());
  }
  for (int n = 0; n < 100; ++n) {
    SeqDerivation d = n % 2 ? testing::gen_slt_with_cuts(rng, 4)
                            : testing::gen_cutfree_slt(rng, 4);
    ASSERT_TRUE(check_slt(d).ok());
    SeqDerivation out = slt_to_lt(d);
    CheckReport report = check_lt(out);
    ASSERT_TRUE(report.ok()) << report.str();
    ASSERT_EQ(out.conclusion(), d.conclusion());
  }
}

TEST(Acceptance, Criterion5CutEliminationPipeline) {
  Criterion c(5, "cut elimination on 50+ cut-bearing derivations at fuel 1e5", 300.0);
  std::vector<SeqDerivation> corpus;
  for (const NdDerivation& g : testing::golden_nd_proofs()) corpus.push_back(nlt_to_slt(g));
  Rng rng(5001);
  while (corpus.size() < 57) corpus.push_back(testing::gen_slt_with_cuts(rng, 4));
  std::size_t with_cuts = 0;
  for (const SeqDerivation& d : corpus) {
    ASSERT_TRUE(check_slt(d).ok());
    if (!is_cut_free(d)) ++with_cuts;
    SeqDerivation out;
    try {
      out = cut_eliminate_slt(d, 100000);
    } catch (const FuelExhausted& e) {
      FAIL() << "fuel exhausted on the acceptance corpus: " << e.what();
    }
    ASSERT_TRUE(is_cut_free(out));
    CheckReport report = check_slt(out);
    ASSERT_TRUE(report.ok()) << report.str();
    ASSERT_EQ(out.conclusion(), d.conclusion());
  }
  EXPECT_GE(with_cuts, 50u);  // the corpus is genuinely cut-bearing
}

TEST(Acceptance, Criterion6IndirectNormalization) {
  Criterion c(6, "indirect normalization of 30+ detoured golden proofs", 60.0);
  std::vector<NdDerivation> corpus = detour_corpus();
  ASSERT_GE(corpus.size(), 30u);
  for (const NdDerivation& d : corpus) {
    ASSERT_TRUE(check_nd(d).ok());
    NdDerivation out = normalize_indirect(d);
    CheckReport report = check_nd(out);
    ASSERT_TRUE(report.ok()) << report.str();
    ASSERT_TRUE(is_normal(out));
    ASSERT_EQ(end_formula(out), end_formula(d));
    ASSERT_TRUE(open_assumptions(out).subset_of(open_assumptions(d)));
  }
}

TEST(Acceptance, Criterion7DirectReduction) {
  Criterion c(7, "direct reduction of the detoured corpus at fuel 1000", 60.0);
  for (const NdDerivation& d : detour_corpus()) {
    ASSERT_TRUE(check_nd(d).ok());
    ReductionTrace trace = reduce_to_normal(d, 1000);
    ASSERT_TRUE(trace.terminated_normal);
    for (const auto& step : trace.steps) {
      ASSERT_EQ(end_formula(step.after), end_formula(d));
      CheckReport report = check_nd(step.after);
      ASSERT_TRUE(report.ok()) << report.str();
    }
    if (!trace.steps.empty()) {
      ASSERT_TRUE(is_normal(trace.steps.back().after));
    }
  }
}

TEST(Acceptance, Criterion8ReductionCaseOracles) {
  Criterion c(8, "detour contractions match their oracles on 50+50 instances", 60.0);
  Rng rng(8001);
  // Conjunction detours: the contraction is exactly the selected conjunct.
  for (int n = 0; n < 50; ++n) {
    NdDerivation base = testing::gen_nd(rng, 2 + n % 2);
    if (!check_nd(base).ok()) continue;
    NdDerivation d = testing::inject_detour(base, Detour::And);
    std::vector<Redex> redexes = find_redexes(d);
    const Redex* conj_redex = nullptr;
    for (const auto& r : redexes)
      if (r.case_id == 7) conj_redex = &r;
    ASSERT_NE(conj_redex, nullptr);
    NdDerivation consumer = nd_subtree_at(d, conj_redex->path);
    NdDerivation expected = consumer.premises()[0].premises()[0];  // first conjunct
    NdDerivation out = reduce_at(d, *conj_redex);
    ASSERT_TRUE(nd_subtree_at(out, conj_redex->path).structurally_equal(expected));
  }
  // Globally detours: the contraction is the family tail at the witness.
  for (int n = 0; n < 50; ++n) {
    Formula a = testing::gen_formula(rng, 3, {"p", "q"});
    std::string var = "j";
    NdDerivation tail = nd::g_e(NdDerivation::hyp(Formula::globally(a), 1), IndexExpr(0),
                                IndexExpr::var(var), a);
    NdDerivation intro = nd::g_i(nd::tail_family(var, tail), IndexExpr(0), a);
    std::uint64_t k = n % 6;
    NdDerivation d = nd::g_e(intro, IndexExpr(0), IndexExpr(k), a);
    ASSERT_TRUE(check_nd(d).ok());
    std::vector<Redex> redexes = find_redexes(d);
    ASSERT_EQ(redexes.size(), 1u);
    ASSERT_EQ(redexes[0].case_id, 10);
    NdDerivation out = reduce_at(d, redexes[0]);
    NdDerivation expected = tail.substitute_index(var, IndexExpr(k));
    ASSERT_TRUE(out.structurally_equal(expected));
  }
}

TEST(Acceptance, Criterion9SoundnessOracle) {
  Criterion c(9, "pipeline-proved formulas hold on all lassos up to 6 states", 120.0);
  const std::vector<std::string> expected_formulas = {
      "p -> ~~p",     "~~(p -> p)", "~p \\/ p",          "(~p /\\ p) -> q",
      "G p -> X X p", "X p -> F p", "G (p /\\ q) -> G p"};
  std::vector<NdDerivation> goldens = testing::golden_nd_proofs();
  ASSERT_EQ(goldens.size(), expected_formulas.size());
  for (std::size_t n = 0; n < goldens.size(); ++n) {
    // The statements under test are proofs produced by the pipelines, not
    // the hand-built inputs: normalize indirectly and eliminate cuts.
    NdDerivation normalized = normalize_indirect(goldens[n]);
    ASSERT_TRUE(open_assumptions(normalized).empty());
    Formula alpha = end_formula(normalized);
    ASSERT_EQ(alpha, parse_formula(expected_formulas[n]));

    SeqDerivation sequent_proof = cut_eliminate_slt(nlt_to_slt(goldens[n]));
    ASSERT_TRUE(sequent_proof.conclusion().antecedent.empty());
    ASSERT_EQ(sequent_proof.conclusion().succedent, FormulaSet{alpha});

    auto witness = find_falsifying_trace(alpha, {"p", "q"}, 6);
    EXPECT_FALSE(witness.has_value())
        << print_formula(alpha) << " fails on " << witness->str();
  }
}

}  // namespace
}  // namespace proofkit
