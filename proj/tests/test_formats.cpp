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

#include <fstream>
#include <sstream>

#include <gtest/gtest.h>

#include "generators.hpp"
#include "proofkit/errors.hpp"
#include "proofkit/proof_io.hpp"
#include "proofkit/seq_check.hpp"
#include "proofkit/nd_check.hpp"

namespace proofkit {
namespace {

using testing::Rng;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  std::ostringstream buffer;
  buffer << in.rdbuf();
  return buffer.str();
}

TEST(SExpr, ParsePrintRoundTrip) {
  SExpr e = parse_sexpr("(a (b c) ; comment\n d)");
  EXPECT_EQ(e.str(), "(a (b c) d)");
  EXPECT_THROW(parse_sexpr("(a"), SyntaxError);
  EXPECT_THROW(parse_sexpr(")"), SyntaxError);
  EXPECT_THROW(parse_sexpr("a b"), SyntaxError);
}

TEST(FormulaSexpr, RoundTripIncludingSchematicPrefixes) {
  Rng rng(107);
  for (int n = 0; n < 300; ++n) {
    Formula f = testing::gen_formula(rng, 8, {"p", "q"});
    if (n % 3 == 0) f = Formula::next(IndexExpr::var("j") + IndexExpr(n % 4), f);
    SExpr e = formula_to_sexpr(f);
    EXPECT_EQ(formula_from_sexpr(parse_sexpr(e.str())), f) << e.str();
  }
}

TEST(FormulaSexpr, RejectsReservedAtoms) {
  EXPECT_THROW(formula_from_sexpr(parse_sexpr("X")), SyntaxError);
  EXPECT_THROW(formula_from_sexpr(parse_sexpr("(X j)")), SyntaxError);
  EXPECT_THROW(formula_from_sexpr(parse_sexpr("(-> p)")), SyntaxError);
}

TEST(SequentSexpr, RoundTrip) {
  Sequent s{FormulaSet{Formula::var("p"), Formula::neg(Formula::var("q"))},
            FormulaSet{Formula::globally(Formula::var("p"))}};
  SExpr e = sequent_to_sexpr(s);
  EXPECT_EQ(sequent_from_sexpr(parse_sexpr(e.str())), s);
  Sequent empty_succ{FormulaSet{Formula::var("p")}, {}};
  EXPECT_EQ(sequent_from_sexpr(parse_sexpr(sequent_to_sexpr(empty_succ).str())), empty_succ);
}

TEST(SeqDerivationFormat, GeneratedCorpusRoundTripsAndRechecks) {
  Rng rng(109);
  for (int n = 0; n < 60; ++n) {
    SeqDerivation d =
        n % 2 ? testing::gen_cutfree_slt(rng, 4) : testing::gen_slt_with_cuts(rng, 3);
    std::string text = print_seq_derivation(d);
    SeqDerivation back = parse_seq_derivation(text);
    CheckReport report = check_slt(back);
    ASSERT_TRUE(report.ok()) << report.str() << "\n" << text;
    ASSERT_EQ(back.conclusion(), d.conclusion());
    ASSERT_EQ(back.cut_count(), d.cut_count());
    // Printing is canonical, so a second round trip is exact.
    ASSERT_EQ(print_seq_derivation(back), text);
  }
}

TEST(SeqDerivationFormat, LtCorpusRoundTrips) {
  Rng rng(113);
  for (int n = 0; n < 60; ++n) {
    SeqDerivation d =
        n % 2 ? testing::gen_cutfree_lt(rng, 4) : testing::gen_lt_with_cuts(rng, 3);
    std::string text = print_seq_derivation(d);
    SeqDerivation back = parse_seq_derivation(text);
    CheckReport report = check_lt(back);
    ASSERT_TRUE(report.ok()) << report.str();
    ASSERT_EQ(back.conclusion(), d.conclusion());
    ASSERT_EQ(print_seq_derivation(back), text);
  }
}

TEST(NdDerivationFormat, GeneratedCorpusRoundTripsAndRechecks) {
  Rng rng(127);
  for (int n = 0; n < 60; ++n) {
    NdDerivation d = testing::gen_nd(rng, 4);
    std::string text = print_nd_derivation(d);
    NdDerivation back = parse_nd_derivation(text);
    CheckReport report = check_nd(back);
    ASSERT_TRUE(report.ok()) << report.str() << "\n" << text;
    ASSERT_EQ(end_formula(back), end_formula(d));
    ASSERT_EQ(open_assumptions(back), open_assumptions(d));
    ASSERT_EQ(print_nd_derivation(back), text);
  }
}

TEST(NdDerivationFormat, DischargeBlockIsValidated) {
  // imp-i must declare exactly one discharge.
  EXPECT_THROW(parse_nd_derivation("(nd imp-i (:params (:i 0) (:a p) (:b p))"
                                   " (:conclusion (-> p p)) (:premises (hyp 0 p)))"),
               SyntaxError);
}

TEST(GoldenFiles, ParseAndCheck) {
  const std::string dir = PROOFKIT_GOLDEN_DIR;
  for (const char* name : {"imp_dneg.nd", "dneg_imp.nd", "exmid.nd", "exfalso.nd", "g_shift.nd",
                           "x_f.nd", "g_and.nd", "detour1.nd"}) {
    NdDerivation d = parse_nd_derivation(slurp(dir + "/" + name));
    CheckReport report = check_nd(d);
    EXPECT_TRUE(report.ok()) << name << "\n" << report.str();
  }
  SeqDerivation exmid = parse_seq_derivation(slurp(dir + "/exmid.slt"));
  EXPECT_TRUE(check_slt(exmid).ok());
  SeqDerivation gid = parse_seq_derivation(slurp(dir + "/g_identity.lt"));
  EXPECT_TRUE(check_lt(gid).ok());
  SeqDerivation malformed = parse_seq_derivation(slurp(dir + "/malformed.slt"));
  EXPECT_FALSE(check_slt(malformed).ok());
}

TEST(GoldenFiles, MatchTheProgrammaticProofs) {
  const std::string dir = PROOFKIT_GOLDEN_DIR;
  NdDerivation from_file = parse_nd_derivation(slurp(dir + "/imp_dneg.nd"));
  EXPECT_TRUE(from_file.structurally_equal(testing::golden_imp_dneg()));
  NdDerivation dneg = parse_nd_derivation(slurp(dir + "/dneg_imp.nd"));
  EXPECT_TRUE(dneg.structurally_equal(testing::golden_dneg_imp()));
}

}  // namespace
}  // namespace proofkit
