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

#include "proofkit/nd_build.hpp"

#include "proofkit/errors.hpp"

namespace proofkit {
namespace nd {

namespace {
void need(bool cond, const char* rule, const std::string& detail) {
  if (!cond) throw ProofError(std::string(rule) + ": " + detail);
}
}  // namespace

NdFamily tail_family(const std::string& var, NdDerivation tail) {
  NdFamily fam;
  fam.var = var;
  fam.tail = std::make_shared<const NdDerivation>(std::move(tail));
  return fam;
}

NdDerivation imp_i(NdDerivation body, const IndexExpr& i, const Formula& a, const Formula& b,
                   std::int64_t label) {
  need(body.conclusion() == Formula::next(i, b), "imp-i", "premise must end in the consequent");
  NdParams params;
  params.i = i;
  params.a = a;
  params.b = b;
  params.label = label;
  return NdDerivation::make(Formula::next(i, Formula::imp(a, b)), NdRule::ImpI, std::move(params),
                            {std::move(body)});
}

NdDerivation imp_e(NdDerivation major, NdDerivation minor, const IndexExpr& i, const Formula& a,
                   const Formula& b) {
  need(major.conclusion() == Formula::next(i, Formula::imp(a, b)), "imp-e",
       "major premise must end in the implication");
  need(minor.conclusion() == Formula::next(i, a), "imp-e",
       "minor premise must end in the antecedent");
  NdParams params;
  params.i = i;
  params.a = a;
  params.b = b;
  return NdDerivation::make(Formula::next(i, b), NdRule::ImpE, std::move(params),
                            {std::move(major), std::move(minor)});
}

NdDerivation exp(NdDerivation major, NdDerivation minor, const IndexExpr& i, const Formula& a,
                 Formula conclusion) {
  need(major.conclusion() == Formula::next(i, Formula::neg(a)), "exp",
       "major premise must end in the negation");
  need(minor.conclusion() == Formula::next(i, a), "exp", "minor premise must end in the body");
  NdParams params;
  params.i = i;
  params.a = a;
  return NdDerivation::make(std::move(conclusion), NdRule::Exp, std::move(params),
                            {std::move(major), std::move(minor)});
}

NdDerivation exm(NdDerivation left, NdDerivation right, const IndexExpr& i, const Formula& a,
                 std::int64_t label_neg, std::int64_t label_pos) {
  need(left.conclusion() == right.conclusion(), "exm", "case premises must agree");
  need(label_neg != label_pos, "exm", "case labels must differ");
  NdParams params;
  params.i = i;
  params.a = a;
  params.label = label_neg;
  params.label2 = label_pos;
  Formula conclusion = left.conclusion();
  return NdDerivation::make(std::move(conclusion), NdRule::Exm, std::move(params),
                            {std::move(left), std::move(right)});
}

NdDerivation neg_i(NdDerivation p1, NdDerivation p2, const IndexExpr& i, const Formula& a,
                   const IndexExpr& j, const Formula& g, std::int64_t label) {
  need(p1.conclusion() == Formula::next(j, Formula::neg(g)), "neg-i",
       "first premise must end in the negated side formula");
  need(p2.conclusion() == Formula::next(j, g), "neg-i",
       "second premise must end in the side formula");
  NdParams params;
  params.i = i;
  params.a = a;
  params.j = j;
  params.g = g;
  params.label = label;
  return NdDerivation::make(Formula::next(i, Formula::neg(a)), NdRule::NegI, std::move(params),
                            {std::move(p1), std::move(p2)});
}

NdDerivation and_i(NdDerivation p1, NdDerivation p2, const IndexExpr& i, const Formula& a,
                   const Formula& b) {
  need(p1.conclusion() == Formula::next(i, a), "and-i",
       "first premise must end in the first conjunct");
  need(p2.conclusion() == Formula::next(i, b), "and-i",
       "second premise must end in the second conjunct");
  NdParams params;
  params.i = i;
  params.a = a;
  params.b = b;
  return NdDerivation::make(Formula::next(i, Formula::conj(a, b)), NdRule::AndI,
                            std::move(params), {std::move(p1), std::move(p2)});
}

namespace {
NdDerivation and_e_n(NdDerivation premise, const IndexExpr& i, const Formula& a, const Formula& b,
                     bool first) {
  need(premise.conclusion() == Formula::next(i, Formula::conj(a, b)),
       first ? "and-e1" : "and-e2", "premise must end in the conjunction");
  NdParams params;
  params.i = i;
  params.a = a;
  params.b = b;
  return NdDerivation::make(Formula::next(i, first ? a : b),
                            first ? NdRule::AndE1 : NdRule::AndE2, std::move(params),
                            {std::move(premise)});
}
}  // namespace

NdDerivation and_e1(NdDerivation premise, const IndexExpr& i, const Formula& a, const Formula& b) {
  return and_e_n(std::move(premise), i, a, b, true);
}

NdDerivation and_e2(NdDerivation premise, const IndexExpr& i, const Formula& a, const Formula& b) {
  return and_e_n(std::move(premise), i, a, b, false);
}

NdDerivation or_i1(NdDerivation premise, const IndexExpr& i, const Formula& a, const Formula& b) {
  need(premise.conclusion() == Formula::next(i, a), "or-i1",
       "premise must end in the first disjunct");
  NdParams params;
  params.i = i;
  params.a = a;
  params.b = b;
  return NdDerivation::make(Formula::next(i, Formula::disj(a, b)), NdRule::OrI1,
                            std::move(params), {std::move(premise)});
}

NdDerivation or_i2(NdDerivation premise, const IndexExpr& i, const Formula& a, const Formula& b) {
  need(premise.conclusion() == Formula::next(i, b), "or-i2",
       "premise must end in the second disjunct");
  NdParams params;
  params.i = i;
  params.a = a;
  params.b = b;
  return NdDerivation::make(Formula::next(i, Formula::disj(a, b)), NdRule::OrI2,
                            std::move(params), {std::move(premise)});
}

NdDerivation or_e(NdDerivation major, NdDerivation branch1, NdDerivation branch2,
                  const IndexExpr& i, const Formula& a, const Formula& b, std::int64_t label1,
                  std::int64_t label2) {
  need(major.conclusion() == Formula::next(i, Formula::disj(a, b)), "or-e",
       "major premise must end in the disjunction");
  need(branch1.conclusion() == branch2.conclusion(), "or-e", "branches must agree");
  need(label1 != label2, "or-e", "branch labels must differ");
  NdParams params;
  params.i = i;
  params.a = a;
  params.b = b;
  params.label = label1;
  params.label2 = label2;
  Formula conclusion = branch1.conclusion();
  return NdDerivation::make(std::move(conclusion), NdRule::OrE, std::move(params),
                            {std::move(major), std::move(branch1), std::move(branch2)});
}

NdDerivation g_i(NdFamily family, const IndexExpr& i, const Formula& a) {
  need(family.tail != nullptr, "g-i", "premise family requires a tail");
  need(family.tail->conclusion() == Formula::next(i + IndexExpr::var(family.var), a), "g-i",
       "family tail must end in the shifted body");
  NdParams params;
  params.i = i;
  params.a = a;
  return NdDerivation::make_omega(Formula::next(i, Formula::globally(a)), NdRule::GI,
                                  std::move(params), {}, std::move(family));
}

NdDerivation g_e(NdDerivation premise, const IndexExpr& i, const IndexExpr& k, const Formula& a) {
  need(premise.conclusion() == Formula::next(i, Formula::globally(a)), "g-e",
       "premise must end in the globally formula");
  NdParams params;
  params.i = i;
  params.k = k;
  params.a = a;
  return NdDerivation::make(Formula::next(i + k, a), NdRule::GE, std::move(params),
                            {std::move(premise)});
}

NdDerivation f_i(NdDerivation premise, const IndexExpr& i, const IndexExpr& k, const Formula& a) {
  need(premise.conclusion() == Formula::next(i + k, a), "f-i",
       "premise must end in the shifted body");
  NdParams params;
  params.i = i;
  params.k = k;
  params.a = a;
  return NdDerivation::make(Formula::next(i, Formula::eventually(a)), NdRule::FI,
                            std::move(params), {std::move(premise)});
}

NdDerivation f_e(NdDerivation major, NdFamily family, const IndexExpr& i, const Formula& a,
                 std::int64_t label) {
  need(major.conclusion() == Formula::next(i, Formula::eventually(a)), "f-e",
       "major premise must end in the eventually formula");
  need(family.tail != nullptr, "f-e", "premise family requires a tail");
  NdParams params;
  params.i = i;
  params.a = a;
  params.label = label;
  Formula conclusion = family.tail->conclusion();
  return NdDerivation::make_omega(std::move(conclusion), NdRule::FE, std::move(params),
                                  {std::move(major)}, std::move(family));
}

}  // namespace nd
}  // namespace proofkit
