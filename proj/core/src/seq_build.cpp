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

#include "proofkit/seq_build.hpp"

#include "proofkit/errors.hpp"

namespace proofkit {

namespace {

[[noreturn]] void shape_error(const char* rule, const std::string& detail) {
  throw ProofError(std::string(rule) + ": " + detail);
}

void need(bool cond, const char* rule, const std::string& detail) {
  if (!cond) shape_error(rule, detail);
}

}  // namespace

SeqFamily tail_family(const std::string& var, SeqDerivation tail) {
  SeqFamily fam;
  fam.var = var;
  fam.tail = std::make_shared<const SeqDerivation>(std::move(tail));
  return fam;
}

namespace slt {

SeqDerivation init(const IndexExpr& i, const std::string& var, const FormulaSet& context) {
  Formula f = Formula::next(i, Formula::var(var));
  return SeqDerivation::make({context.with(f), FormulaSet{f}}, SeqRule::Init, {}, {});
}

SeqDerivation cut(SeqDerivation left, SeqDerivation right, const Formula& cut_formula) {
  need(left.conclusion().succedent == FormulaSet{cut_formula}, "cut",
       "left premise must conclude the cut formula");
  need(right.conclusion().antecedent.contains(cut_formula), "cut",
       "right premise must assume the cut formula");
  Sequent conclusion{
      left.conclusion().antecedent.set_union(right.conclusion().antecedent.without(cut_formula)),
      right.conclusion().succedent};
  SeqParams params;
  params.a = cut_formula;
  return SeqDerivation::make(std::move(conclusion), SeqRule::Cut, std::move(params),
                             {std::move(left), std::move(right)});
}

SeqDerivation we_right(SeqDerivation premise, const Formula& shown) {
  need(premise.conclusion().succedent.empty(), "we-right", "premise succedent must be empty");
  Sequent conclusion{premise.conclusion().antecedent, FormulaSet{shown}};
  SeqParams params;
  params.a = shown;
  return SeqDerivation::make(std::move(conclusion), SeqRule::WeRight, std::move(params),
                             {std::move(premise)});
}

SeqDerivation imp_left(SeqDerivation p1, SeqDerivation p2, const IndexExpr& i, const Formula& a,
                       const Formula& b) {
  Formula xa = Formula::next(i, a);
  Formula xb = Formula::next(i, b);
  Formula phi = Formula::next(i, Formula::imp(a, b));
  need(p1.conclusion().succedent == FormulaSet{xa}, "imp-left",
       "first premise must conclude the antecedent formula");
  need(p2.conclusion().antecedent == p1.conclusion().antecedent.with(xb), "imp-left",
       "premise contexts do not agree");
  Sequent conclusion{p1.conclusion().antecedent.with(phi), p2.conclusion().succedent};
  SeqParams params;
  params.i = i;
  params.a = a;
  params.b = b;
  return SeqDerivation::make(std::move(conclusion), SeqRule::ImpLeft, std::move(params),
                             {std::move(p1), std::move(p2)});
}

SeqDerivation imp_right(SeqDerivation premise, const IndexExpr& i, const Formula& a,
                        const Formula& b) {
  Formula xa = Formula::next(i, a);
  Formula xb = Formula::next(i, b);
  Formula phi = Formula::next(i, Formula::imp(a, b));
  need(premise.conclusion().succedent == FormulaSet{xb}, "imp-right",
       "premise must conclude the consequent");
  need(premise.conclusion().antecedent.contains(xa), "imp-right",
       "premise must assume the antecedent formula");
  Sequent conclusion{premise.conclusion().antecedent.without(xa), FormulaSet{phi}};
  SeqParams params;
  params.i = i;
  params.a = a;
  params.b = b;
  return SeqDerivation::make(std::move(conclusion), SeqRule::ImpRight, std::move(params),
                             {std::move(premise)});
}

SeqDerivation neg_left(SeqDerivation premise, const IndexExpr& i, const Formula& a) {
  Formula xa = Formula::next(i, a);
  Formula phi = Formula::next(i, Formula::neg(a));
  need(premise.conclusion().succedent == FormulaSet{xa}, "neg-left",
       "premise must conclude the body");
  Sequent conclusion{premise.conclusion().antecedent.with(phi), FormulaSet{}};
  SeqParams params;
  params.i = i;
  params.a = a;
  return SeqDerivation::make(std::move(conclusion), SeqRule::NegLeft, std::move(params),
                             {std::move(premise)});
}

SeqDerivation neg_right(SeqDerivation premise, const IndexExpr& i, const Formula& a) {
  Formula xa = Formula::next(i, a);
  Formula phi = Formula::next(i, Formula::neg(a));
  need(premise.conclusion().succedent.empty(), "neg-right", "premise succedent must be empty");
  need(premise.conclusion().antecedent.contains(xa), "neg-right", "premise must assume the body");
  Sequent conclusion{premise.conclusion().antecedent.without(xa), FormulaSet{phi}};
  SeqParams params;
  params.i = i;
  params.a = a;
  return SeqDerivation::make(std::move(conclusion), SeqRule::NegRight, std::move(params),
                             {std::move(premise)});
}

SeqDerivation ex_middle(SeqDerivation p1, SeqDerivation p2, const IndexExpr& i, const Formula& a) {
  Formula pos = Formula::next(i, a);
  Formula negf = Formula::next(i, Formula::neg(a));
  FormulaSet gamma = p1.conclusion().antecedent.without(negf).set_union(
      p2.conclusion().antecedent.without(pos));
  need(p1.conclusion().antecedent == gamma.with(negf), "ex-middle",
       "first premise must add exactly the negated case formula");
  need(p2.conclusion().antecedent == gamma.with(pos), "ex-middle",
       "second premise must add exactly the case formula");
  need(p1.conclusion().succedent == p2.conclusion().succedent, "ex-middle",
       "premise succedents do not agree");
  Sequent conclusion{std::move(gamma), p1.conclusion().succedent};
  SeqParams params;
  params.i = i;
  params.a = a;
  return SeqDerivation::make(std::move(conclusion), SeqRule::ExMiddle, std::move(params),
                             {std::move(p1), std::move(p2)});
}

SeqDerivation and_left(SeqDerivation premise, const IndexExpr& i, const Formula& a,
                       const Formula& b) {
  Formula xa = Formula::next(i, a);
  Formula xb = Formula::next(i, b);
  Formula phi = Formula::next(i, Formula::conj(a, b));
  need(premise.conclusion().antecedent.contains(xa) && premise.conclusion().antecedent.contains(xb),
       "and-left", "premise must assume both conjuncts");
  Sequent conclusion{premise.conclusion().antecedent.without(xa).without(xb).with(phi),
                     premise.conclusion().succedent};
  SeqParams params;
  params.i = i;
  params.a = a;
  params.b = b;
  return SeqDerivation::make(std::move(conclusion), SeqRule::AndLeft, std::move(params),
                             {std::move(premise)});
}

SeqDerivation and_right(SeqDerivation p1, SeqDerivation p2, const IndexExpr& i, const Formula& a,
                        const Formula& b) {
  Formula xa = Formula::next(i, a);
  Formula xb = Formula::next(i, b);
  Formula phi = Formula::next(i, Formula::conj(a, b));
  need(p1.conclusion().succedent == FormulaSet{xa}, "and-right",
       "first premise must conclude the first conjunct");
  need(p2.conclusion().succedent == FormulaSet{xb}, "and-right",
       "second premise must conclude the second conjunct");
  need(p1.conclusion().antecedent == p2.conclusion().antecedent, "and-right",
       "premise contexts do not agree");
  Sequent conclusion{p1.conclusion().antecedent, FormulaSet{phi}};
  SeqParams params;
  params.i = i;
  params.a = a;
  params.b = b;
  return SeqDerivation::make(std::move(conclusion), SeqRule::AndRight, std::move(params),
                             {std::move(p1), std::move(p2)});
}

SeqDerivation or_left(SeqDerivation p1, SeqDerivation p2, const IndexExpr& i, const Formula& a,
                      const Formula& b) {
  Formula xa = Formula::next(i, a);
  Formula xb = Formula::next(i, b);
  Formula phi = Formula::next(i, Formula::disj(a, b));
  FormulaSet gamma =
      p1.conclusion().antecedent.without(xa).set_union(p2.conclusion().antecedent.without(xb));
  need(p1.conclusion().antecedent == gamma.with(xa), "or-left",
       "first premise must assume the first disjunct over the shared context");
  need(p2.conclusion().antecedent == gamma.with(xb), "or-left",
       "second premise must assume the second disjunct over the shared context");
  need(p1.conclusion().succedent == p2.conclusion().succedent, "or-left",
       "premise succedents do not agree");
  Sequent conclusion{gamma.with(phi), p1.conclusion().succedent};
  SeqParams params;
  params.i = i;
  params.a = a;
  params.b = b;
  return SeqDerivation::make(std::move(conclusion), SeqRule::OrLeft, std::move(params),
                             {std::move(p1), std::move(p2)});
}

namespace {
SeqDerivation or_right_n(SeqDerivation premise, const IndexExpr& i, const Formula& a,
                         const Formula& b, bool first) {
  Formula shown = Formula::next(i, first ? a : b);
  Formula phi = Formula::next(i, Formula::disj(a, b));
  need(premise.conclusion().succedent == FormulaSet{shown}, first ? "or-right1" : "or-right2",
       "premise must conclude the chosen disjunct");
  Sequent conclusion{premise.conclusion().antecedent, FormulaSet{phi}};
  SeqParams params;
  params.i = i;
  params.a = a;
  params.b = b;
  return SeqDerivation::make(std::move(conclusion),
                             first ? SeqRule::OrRight1 : SeqRule::OrRight2, std::move(params),
                             {std::move(premise)});
}
}  // namespace

SeqDerivation or_right1(SeqDerivation premise, const IndexExpr& i, const Formula& a,
                        const Formula& b) {
  return or_right_n(std::move(premise), i, a, b, true);
}

SeqDerivation or_right2(SeqDerivation premise, const IndexExpr& i, const Formula& a,
                        const Formula& b) {
  return or_right_n(std::move(premise), i, a, b, false);
}

SeqDerivation g_left(SeqDerivation premise, const IndexExpr& i, const IndexExpr& k,
                     const Formula& a) {
  Formula shifted = Formula::next(i + k, a);
  Formula phi = Formula::next(i, Formula::globally(a));
  need(premise.conclusion().antecedent.contains(shifted), "g-left",
       "premise must assume the shifted body");
  Sequent conclusion{premise.conclusion().antecedent.without(shifted).with(phi),
                     premise.conclusion().succedent};
  SeqParams params;
  params.i = i;
  params.k = k;
  params.a = a;
  return SeqDerivation::make(std::move(conclusion), SeqRule::GLeft, std::move(params),
                             {std::move(premise)});
}

SeqDerivation g_right(SeqFamily family, const IndexExpr& i, const Formula& a) {
  Formula phi = Formula::next(i, Formula::globally(a));
  need(family.tail != nullptr, "g-right", "premise family requires a tail");
  Formula want = Formula::next(i + IndexExpr::var(family.var), a);
  need(family.tail->conclusion().succedent == FormulaSet{want}, "g-right",
       "family tail must conclude the shifted body");
  Sequent conclusion{family.tail->conclusion().antecedent, FormulaSet{phi}};
  SeqParams params;
  params.i = i;
  params.a = a;
  return SeqDerivation::make_omega(std::move(conclusion), SeqRule::GRight, std::move(params),
                                   std::move(family));
}

SeqDerivation f_left(SeqFamily family, const IndexExpr& i, const Formula& a) {
  Formula phi = Formula::next(i, Formula::eventually(a));
  need(family.tail != nullptr, "f-left", "premise family requires a tail");
  Formula want = Formula::next(i + IndexExpr::var(family.var), a);
  need(family.tail->conclusion().antecedent.contains(want), "f-left",
       "family tail must assume the shifted body");
  Sequent conclusion{family.tail->conclusion().antecedent.without(want).with(phi),
                     family.tail->conclusion().succedent};
  SeqParams params;
  params.i = i;
  params.a = a;
  return SeqDerivation::make_omega(std::move(conclusion), SeqRule::FLeft, std::move(params),
                                   std::move(family));
}

SeqDerivation f_right(SeqDerivation premise, const IndexExpr& i, const IndexExpr& k,
                      const Formula& a) {
  Formula shifted = Formula::next(i + k, a);
  Formula phi = Formula::next(i, Formula::eventually(a));
  need(premise.conclusion().succedent == FormulaSet{shifted}, "f-right",
       "premise must conclude the shifted body");
  Sequent conclusion{premise.conclusion().antecedent, FormulaSet{phi}};
  SeqParams params;
  params.i = i;
  params.k = k;
  params.a = a;
  return SeqDerivation::make(std::move(conclusion), SeqRule::FRight, std::move(params),
                             {std::move(premise)});
}

}  // namespace slt

namespace lt {

SeqDerivation init(const IndexExpr& i, const std::string& var) {
  Formula f = Formula::next(i, Formula::var(var));
  return SeqDerivation::make({FormulaSet{f}, FormulaSet{f}}, SeqRule::Init, {}, {});
}

SeqDerivation cut(SeqDerivation left, SeqDerivation right, const Formula& cut_formula) {
  need(left.conclusion().succedent.contains(cut_formula), "cut",
       "left premise must conclude the cut formula");
  need(right.conclusion().antecedent.contains(cut_formula), "cut",
       "right premise must assume the cut formula");
  Sequent conclusion{
      left.conclusion().antecedent.set_union(right.conclusion().antecedent.without(cut_formula)),
      left.conclusion().succedent.without(cut_formula).set_union(right.conclusion().succedent)};
  SeqParams params;
  params.a = cut_formula;
  return SeqDerivation::make(std::move(conclusion), SeqRule::Cut, std::move(params),
                             {std::move(left), std::move(right)});
}

SeqDerivation we_left(SeqDerivation premise, const Formula& added) {
  Sequent conclusion{premise.conclusion().antecedent.with(added), premise.conclusion().succedent};
  SeqParams params;
  params.a = added;
  return SeqDerivation::make(std::move(conclusion), SeqRule::WeLeft, std::move(params),
                             {std::move(premise)});
}

SeqDerivation we_right(SeqDerivation premise, const Formula& added) {
  Sequent conclusion{premise.conclusion().antecedent, premise.conclusion().succedent.with(added)};
  SeqParams params;
  params.a = added;
  return SeqDerivation::make(std::move(conclusion), SeqRule::WeRight, std::move(params),
                             {std::move(premise)});
}

SeqDerivation imp_left(SeqDerivation p1, SeqDerivation p2, const IndexExpr& i, const Formula& a,
                       const Formula& b) {
  Formula xa = Formula::next(i, a);
  Formula xb = Formula::next(i, b);
  Formula phi = Formula::next(i, Formula::imp(a, b));
  need(p1.conclusion().succedent.contains(xa), "imp-left",
       "first premise must conclude the antecedent formula");
  need(p2.conclusion().antecedent.contains(xb), "imp-left",
       "second premise must assume the consequent");
  FormulaSet gamma = p1.conclusion().antecedent;
  FormulaSet delta = p2.conclusion().succedent;
  need(p2.conclusion().antecedent == gamma.with(xb), "imp-left", "premise contexts do not agree");
  need(p1.conclusion().succedent == delta.with(xa), "imp-left", "premise contexts do not agree");
  Sequent conclusion{gamma.with(phi), delta};
  SeqParams params;
  params.i = i;
  params.a = a;
  params.b = b;
  return SeqDerivation::make(std::move(conclusion), SeqRule::ImpLeft, std::move(params),
                             {std::move(p1), std::move(p2)});
}

SeqDerivation imp_right(SeqDerivation premise, const IndexExpr& i, const Formula& a,
                        const Formula& b) {
  Formula xa = Formula::next(i, a);
  Formula xb = Formula::next(i, b);
  Formula phi = Formula::next(i, Formula::imp(a, b));
  need(premise.conclusion().antecedent.contains(xa), "imp-right",
       "premise must assume the antecedent formula");
  need(premise.conclusion().succedent.contains(xb), "imp-right",
       "premise must conclude the consequent");
  Sequent conclusion{premise.conclusion().antecedent.without(xa),
                     premise.conclusion().succedent.without(xb).with(phi)};
  SeqParams params;
  params.i = i;
  params.a = a;
  params.b = b;
  return SeqDerivation::make(std::move(conclusion), SeqRule::ImpRight, std::move(params),
                             {std::move(premise)});
}

SeqDerivation neg_left(SeqDerivation premise, const IndexExpr& i, const Formula& a) {
  Formula xa = Formula::next(i, a);
  Formula phi = Formula::next(i, Formula::neg(a));
  need(premise.conclusion().succedent.contains(xa), "neg-left", "premise must conclude the body");
  Sequent conclusion{premise.conclusion().antecedent.with(phi),
                     premise.conclusion().succedent.without(xa)};
  SeqParams params;
  params.i = i;
  params.a = a;
  return SeqDerivation::make(std::move(conclusion), SeqRule::NegLeft, std::move(params),
                             {std::move(premise)});
}

SeqDerivation neg_right(SeqDerivation premise, const IndexExpr& i, const Formula& a) {
  Formula xa = Formula::next(i, a);
  Formula phi = Formula::next(i, Formula::neg(a));
  need(premise.conclusion().antecedent.contains(xa), "neg-right", "premise must assume the body");
  Sequent conclusion{premise.conclusion().antecedent.without(xa),
                     premise.conclusion().succedent.with(phi)};
  SeqParams params;
  params.i = i;
  params.a = a;
  return SeqDerivation::make(std::move(conclusion), SeqRule::NegRight, std::move(params),
                             {std::move(premise)});
}

SeqDerivation and_left(SeqDerivation premise, const IndexExpr& i, const Formula& a,
                       const Formula& b) {
  Formula xa = Formula::next(i, a);
  Formula xb = Formula::next(i, b);
  Formula phi = Formula::next(i, Formula::conj(a, b));
  need(premise.conclusion().antecedent.contains(xa) && premise.conclusion().antecedent.contains(xb),
       "and-left", "premise must assume both conjuncts");
  Sequent conclusion{premise.conclusion().antecedent.without(xa).without(xb).with(phi),
                     premise.conclusion().succedent};
  SeqParams params;
  params.i = i;
  params.a = a;
  params.b = b;
  return SeqDerivation::make(std::move(conclusion), SeqRule::AndLeft, std::move(params),
                             {std::move(premise)});
}

SeqDerivation and_right(SeqDerivation p1, SeqDerivation p2, const IndexExpr& i, const Formula& a,
                        const Formula& b) {
  Formula xa = Formula::next(i, a);
  Formula xb = Formula::next(i, b);
  Formula phi = Formula::next(i, Formula::conj(a, b));
  need(p1.conclusion().antecedent == p2.conclusion().antecedent, "and-right",
       "premise contexts do not agree");
  FormulaSet delta =
      p1.conclusion().succedent.without(xa).set_union(p2.conclusion().succedent.without(xb));
  need(p1.conclusion().succedent == delta.with(xa), "and-right",
       "first premise must conclude the first conjunct over the shared context");
  need(p2.conclusion().succedent == delta.with(xb), "and-right",
       "second premise must conclude the second conjunct over the shared context");
  Sequent conclusion{p1.conclusion().antecedent, delta.with(phi)};
  SeqParams params;
  params.i = i;
  params.a = a;
  params.b = b;
  return SeqDerivation::make(std::move(conclusion), SeqRule::AndRight, std::move(params),
                             {std::move(p1), std::move(p2)});
}

SeqDerivation or_left(SeqDerivation p1, SeqDerivation p2, const IndexExpr& i, const Formula& a,
                      const Formula& b) {
  Formula xa = Formula::next(i, a);
  Formula xb = Formula::next(i, b);
  Formula phi = Formula::next(i, Formula::disj(a, b));
  FormulaSet gamma =
      p1.conclusion().antecedent.without(xa).set_union(p2.conclusion().antecedent.without(xb));
  need(p1.conclusion().antecedent == gamma.with(xa), "or-left",
       "first premise must assume the first disjunct over the shared context");
  need(p2.conclusion().antecedent == gamma.with(xb), "or-left",
       "second premise must assume the second disjunct over the shared context");
  need(p1.conclusion().succedent == p2.conclusion().succedent, "or-left",
       "premise succedents do not agree");
  Sequent conclusion{gamma.with(phi), p1.conclusion().succedent};
  SeqParams params;
  params.i = i;
  params.a = a;
  params.b = b;
  return SeqDerivation::make(std::move(conclusion), SeqRule::OrLeft, std::move(params),
                             {std::move(p1), std::move(p2)});
}

SeqDerivation or_right(SeqDerivation premise, const IndexExpr& i, const Formula& a,
                       const Formula& b) {
  Formula xa = Formula::next(i, a);
  Formula xb = Formula::next(i, b);
  Formula phi = Formula::next(i, Formula::disj(a, b));
  need(premise.conclusion().succedent.contains(xa) && premise.conclusion().succedent.contains(xb),
       "or-right", "premise must conclude both disjuncts");
  Sequent conclusion{premise.conclusion().antecedent,
                     premise.conclusion().succedent.without(xa).without(xb).with(phi)};
  SeqParams params;
  params.i = i;
  params.a = a;
  params.b = b;
  return SeqDerivation::make(std::move(conclusion), SeqRule::OrRight, std::move(params),
                             {std::move(premise)});
}

SeqDerivation g_left(SeqDerivation premise, const IndexExpr& i, const IndexExpr& k,
                     const Formula& a) {
  Formula shifted = Formula::next(i + k, a);
  Formula phi = Formula::next(i, Formula::globally(a));
  need(premise.conclusion().antecedent.contains(shifted), "g-left",
       "premise must assume the shifted body");
  Sequent conclusion{premise.conclusion().antecedent.without(shifted).with(phi),
                     premise.conclusion().succedent};
  SeqParams params;
  params.i = i;
  params.k = k;
  params.a = a;
  return SeqDerivation::make(std::move(conclusion), SeqRule::GLeft, std::move(params),
                             {std::move(premise)});
}

SeqDerivation g_right(SeqFamily family, const IndexExpr& i, const Formula& a) {
  Formula phi = Formula::next(i, Formula::globally(a));
  need(family.tail != nullptr, "g-right", "premise family requires a tail");
  Formula want = Formula::next(i + IndexExpr::var(family.var), a);
  need(family.tail->conclusion().succedent.contains(want), "g-right",
       "family tail must conclude the shifted body");
  Sequent conclusion{family.tail->conclusion().antecedent,
                     family.tail->conclusion().succedent.without(want).with(phi)};
  SeqParams params;
  params.i = i;
  params.a = a;
  return SeqDerivation::make_omega(std::move(conclusion), SeqRule::GRight, std::move(params),
                                   std::move(family));
}

SeqDerivation f_left(SeqFamily family, const IndexExpr& i, const Formula& a) {
  Formula phi = Formula::next(i, Formula::eventually(a));
  need(family.tail != nullptr, "f-left", "premise family requires a tail");
  Formula want = Formula::next(i + IndexExpr::var(family.var), a);
  need(family.tail->conclusion().antecedent.contains(want), "f-left",
       "family tail must assume the shifted body");
  Sequent conclusion{family.tail->conclusion().antecedent.without(want).with(phi),
                     family.tail->conclusion().succedent};
  SeqParams params;
  params.i = i;
  params.a = a;
  return SeqDerivation::make_omega(std::move(conclusion), SeqRule::FLeft, std::move(params),
                                   std::move(family));
}

SeqDerivation f_right(SeqDerivation premise, const IndexExpr& i, const IndexExpr& k,
                      const Formula& a) {
  Formula shifted = Formula::next(i + k, a);
  Formula phi = Formula::next(i, Formula::eventually(a));
  need(premise.conclusion().succedent.contains(shifted), "f-right",
       "premise must conclude the shifted body");
  Sequent conclusion{premise.conclusion().antecedent,
                     premise.conclusion().succedent.without(shifted).with(phi)};
  SeqParams params;
  params.i = i;
  params.k = k;
  params.a = a;
  return SeqDerivation::make(std::move(conclusion), SeqRule::FRight, std::move(params),
                             {std::move(premise)});
}

SeqDerivation weaken_to(SeqDerivation d, const Sequent& target) {
  need(d.conclusion().antecedent.subset_of(target.antecedent), "weaken-to",
       "conclusion antecedent exceeds the target");
  need(d.conclusion().succedent.subset_of(target.succedent), "weaken-to",
       "conclusion succedent exceeds the target");
  for (const Formula& f : target.antecedent.set_minus(d.conclusion().antecedent))
    d = we_left(std::move(d), f);
  for (const Formula& f : target.succedent.set_minus(d.conclusion().succedent))
    d = we_right(std::move(d), f);
  return d;
}

}  // namespace lt

}  // namespace proofkit
