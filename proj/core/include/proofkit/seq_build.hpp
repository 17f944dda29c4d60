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

#ifndef PROOFKIT_SEQ_BUILD_HPP
#define PROOFKIT_SEQ_BUILD_HPP

#include "proofkit/seq_derivation.hpp"

namespace proofkit {

// Rule-application constructors. Each takes the premise derivations plus the
// rule parameters, validates the premise shapes, and computes the canonical
// conclusion (context = premise context minus the consumed formulas). They
// throw ProofError when a premise does not fit the schema.
//
// `slt` builders produce single-succedent nodes, `lt` builders
// multi-succedent ones. Shapes that coincide share an implementation.

namespace slt {

SeqDerivation init(const IndexExpr& i, const std::string& var, const FormulaSet& context);
SeqDerivation cut(SeqDerivation left, SeqDerivation right, const Formula& cut_formula);
SeqDerivation we_right(SeqDerivation premise, const Formula& shown);
SeqDerivation imp_left(SeqDerivation p1, SeqDerivation p2, const IndexExpr& i, const Formula& a,
                       const Formula& b);
SeqDerivation imp_right(SeqDerivation premise, const IndexExpr& i, const Formula& a,
                        const Formula& b);
SeqDerivation neg_left(SeqDerivation premise, const IndexExpr& i, const Formula& a);
SeqDerivation neg_right(SeqDerivation premise, const IndexExpr& i, const Formula& a);
SeqDerivation ex_middle(SeqDerivation p1, SeqDerivation p2, const IndexExpr& i, const Formula& a);
SeqDerivation and_left(SeqDerivation premise, const IndexExpr& i, const Formula& a,
                       const Formula& b);
SeqDerivation and_right(SeqDerivation p1, SeqDerivation p2, const IndexExpr& i, const Formula& a,
                        const Formula& b);
SeqDerivation or_left(SeqDerivation p1, SeqDerivation p2, const IndexExpr& i, const Formula& a,
                      const Formula& b);
SeqDerivation or_right1(SeqDerivation premise, const IndexExpr& i, const Formula& a,
                        const Formula& b);
SeqDerivation or_right2(SeqDerivation premise, const IndexExpr& i, const Formula& a,
                        const Formula& b);
SeqDerivation g_left(SeqDerivation premise, const IndexExpr& i, const IndexExpr& k,
                     const Formula& a);
SeqDerivation g_right(SeqFamily family, const IndexExpr& i, const Formula& a);
SeqDerivation f_left(SeqFamily family, const IndexExpr& i, const Formula& a);
SeqDerivation f_right(SeqDerivation premise, const IndexExpr& i, const IndexExpr& k,
                      const Formula& a);

}  // namespace slt

namespace lt {

SeqDerivation init(const IndexExpr& i, const std::string& var);
SeqDerivation cut(SeqDerivation left, SeqDerivation right, const Formula& cut_formula);
SeqDerivation we_left(SeqDerivation premise, const Formula& added);
SeqDerivation we_right(SeqDerivation premise, const Formula& added);
SeqDerivation imp_left(SeqDerivation p1, SeqDerivation p2, const IndexExpr& i, const Formula& a,
                       const Formula& b);
SeqDerivation imp_right(SeqDerivation premise, const IndexExpr& i, const Formula& a,
                        const Formula& b);
SeqDerivation neg_left(SeqDerivation premise, const IndexExpr& i, const Formula& a);
SeqDerivation neg_right(SeqDerivation premise, const IndexExpr& i, const Formula& a);
SeqDerivation and_left(SeqDerivation premise, const IndexExpr& i, const Formula& a,
                       const Formula& b);
SeqDerivation and_right(SeqDerivation p1, SeqDerivation p2, const IndexExpr& i, const Formula& a,
                        const Formula& b);
SeqDerivation or_left(SeqDerivation p1, SeqDerivation p2, const IndexExpr& i, const Formula& a,
                      const Formula& b);
SeqDerivation or_right(SeqDerivation premise, const IndexExpr& i, const Formula& a,
                       const Formula& b);
SeqDerivation g_left(SeqDerivation premise, const IndexExpr& i, const IndexExpr& k,
                     const Formula& a);
SeqDerivation g_right(SeqFamily family, const IndexExpr& i, const Formula& a);
SeqDerivation f_left(SeqFamily family, const IndexExpr& i, const Formula& a);
SeqDerivation f_right(SeqDerivation premise, const IndexExpr& i, const IndexExpr& k,
                      const Formula& a);

/// Extends `d` with explicit weakening nodes until its conclusion equals
/// `target`. The current conclusion must be contained in the target.
SeqDerivation weaken_to(SeqDerivation d, const Sequent& target);

}  // namespace lt

/// Pure-tail premise family (empty explicit prefix).
SeqFamily tail_family(const std::string& var, SeqDerivation tail);

}  // namespace proofkit

#endif  // PROOFKIT_SEQ_BUILD_HPP
