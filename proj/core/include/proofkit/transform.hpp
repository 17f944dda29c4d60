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

#ifndef PROOFKIT_TRANSFORM_HPP
#define PROOFKIT_TRANSFORM_HPP

#include "proofkit/nd_check.hpp"
#include "proofkit/seq_ops.hpp"

namespace proofkit {

inline constexpr std::size_t kDefaultFuel = 100000;

/// Designated contradiction used to read an empty succedent as a natural
/// deduction end-formula: ~v /\ v for the chosen variable.
struct Contradiction {
  std::string variable = "p";
  Formula formula() const {
    Formula v = Formula::var(variable);
    return Formula::conj(Formula::neg(v), v);
  }
};

/// Step log for the cut-elimination rewriting, for external inspection.
struct CutElimTrace {
  struct Step {
    std::size_t step;
    std::string kind;
    std::string detail;
  };
  std::vector<Step> steps;
};

/// Natural deduction to the single-succedent calculus: a checked derivation
/// of oa(d) => end(d). Cuts are introduced freely. Throws when `d` fails its
/// checker or a premise family's open assumptions depend on the family's
/// schema variable (the sequent image would be infinite).
SeqDerivation nlt_to_slt(const NdDerivation& d, const Contradiction& bottom = {});

/// Cut-free single-succedent derivations back to natural deduction. The
/// result is checked, normal, ends in the succedent formula (or the
/// designated contradiction when the succedent is empty), and its open
/// assumptions are contained in the antecedent.
NdDerivation slt_cutfree_to_nd_normal(const SeqDerivation& d, const Contradiction& bottom = {});

/// Cut-free multi-succedent derivation of Gamma => Delta into a cut-free
/// single-succedent derivation of ~Delta, Gamma => (empty), negating each
/// succedent member outside its next-time prefix.
SeqDerivation lt_cutfree_to_slt_cutfree(const SeqDerivation& d);

/// Single-succedent derivations embed into the multi-succedent calculus with
/// the same end-sequent; the case split on X^i ~a / X^i a becomes two cuts
/// against an identity derivation.
SeqDerivation slt_to_lt(const SeqDerivation& d);

/// Reductive cut elimination for the multi-succedent calculus. Principal
/// cuts on G and F formulas instantiate the premise family at the witness;
/// other principal cuts reduce to cuts on smaller formulas; parametric cuts
/// permute upward; weakened-in cut formulas erase the cut. The result is
/// cut-free, checkable, and ends in the same sequent. Throws FuelExhausted
/// when the step budget runs out.
SeqDerivation cut_eliminate_lt(const SeqDerivation& d, std::size_t fuel = kDefaultFuel,
                               CutElimTrace* trace = nullptr);

/// Cut elimination for the single-succedent calculus, run indirectly:
/// embed into the multi-succedent calculus, eliminate cuts there, translate
/// back, and recover the succedent by the inverse of negation-left.
SeqDerivation cut_eliminate_slt(const SeqDerivation& d, std::size_t fuel = kDefaultFuel,
                                CutElimTrace* trace = nullptr);

/// Normalization through the sequent calculus: translate, eliminate cuts,
/// translate back. The result is normal, checks, has the same end-formula,
/// and its open assumptions are contained in the input's.
NdDerivation normalize_indirect(const NdDerivation& d, std::size_t fuel = kDefaultFuel,
                                const Contradiction& bottom = {});

}  // namespace proofkit

#endif  // PROOFKIT_TRANSFORM_HPP
