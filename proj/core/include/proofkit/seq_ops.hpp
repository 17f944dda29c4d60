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

#ifndef PROOFKIT_SEQ_OPS_HPP
#define PROOFKIT_SEQ_OPS_HPP

#include "proofkit/seq_derivation.hpp"

namespace proofkit {

enum class Calculus { Lt, Slt };

/// Cut-free derivation of X^i a, Gamma => X^i a. In the single-succedent
/// calculus the context rides along in every sequent; in the multi-succedent
/// calculus it is added by explicit weakening steps. The G and F cases emit
/// premise families with a fresh schema variable. The result passes its
/// calculus checker.
SeqDerivation derive_identity(const Formula& alpha, const IndexExpr& i, const FormulaSet& context,
                              Calculus calculus);

/// Height-preserving left weakening for cut-free single-succedent
/// derivations: adds `added` to every antecedent. Throws on derivations
/// containing cut.
SeqDerivation weaken_left(const SeqDerivation& d, const Formula& added);

/// Left weakening for arbitrary single-succedent derivations, cut included.
/// Same construction; exposed separately because the height-preservation
/// statement is about the cut-free fragment.
SeqDerivation weaken_left_any(const SeqDerivation& d, const Formula& added);

/// Weakens a single-succedent derivation until its antecedent equals
/// `target`; the current antecedent must be a subset of the target.
SeqDerivation weaken_antecedent_to(const SeqDerivation& d, const FormulaSet& target);

/// Inverse of negation-left, derivable cut-free: turns a derivation of
/// X^i ~a, Gamma => (empty) into one of Gamma => X^i a, by splitting on
/// X^i a with the weakened input on one side and an identity derivation on
/// the other. Throws when the conclusion does not have the required shape.
SeqDerivation neg_left_inverse(const SeqDerivation& d, const IndexExpr& i, const Formula& alpha);

/// Substitutes the natural `n` for the free schema variable `var` everywhere
/// in the derivation. Throws when `var` does not occur free.
SeqDerivation instantiate_schema(const SeqDerivation& d, const std::string& var, std::uint64_t n);

}  // namespace proofkit

#endif  // PROOFKIT_SEQ_OPS_HPP
