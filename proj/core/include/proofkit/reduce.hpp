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

#ifndef PROOFKIT_REDUCE_HPP
#define PROOFKIT_REDUCE_HPP

#include "proofkit/nd_check.hpp"

namespace proofkit {

/// One reducible maximum formula, addressed by its consumer (the elimination
/// node whose major premise it is). Case numbering:
///   1  implication detour            7  conjunction detour
///   2  Exp under any elimination     8  disjunction detour
///   3  NegI under Exp (substitution) 9  OrE permutation
///   4  NegI under Exp (collapse)    10  globally detour
///   5  Exm permutation              11  eventually detour
///   6  Exm of a negation under Exp  12  FE permutation
struct Redex {
  NdPath path;
  int case_id = 0;
};

struct ReductionStep {
  Redex redex;
  NdDerivation after;
};

struct ReductionTrace {
  std::vector<ReductionStep> steps;
  bool terminated_normal = false;
};

/// All redexes of `d` in leftmost-innermost order. Every maximum formula
/// yields exactly one redex; a maximum formula outside the twelve cases
/// raises ProofError.
std::vector<Redex> find_redexes(const NdDerivation& d);

/// Applies the single rewriting step `r` describes. Throws on a stale redex.
NdDerivation reduce_at(const NdDerivation& d, const Redex& r);

/// Repeatedly contracts the first redex in leftmost-innermost order until
/// none remains or the fuel runs out. Fuel exhaustion is reported in the
/// trace, never thrown.
ReductionTrace reduce_to_normal(const NdDerivation& d, std::size_t fuel);

}  // namespace proofkit

#endif  // PROOFKIT_REDUCE_HPP
