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

#ifndef PROOFKIT_ND_CHECK_HPP
#define PROOFKIT_ND_CHECK_HPP

#include "proofkit/nd_derivation.hpp"
#include "proofkit/seq_check.hpp"
#include "proofkit/sequent.hpp"

namespace proofkit {

/// Position of a node inside an NdDerivation.
struct NdStep {
  enum class Kind { Premise, FamilyExplicit, FamilyTail };
  Kind kind = Kind::Premise;
  std::size_t index = 0;

  bool operator==(const NdStep&) const = default;
};
using NdPath = std::vector<NdStep>;

std::string nd_path_str(const NdPath& path);
NdDerivation nd_subtree_at(const NdDerivation& d, const NdPath& path);
NdDerivation nd_replace_at(const NdDerivation& d, const NdPath& path,
                           const NdDerivation& replacement);

/// Validates every node against its rule schema, including index arithmetic,
/// premise families, and discharge bookkeeping: a discharged label may only
/// mark assumption leaves of the declared formula inside the discharging
/// premise, and no label is discharged twice on one path.
CheckReport check_nd(const NdDerivation& d);

/// Set of formulas at assumption leaves not discharged below them.
FormulaSet open_assumptions(const NdDerivation& d);

Formula end_formula(const NdDerivation& d);

/// Paths of the nodes whose conclusion is a maximum formula: the conclusion
/// of an introduction rule, OrE, or Exp standing as the major premise of an
/// elimination rule.
std::vector<NdPath> maximum_formulas(const NdDerivation& d);

bool is_normal(const NdDerivation& d);

}  // namespace proofkit

#endif  // PROOFKIT_ND_CHECK_HPP
