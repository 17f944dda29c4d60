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

#ifndef PROOFKIT_SEQ_CHECK_HPP
#define PROOFKIT_SEQ_CHECK_HPP

#include <cstddef>
#include <string>
#include <utility>
#include <vector>

#include "proofkit/seq_derivation.hpp"

namespace proofkit {

/// Result of running a checker over a derivation. `ok()` holds exactly when
/// no violation was recorded. Checkers never abort on a bad node; they record
/// the violation with the node's path and keep going.
struct CheckReport {
  std::vector<std::pair<std::string, std::string>> violations;
  std::size_t cut_count = 0;
  bool uses_omega = false;

  bool ok() const { return violations.empty(); }
  std::string str() const;
};

/// Validates every node of `d` against the multi-succedent calculus: initial
/// sequents are exactly X^i p => X^i p with no side context, weakening is by
/// explicit nodes, and the omega rules are validated against their premise
/// family (explicit members concretely, the tail symbolically).
CheckReport check_lt(const SeqDerivation& d);

/// Validates every node of `d` against the single-succedent calculus: at most
/// one succedent formula, initial sequents X^i p, Gamma => X^i p with
/// arbitrary context, no left weakening rule, and ex-middle premises that add
/// exactly X^i ~a respectively X^i a to the antecedent.
CheckReport check_slt(const SeqDerivation& d);

bool is_cut_free(const SeqDerivation& d);

/// Length of a maximal branch, in edges. Defined only for fully concrete
/// derivations; throws ProofError when the tree contains a premise family or
/// a schematic index.
std::size_t height(const SeqDerivation& d);

/// Height of the restriction of `d` where every premise family is replaced
/// by its single member at index n (recursively). Used to compare heights of
/// schematic derivations instance-wise.
std::size_t restricted_height(const SeqDerivation& d, std::uint64_t n);

}  // namespace proofkit

#endif  // PROOFKIT_SEQ_CHECK_HPP
