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

#ifndef PROOFKIT_ND_BUILD_HPP
#define PROOFKIT_ND_BUILD_HPP

#include "proofkit/nd_derivation.hpp"

namespace proofkit {
namespace nd {

// Rule-application constructors; conclusions are computed from the premises
// and parameters, premise shapes are validated, ProofError on mismatch.

NdDerivation imp_i(NdDerivation body, const IndexExpr& i, const Formula& a, const Formula& b,
                   std::int64_t label);
NdDerivation imp_e(NdDerivation major, NdDerivation minor, const IndexExpr& i, const Formula& a,
                   const Formula& b);
NdDerivation exp(NdDerivation major, NdDerivation minor, const IndexExpr& i, const Formula& a,
                 Formula conclusion);
NdDerivation exm(NdDerivation left, NdDerivation right, const IndexExpr& i, const Formula& a,
                 std::int64_t label_neg, std::int64_t label_pos);
NdDerivation neg_i(NdDerivation p1, NdDerivation p2, const IndexExpr& i, const Formula& a,
                   const IndexExpr& j, const Formula& g, std::int64_t label);
NdDerivation and_i(NdDerivation p1, NdDerivation p2, const IndexExpr& i, const Formula& a,
                   const Formula& b);
NdDerivation and_e1(NdDerivation premise, const IndexExpr& i, const Formula& a, const Formula& b);
NdDerivation and_e2(NdDerivation premise, const IndexExpr& i, const Formula& a, const Formula& b);
NdDerivation or_i1(NdDerivation premise, const IndexExpr& i, const Formula& a, const Formula& b);
NdDerivation or_i2(NdDerivation premise, const IndexExpr& i, const Formula& a, const Formula& b);
NdDerivation or_e(NdDerivation major, NdDerivation branch1, NdDerivation branch2,
                  const IndexExpr& i, const Formula& a, const Formula& b, std::int64_t label1,
                  std::int64_t label2);
NdDerivation g_i(NdFamily family, const IndexExpr& i, const Formula& a);
NdDerivation g_e(NdDerivation premise, const IndexExpr& i, const IndexExpr& k, const Formula& a);
NdDerivation f_i(NdDerivation premise, const IndexExpr& i, const IndexExpr& k, const Formula& a);
NdDerivation f_e(NdDerivation major, NdFamily family, const IndexExpr& i, const Formula& a,
                 std::int64_t label);

/// Pure-tail premise family.
NdFamily tail_family(const std::string& var, NdDerivation tail);

}  // namespace nd
}  // namespace proofkit

#endif  // PROOFKIT_ND_BUILD_HPP
