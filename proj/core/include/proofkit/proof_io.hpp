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

#ifndef PROOFKIT_PROOF_IO_HPP
#define PROOFKIT_PROOF_IO_HPP

#include <string>

#include "proofkit/nd_derivation.hpp"
#include "proofkit/seq_derivation.hpp"
#include "proofkit/sexpr.hpp"

namespace proofkit {

// Textual s-expression formats.
//
// Formulas:   IDENT | (X <index> f) | (~ f) | (-> f g) | (/\ f g) | (\/ f g)
//             | (G f) | (F f)        index: "2", "j", "i+1", ...
// Sequents:   (seq (<formula>*) => <formula>*)
// Sequent calculus derivations:
//   (rule <tag> (:params ...) (:conclusion <sequent>)
//         (:premises <derivation>* | (omega (:var j) (:explicit <d>*) (:tail <d>))))
// Natural deduction derivations:
//   (hyp <label> <formula>)
//   (nd <tag> (:params ...) (:conclusion <formula>) (:discharge (<label> <formula>)*)
//       (:premises ...))
//
// Emission renames schema variables canonically (j0, j1, ...) so output is
// deterministic; parse(print(d)) re-checks identically.

Formula formula_from_sexpr(const SExpr& e);
SExpr formula_to_sexpr(const Formula& f);

Sequent sequent_from_sexpr(const SExpr& e);
SExpr sequent_to_sexpr(const Sequent& s);

SeqDerivation seq_derivation_from_sexpr(const SExpr& e);
SeqDerivation parse_seq_derivation(const std::string& text);
std::string print_seq_derivation(const SeqDerivation& d);

NdDerivation nd_derivation_from_sexpr(const SExpr& e);
NdDerivation parse_nd_derivation(const std::string& text);
std::string print_nd_derivation(const NdDerivation& d);

}  // namespace proofkit

#endif  // PROOFKIT_PROOF_IO_HPP
