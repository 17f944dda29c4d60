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

#ifndef PROOFKIT_SEXPR_HPP
#define PROOFKIT_SEXPR_HPP

#include <cstddef>
#include <string>
#include <vector>

namespace proofkit {

// Minimal s-expression layer shared by the derivation file formats. Atoms are
// runs of characters other than parentheses, whitespace and semicolon;
// a semicolon starts a comment to end of line.
struct SExpr {
  bool is_atom = true;
  std::string atom;
  std::vector<SExpr> items;
  std::size_t offset = 0;  // byte offset in the source text, for diagnostics

  static SExpr make_atom(std::string value);
  static SExpr make_list(std::vector<SExpr> items);

  bool is_list() const { return !is_atom; }
  const SExpr& at(std::size_t index) const;
  std::size_t size() const { return items.size(); }

  /// First element of a list when it is an atom, else "".
  const std::string& head() const;
  /// Finds the list item starting with keyword atom `key` (e.g. ":params").
  const SExpr* find(const std::string& key) const;

  std::string str() const;
};

SExpr parse_sexpr(const std::string& text);
std::vector<SExpr> parse_sexprs(const std::string& text);

}  // namespace proofkit

#endif  // PROOFKIT_SEXPR_HPP
