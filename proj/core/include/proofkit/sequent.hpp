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

#ifndef PROOFKIT_SEQUENT_HPP
#define PROOFKIT_SEQUENT_HPP

#include <initializer_list>
#include <string>
#include <vector>

#include "proofkit/formula.hpp"

namespace proofkit {

/// Duplicate-free canonically sorted set of formulas. Antecedents and
/// succedents are sets, so contraction is implicit and two sequents are equal
/// exactly when their canonical forms coincide.
class FormulaSet {
 public:
  FormulaSet() = default;
  FormulaSet(std::initializer_list<Formula> items);
  explicit FormulaSet(std::vector<Formula> items);

  bool contains(const Formula& f) const;
  bool empty() const { return items_.empty(); }
  std::size_t size() const { return items_.size(); }
  const Formula& front() const { return items_.front(); }

  FormulaSet with(const Formula& f) const;
  FormulaSet without(const Formula& f) const;
  FormulaSet set_union(const FormulaSet& other) const;
  FormulaSet set_minus(const FormulaSet& other) const;
  bool subset_of(const FormulaSet& other) const;

  FormulaSet substitute_index(const std::string& name, const IndexExpr& value) const;
  bool mentions_index(const std::string& name) const;

  auto begin() const { return items_.begin(); }
  auto end() const { return items_.end(); }

  bool operator==(const FormulaSet& other) const = default;

  std::string str() const;

 private:
  std::vector<Formula> items_;  // sorted, unique
};

/// Two-sided sequent. The single-succedent calculus restricts the succedent
/// to at most one formula; the checkers enforce the restriction.
struct Sequent {
  FormulaSet antecedent;
  FormulaSet succedent;

  bool operator==(const Sequent& other) const = default;

  Sequent substitute_index(const std::string& name, const IndexExpr& value) const {
    return {antecedent.substitute_index(name, value), succedent.substitute_index(name, value)};
  }
  bool mentions_index(const std::string& name) const {
    return antecedent.mentions_index(name) || succedent.mentions_index(name);
  }

  std::string str() const;
};

}  // namespace proofkit

#endif  // PROOFKIT_SEQUENT_HPP
