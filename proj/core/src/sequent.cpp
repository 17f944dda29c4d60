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

#include "proofkit/sequent.hpp"

#include <algorithm>

namespace proofkit {

namespace {
void canonicalize(std::vector<Formula>& items) {
  std::sort(items.begin(), items.end());
  items.erase(std::unique(items.begin(), items.end()), items.end());
}
}  // namespace

FormulaSet::FormulaSet(std::initializer_list<Formula> items) : items_(items) {
  canonicalize(items_);
}

FormulaSet::FormulaSet(std::vector<Formula> items) : items_(std::move(items)) {
  canonicalize(items_);
}

bool FormulaSet::contains(const Formula& f) const {
  return std::binary_search(items_.begin(), items_.end(), f);
}

FormulaSet FormulaSet::with(const Formula& f) const {
  if (contains(f)) return *this;
  FormulaSet out = *this;
  out.items_.insert(std::lower_bound(out.items_.begin(), out.items_.end(), f), f);
  return out;
}

FormulaSet FormulaSet::without(const Formula& f) const {
  FormulaSet out = *this;
  auto it = std::lower_bound(out.items_.begin(), out.items_.end(), f);
  if (it != out.items_.end() && *it == f) out.items_.erase(it);
  return out;
}

FormulaSet FormulaSet::set_union(const FormulaSet& other) const {
  std::vector<Formula> merged;
  merged.reserve(items_.size() + other.items_.size());
  std::merge(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
             std::back_inserter(merged));
  merged.erase(std::unique(merged.begin(), merged.end()), merged.end());
  FormulaSet out;
  out.items_ = std::move(merged);
  return out;
}

FormulaSet FormulaSet::set_minus(const FormulaSet& other) const {
  std::vector<Formula> kept;
  std::set_difference(items_.begin(), items_.end(), other.items_.begin(), other.items_.end(),
                      std::back_inserter(kept));
  FormulaSet out;
  out.items_ = std::move(kept);
  return out;
}

bool FormulaSet::subset_of(const FormulaSet& other) const {
  return std::includes(other.items_.begin(), other.items_.end(), items_.begin(), items_.end());
}

FormulaSet FormulaSet::substitute_index(const std::string& name, const IndexExpr& value) const {
  std::vector<Formula> out;
  out.reserve(items_.size());
  for (const auto& f : items_) out.push_back(f.substitute_index(name, value));
  return FormulaSet(std::move(out));
}

bool FormulaSet::mentions_index(const std::string& name) const {
  for (const auto& f : items_)
    if (f.mentions_index(name)) return true;
  return false;
}

std::string FormulaSet::str() const {
  std::string out;
  for (std::size_t n = 0; n < items_.size(); ++n) {
    if (n > 0) out += ", ";
    out += items_[n].debug_str();
  }
  return out;
}

std::string Sequent::str() const {
  return antecedent.str() + " => " + succedent.str();
}

}  // namespace proofkit
