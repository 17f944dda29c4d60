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

#ifndef PROOFKIT_INDEX_EXPR_HPP
#define PROOFKIT_INDEX_EXPR_HPP

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

namespace proofkit {

/// Affine nonnegative expression over schema variables, used as the exponent
/// of an iterated next-time prefix. Canonical form: variables sorted by name,
/// zero coefficients absent. There is no subtraction, so every assignment of
/// naturals to the variables evaluates to a natural.
class IndexExpr {
 public:
  using Env = std::map<std::string, std::uint64_t>;

  IndexExpr() = default;
  IndexExpr(std::uint64_t constant) : constant_(constant) {}  // NOLINT: implicit by design

  static IndexExpr var(const std::string& name, std::uint64_t coeff = 1);

  IndexExpr operator+(const IndexExpr& other) const;
  IndexExpr& operator+=(const IndexExpr& other);

  bool operator==(const IndexExpr& other) const = default;
  std::strong_ordering operator<=>(const IndexExpr& other) const = default;

  bool is_constant() const { return coeffs_.empty(); }
  std::uint64_t constant_part() const { return constant_; }

  bool mentions(const std::string& name) const { return coeffs_.count(name) > 0; }
  std::vector<std::string> variables() const;

  /// Throws ProofError if a variable is unbound in `env`.
  std::uint64_t eval(const Env& env) const;

  IndexExpr substitute(const std::string& name, const IndexExpr& value) const;
  IndexExpr rename(const std::string& from, const std::string& to) const;

  std::string str() const;

  /// Parses sums of naturals and identifiers, e.g. "3", "j", "i+2", "j+j+1".
  static IndexExpr parse(const std::string& text);

 private:
  std::uint64_t constant_ = 0;
  std::map<std::string, std::uint64_t> coeffs_;
};

}  // namespace proofkit

#endif  // PROOFKIT_INDEX_EXPR_HPP
