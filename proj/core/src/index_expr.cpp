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

#include "proofkit/index_expr.hpp"

#include <cctype>

#include "proofkit/errors.hpp"

namespace proofkit {

IndexExpr IndexExpr::var(const std::string& name, std::uint64_t coeff) {
  IndexExpr e;
  if (name.empty()) throw ProofError("index variable name must be nonempty");
  if (coeff > 0) e.coeffs_[name] = coeff;
  return e;
}

IndexExpr IndexExpr::operator+(const IndexExpr& other) const {
  IndexExpr e = *this;
  e += other;
  return e;
}

IndexExpr& IndexExpr::operator+=(const IndexExpr& other) {
  constant_ += other.constant_;
  for (const auto& [name, coeff] : other.coeffs_) coeffs_[name] += coeff;
  return *this;
}

std::vector<std::string> IndexExpr::variables() const {
  std::vector<std::string> names;
  names.reserve(coeffs_.size());
  for (const auto& [name, coeff] : coeffs_) names.push_back(name);
  return names;
}

std::uint64_t IndexExpr::eval(const Env& env) const {
  std::uint64_t total = constant_;
  for (const auto& [name, coeff] : coeffs_) {
    auto it = env.find(name);
    if (it == env.end())
      throw ProofError("unbound schema variable '" + name + "' in index evaluation");
    total += coeff * it->second;
  }
  return total;
}

IndexExpr IndexExpr::substitute(const std::string& name, const IndexExpr& value) const {
  auto it = coeffs_.find(name);
  if (it == coeffs_.end()) return *this;
  IndexExpr e;
  e.constant_ = constant_;
  e.coeffs_ = coeffs_;
  std::uint64_t coeff = it->second;
  e.coeffs_.erase(name);
  for (std::uint64_t n = 0; n < coeff; ++n) e += value;
  return e;
}

IndexExpr IndexExpr::rename(const std::string& from, const std::string& to) const {
  return substitute(from, IndexExpr::var(to));
}

std::string IndexExpr::str() const {
  std::string out;
  for (const auto& [name, coeff] : coeffs_) {
    for (std::uint64_t n = 0; n < coeff; ++n) {
      if (!out.empty()) out += '+';
      out += name;
    }
  }
  if (constant_ > 0 || out.empty()) {
    if (!out.empty()) out += '+';
    out += std::to_string(constant_);
  }
  return out;
}

IndexExpr IndexExpr::parse(const std::string& text) {
  IndexExpr result;
  std::size_t pos = 0;
  bool expect_term = true;
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
      continue;
    }
    if (c == '+') {
      if (expect_term) throw SyntaxError("unexpected '+' in index expression", pos);
      expect_term = true;
      ++pos;
      continue;
    }
    if (!expect_term) throw SyntaxError("expected '+' in index expression", pos);
    if (std::isdigit(static_cast<unsigned char>(c))) {
      std::uint64_t value = 0;
      while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) {
        value = value * 10 + static_cast<std::uint64_t>(text[pos] - '0');
        ++pos;
      }
      result += IndexExpr(value);
    } else if (std::isalpha(static_cast<unsigned char>(c)) || c == '_') {
      std::string name;
      while (pos < text.size() &&
             (std::isalnum(static_cast<unsigned char>(text[pos])) || text[pos] == '_')) {
        name += text[pos];
        ++pos;
      }
      result += IndexExpr::var(name);
    } else {
      throw SyntaxError("unexpected character in index expression", pos);
    }
    expect_term = false;
  }
  if (expect_term) throw SyntaxError("empty index expression", pos);
  return result;
}

}  // namespace proofkit
