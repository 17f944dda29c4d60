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

#include "proofkit/sexpr.hpp"

#include <cctype>

#include "proofkit/errors.hpp"

namespace proofkit {

SExpr SExpr::make_atom(std::string value) {
  SExpr e;
  e.is_atom = true;
  e.atom = std::move(value);
  return e;
}

SExpr SExpr::make_list(std::vector<SExpr> items) {
  SExpr e;
  e.is_atom = false;
  e.items = std::move(items);
  return e;
}

const SExpr& SExpr::at(std::size_t index) const {
  if (is_atom || index >= items.size())
    throw SyntaxError("s-expression is missing element " + std::to_string(index), offset);
  return items[index];
}

const std::string& SExpr::head() const {
  static const std::string empty;
  if (is_atom || items.empty() || !items.front().is_atom) return empty;
  return items.front().atom;
}

const SExpr* SExpr::find(const std::string& key) const {
  if (is_atom) return nullptr;
  for (const auto& item : items)
    if (item.is_list() && item.head() == key) return &item;
  return nullptr;
}

std::string SExpr::str() const {
  if (is_atom) return atom;
  std::string out = "(";
  for (std::size_t n = 0; n < items.size(); ++n) {
    if (n > 0) out += " ";
    out += items[n].str();
  }
  out += ")";
  return out;
}

namespace {

void skip_space(const std::string& text, std::size_t& pos) {
  while (pos < text.size()) {
    char c = text[pos];
    if (std::isspace(static_cast<unsigned char>(c))) {
      ++pos;
    } else if (c == ';') {
      while (pos < text.size() && text[pos] != '\n') ++pos;
    } else {
      break;
    }
  }
}

SExpr parse_one(const std::string& text, std::size_t& pos) {
  skip_space(text, pos);
  if (pos >= text.size()) throw SyntaxError("unexpected end of input", pos);
  std::size_t start = pos;
  if (text[pos] == '(') {
    ++pos;
    SExpr list = SExpr::make_list({});
    list.offset = start;
    while (true) {
      skip_space(text, pos);
      if (pos >= text.size()) throw SyntaxError("unterminated list", start);
      if (text[pos] == ')') {
        ++pos;
        return list;
      }
      list.items.push_back(parse_one(text, pos));
    }
  }
  if (text[pos] == ')') throw SyntaxError("unexpected ')'", pos);
  std::string atom;
  while (pos < text.size()) {
    char c = text[pos];
    if (c == '(' || c == ')' || c == ';' || std::isspace(static_cast<unsigned char>(c))) break;
    atom += c;
    ++pos;
  }
  SExpr e = SExpr::make_atom(std::move(atom));
  e.offset = start;
  return e;
}

}  // namespace

SExpr parse_sexpr(const std::string& text) {
  std::size_t pos = 0;
  SExpr e = parse_one(text, pos);
  skip_space(text, pos);
  if (pos < text.size()) throw SyntaxError("trailing input after s-expression", pos);
  return e;
}

std::vector<SExpr> parse_sexprs(const std::string& text) {
  std::vector<SExpr> out;
  std::size_t pos = 0;
  while (true) {
    skip_space(text, pos);
    if (pos >= text.size()) break;
    out.push_back(parse_one(text, pos));
  }
  return out;
}

}  // namespace proofkit
