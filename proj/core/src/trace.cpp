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

#include "proofkit/trace.hpp"

#include "proofkit/errors.hpp"

namespace proofkit {

const std::set<std::string>& LassoTrace::state(std::size_t position) const {
  if (position < prefix.size()) return prefix[position];
  if (loop.empty()) throw ProofError("lasso trace has an empty loop");
  return loop[(position - prefix.size()) % loop.size()];
}

std::string LassoTrace::str() const {
  auto render_states = [](const std::vector<std::set<std::string>>& states) {
    std::string out;
    for (std::size_t n = 0; n < states.size(); ++n) {
      if (n > 0) out += " ";
      out += "{";
      bool first = true;
      for (const auto& v : states[n]) {
        if (!first) out += ",";
        out += v;
        first = false;
      }
      out += "}";
    }
    return out;
  };
  return "prefix: " + render_states(prefix) + " loop: " + render_states(loop);
}

namespace {

// Positions at or beyond period_start wrap around; fold them into the first
// loop pass so the recursion only ever sees distinct positions.
std::size_t canonical_position(const LassoTrace& t, std::size_t position) {
  std::size_t start = t.period_start();
  if (position < start) return position;
  return start + (position - start) % t.loop.size();
}

bool eval_at(const Formula& f, const LassoTrace& t, std::size_t position) {
  position = canonical_position(t, position);
  switch (f.tag()) {
    case Conn::Var:
      return t.state(position).count(f.name()) > 0;
    case Conn::Imp:
      return !eval_at(f.lhs(), t, position) || eval_at(f.rhs(), t, position);
    case Conn::Neg:
      return !eval_at(f.body(), t, position);
    case Conn::And:
      return eval_at(f.lhs(), t, position) && eval_at(f.rhs(), t, position);
    case Conn::Or:
      return eval_at(f.lhs(), t, position) || eval_at(f.rhs(), t, position);
    case Conn::Next: {
      const IndexExpr& p = f.power();
      if (!p.is_constant())
        throw ProofError("cannot evaluate a schematic next-time prefix on a trace");
      return eval_at(f.body(), t, position + p.constant_part());
    }
    case Conn::G: {
      // From inside the loop every loop position lies in the future, so the
      // scan covers the whole loop, not just offsets at or past `position`.
      std::size_t bound = t.distinct_positions();
      std::size_t start = position < t.period_start() ? position : t.period_start();
      for (std::size_t q = start; q < bound; ++q)
        if (!eval_at(f.body(), t, q)) return false;
      return true;
    }
    case Conn::F: {
      std::size_t bound = t.distinct_positions();
      std::size_t start = position < t.period_start() ? position : t.period_start();
      for (std::size_t q = start; q < bound; ++q)
        if (eval_at(f.body(), t, q)) return true;
      return false;
    }
  }
  return false;
}

}  // namespace

bool eval_on_trace(const Formula& f, const LassoTrace& trace, std::size_t position) {
  if (!f.valid()) throw ProofError("cannot evaluate an empty formula");
  if (trace.loop.empty()) throw ProofError("lasso trace has an empty loop");
  return eval_at(f, trace, position);
}

std::optional<LassoTrace> find_falsifying_trace(const Formula& f,
                                                const std::vector<std::string>& vars,
                                                std::size_t max_states) {
  std::vector<std::set<std::string>> alphabet;
  std::size_t combos = std::size_t{1} << vars.size();
  for (std::size_t mask = 0; mask < combos; ++mask) {
    std::set<std::string> state;
    for (std::size_t v = 0; v < vars.size(); ++v)
      if (mask & (std::size_t{1} << v)) state.insert(vars[v]);
    alphabet.push_back(std::move(state));
  }

  for (std::size_t total = 1; total <= max_states; ++total) {
    for (std::size_t loop_len = 1; loop_len <= total; ++loop_len) {
      std::size_t prefix_len = total - loop_len;
      // Odometer over alphabet^total.
      std::vector<std::size_t> digits(total, 0);
      while (true) {
        LassoTrace t;
        for (std::size_t n = 0; n < prefix_len; ++n) t.prefix.push_back(alphabet[digits[n]]);
        for (std::size_t n = prefix_len; n < total; ++n) t.loop.push_back(alphabet[digits[n]]);
        if (!eval_on_trace(f, t, 0)) return t;
        std::size_t d = 0;
        for (; d < total; ++d) {
          if (++digits[d] < alphabet.size()) break;
          digits[d] = 0;
        }
        if (d == total) break;
      }
    }
  }
  return std::nullopt;
}

bool valid_on_all_traces(const Formula& f, std::size_t max_states) {
  std::set<std::string> vars;
  f.collect_prop_vars(vars);
  std::vector<std::string> var_list(vars.begin(), vars.end());
  if (var_list.empty()) var_list.push_back("p");
  return !find_falsifying_trace(f, var_list, max_states).has_value();
}

}  // namespace proofkit
