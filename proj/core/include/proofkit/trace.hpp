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

#ifndef PROOFKIT_TRACE_HPP
#define PROOFKIT_TRACE_HPP

#include <cstddef>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "proofkit/formula.hpp"

namespace proofkit {

/// An ultimately periodic trace prefix.loop^omega, used as a finite semantic
/// test oracle. Each state is the set of propositional variables true there.
/// The loop must be nonempty.
struct LassoTrace {
  std::vector<std::set<std::string>> prefix;
  std::vector<std::set<std::string>> loop;

  std::size_t period_start() const { return prefix.size(); }
  std::size_t distinct_positions() const { return prefix.size() + loop.size(); }
  const std::set<std::string>& state(std::size_t position) const;

  std::string str() const;
};

/// Standard semantics on the lasso: X shifts the position, G and F quantify
/// over all later positions, decided on the finitely many distinct positions
/// of the lasso. The formula must be concrete.
bool eval_on_trace(const Formula& f, const LassoTrace& trace, std::size_t position);

/// Enumerates every lasso over `vars` with prefix+loop <= max_states and
/// returns the first trace whose position 0 falsifies `f`, or nullopt when
/// `f` holds on all of them.
std::optional<LassoTrace> find_falsifying_trace(const Formula& f,
                                                const std::vector<std::string>& vars,
                                                std::size_t max_states);

/// True when no falsifying lasso of the given size bound exists.
bool valid_on_all_traces(const Formula& f, std::size_t max_states = 6);

}  // namespace proofkit

#endif  // PROOFKIT_TRACE_HPP
