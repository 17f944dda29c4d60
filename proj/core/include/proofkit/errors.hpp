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

#ifndef PROOFKIT_ERRORS_HPP
#define PROOFKIT_ERRORS_HPP

#include <stdexcept>
#include <string>

namespace proofkit {

// Base class for all precondition and construction failures raised by the
// library. Checkers never throw; they collect violations into a report.
struct ProofError : std::runtime_error {
  explicit ProofError(const std::string& msg) : std::runtime_error(msg) {}
};

// Text could not be parsed. `position` is a byte offset into the input.
struct SyntaxError : ProofError {
  SyntaxError(const std::string& msg, std::size_t position)
      : ProofError(msg + " (at offset " + std::to_string(position) + ")"),
        position(position) {}
  std::size_t position;
};

// A rewriting procedure ran out of its step budget.
struct FuelExhausted : ProofError {
  explicit FuelExhausted(const std::string& msg) : ProofError(msg) {}
};

}  // namespace proofkit

#endif  // PROOFKIT_ERRORS_HPP
