// Copyright 2026 The Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

#pragma once

#include <cstddef>
#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace subcover {

// Elements of the ground set are the dense ids 0..n-1.
using ElementId = std::uint32_t;

// Sorted, duplicate-free sequence of element ids.
using ElementSet = std::vector<ElementId>;

// Absolute slack used for every comparison of a value against a target.
inline constexpr double kTolerance = 1e-9;

inline bool MeetsTarget(double value, double target) {
  return value >= target - kTolerance;
}

// Raised on contract violations by callers (bad parameters, ids out of range).
class InputError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

enum class Status { kSolved, kInfeasibleDetected, kBudgetExhausted };

std::string_view ToString(Status status);
Status StatusFromString(std::string_view text);

// Outcome of one cover run.
struct BicriteriaResult {
  ElementSet solution;
  // Fresh, uncounted evaluation of `solution` under the untruncated objective.
  double f_value = 0.0;
  std::size_t size = 0;
  std::uint64_t queries = 0;
  Status status = Status::kSolved;
  double wall_ms = 0.0;
};

// Sorts and deduplicates `ids` in place.
void Normalize(ElementSet& ids);

// True iff `ids` is strictly increasing and every id is below n.
bool IsValidSet(const ElementSet& ids, std::size_t n);

// The full ground set 0..n-1.
ElementSet Iota(std::size_t n);

// Parameter checks shared by the solvers; throw InputError on failure.
void RequireOpenUnit(double value, const char* name);
void RequirePositive(double value, const char* name);

// Largest budget implied by a real-valued guess: max(1, floor(guess)),
// capped at n. floor(guess) >= k whenever guess >= k for an integer k.
std::size_t BudgetFromGuess(double guess, std::size_t n);

// Deterministic child seed for stream (a, b) of a run seeded with `seed`.
std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t a,
                         std::uint64_t b = 0);

}  // namespace subcover
