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

#include "subcover/common.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <random>

namespace subcover {

std::string_view ToString(Status status) {
  switch (status) {
    case Status::kSolved:
      return "Solved";
    case Status::kInfeasibleDetected:
      return "InfeasibleDetected";
    case Status::kBudgetExhausted:
      return "BudgetExhausted";
  }
  return "Unknown";
}

Status StatusFromString(std::string_view text) {
  if (text == "Solved") return Status::kSolved;
  if (text == "InfeasibleDetected") return Status::kInfeasibleDetected;
  if (text == "BudgetExhausted") return Status::kBudgetExhausted;
  throw InputError("unknown status: " + std::string(text));
}

void Normalize(ElementSet& ids) {
  std::sort(ids.begin(), ids.end());
  ids.erase(std::unique(ids.begin(), ids.end()), ids.end());
}

bool IsValidSet(const ElementSet& ids, std::size_t n) {
  for (std::size_t i = 0; i < ids.size(); ++i) {
    if (ids[i] >= n) return false;
    if (i > 0 && ids[i] <= ids[i - 1]) return false;
  }
  return true;
}

ElementSet Iota(std::size_t n) {
  ElementSet all(n);
  std::iota(all.begin(), all.end(), ElementId{0});
  return all;
}

void RequireOpenUnit(double value, const char* name) {
  if (!(value > 0.0 && value < 1.0)) {
    throw InputError(std::string(name) + " must lie in (0, 1)");
  }
}

void RequirePositive(double value, const char* name) {
  if (!(value > 0.0) || !std::isfinite(value)) {
    throw InputError(std::string(name) + " must be positive");
  }
}

std::size_t BudgetFromGuess(double guess, std::size_t n) {
  const double floored = std::floor(guess + kTolerance);
  std::size_t budget = floored < 1.0 ? 1 : static_cast<std::size_t>(floored);
  return std::min(budget, std::max<std::size_t>(n, 1));
}

std::uint64_t DeriveSeed(std::uint64_t seed, std::uint64_t a, std::uint64_t b) {
  std::seed_seq seq{static_cast<std::uint32_t>(seed),
                    static_cast<std::uint32_t>(seed >> 32),
                    static_cast<std::uint32_t>(a),
                    static_cast<std::uint32_t>(a >> 32),
                    static_cast<std::uint32_t>(b),
                    static_cast<std::uint32_t>(b >> 32)};
  std::mt19937_64 rng(seq);
  return rng();
}

}  // namespace subcover
