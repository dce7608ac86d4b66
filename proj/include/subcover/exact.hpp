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

// Brute-force reference solvers for small ground sets.
//
// Subsets are visited by size, then lexicographically, so ties resolve to
// the smallest and then lexicographically least set. Every solver refuses
// ground sets larger than a guard, 20 unless SUBCOVER_EXACT_GUARD says
// otherwise.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>

#include "subcover/common.hpp"
#include "subcover/instances.hpp"

namespace subcover {

struct ExactResult {
  ElementSet optimum_set;
  double optimum_value = 0.0;
  std::uint64_t enumerated = 0;
};

class GuardError : public InputError {
 public:
  using InputError::InputError;
};

inline constexpr std::size_t kDefaultExactGuard = 20;

// SUBCOVER_EXACT_GUARD if set, else kDefaultExactGuard.
std::size_t ExactGuard();

// Calls `visit` on every subset of 0..n-1 with at most max_size elements,
// in size-then-lexicographic order, until it returns false. Returns the
// number of subsets visited.
std::uint64_t ForEachSubset(std::size_t n, std::size_t max_size,
                            const std::function<bool(const ElementSet&)>& visit);

// Smallest X with f(X) >= tau; nothing if no such set exists.
std::optional<ExactResult> ExactMinCover(const CoverInstance& instance,
                                         std::size_t max_n = ExactGuard());

// max f(X) over |X| <= kappa.
ExactResult ExactMaxSmp(const Oracle& oracle, std::size_t kappa,
                        std::size_t max_n = ExactGuard());

// max g(X) - c(X) over |X| <= kappa.
ExactResult ExactMaxRegularized(const RegularizedInstance& instance,
                                std::size_t kappa,
                                std::size_t max_n = ExactGuard());

// Smallest X with g(X) - c(X) >= instance.tau.
std::optional<ExactResult> ExactMinRegularizedCover(
    const RegularizedInstance& instance, std::size_t max_n = ExactGuard());

}  // namespace subcover
