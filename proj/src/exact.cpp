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

#include "subcover/exact.hpp"

#include <charconv>
#include <cstdlib>
#include <cstring>
#include <string>

namespace subcover {

std::size_t ExactGuard() {
  const char* text = std::getenv("SUBCOVER_EXACT_GUARD");
  if (text == nullptr || *text == '\0') return kDefaultExactGuard;
  std::size_t guard = 0;
  const char* end = text + std::strlen(text);
  auto [ptr, ec] = std::from_chars(text, end, guard);
  if (ec != std::errc() || ptr != end) {
    throw InputError("SUBCOVER_EXACT_GUARD must be a non-negative integer");
  }
  return guard;
}

std::uint64_t ForEachSubset(std::size_t n, std::size_t max_size,
                            const std::function<bool(const ElementSet&)>& visit) {
  std::uint64_t visited = 0;
  max_size = std::min(max_size, n);
  ElementSet set;
  for (std::size_t size = 0; size <= max_size; ++size) {
    set.resize(size);
    for (std::size_t i = 0; i < size; ++i) set[i] = static_cast<ElementId>(i);
    while (true) {
      ++visited;
      if (!visit(set)) return visited;
      // Next combination: bump the rightmost slot that still has room.
      std::size_t i = size;
      while (i > 0 && set[i - 1] == n - size + i - 1) --i;
      if (i == 0) break;
      ++set[i - 1];
      for (std::size_t j = i; j < size; ++j) set[j] = set[j - 1] + 1;
    }
  }
  return visited;
}

namespace {

void CheckGuard(std::size_t n, std::size_t max_n) {
  if (n > max_n) {
    throw GuardError("exact search refused: n = " + std::to_string(n) +
                     " exceeds the guard " + std::to_string(max_n));
  }
}

std::optional<ExactResult> MinCover(const SetFunction& f, std::size_t max_n,
                                    double tau) {
  CheckGuard(f.ground_size(), max_n);
  std::optional<ExactResult> found;
  const std::uint64_t visited =
      ForEachSubset(f.ground_size(), f.ground_size(), [&](const ElementSet& x) {
        const double value = f.Value(x);
        if (!MeetsTarget(value, tau)) return true;
        found = ExactResult{x, value, 0};
        return false;
      });
  if (found) found->enumerated = visited;
  return found;
}

ExactResult MaxOver(const SetFunction& f, std::size_t kappa, std::size_t max_n) {
  CheckGuard(f.ground_size(), max_n);
  ExactResult best;
  bool first = true;
  best.enumerated = ForEachSubset(f.ground_size(), kappa, [&](const ElementSet& x) {
    const double value = f.Value(x);
    if (first || value > best.optimum_value + kTolerance) {
      best.optimum_set = x;
      best.optimum_value = value;
      first = false;
    }
    return true;
  });
  return best;
}

}  // namespace

std::optional<ExactResult> ExactMinCover(const CoverInstance& instance,
                                         std::size_t max_n) {
  auto result = MinCover(instance.oracle.function(), max_n, instance.tau);
  return result;
}

ExactResult ExactMaxSmp(const Oracle& oracle, std::size_t kappa,
                        std::size_t max_n) {
  return MaxOver(oracle.function(), kappa, max_n);
}

ExactResult ExactMaxRegularized(const RegularizedInstance& instance,
                                std::size_t kappa, std::size_t max_n) {
  return MaxOver(Regularize(instance.g, instance.cost).function(), kappa, max_n);
}

std::optional<ExactResult> ExactMinRegularizedCover(
    const RegularizedInstance& instance, std::size_t max_n) {
  return MinCover(Regularize(instance.g, instance.cost).function(), max_n,
                  instance.tau);
}

}  // namespace subcover
