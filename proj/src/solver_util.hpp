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

// Plumbing shared by the solvers. Not installed.

#pragma once

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdint>
#include <optional>
#include <random>
#include <span>
#include <vector>

#include "subcover/common.hpp"
#include "subcover/oracle.hpp"

namespace subcover::internal {

// ceil(x), ignoring floating noise just above an integer.
inline std::size_t CeilCount(double x) {
  if (!(x > 0.0)) return 0;
  return static_cast<std::size_t>(std::ceil(x - kTolerance));
}

struct Pick {
  ElementId element = 0;
  double gain = 0.0;
};

// Best gain among `candidates` not yet in the session. Candidates must be
// in increasing id order: a later candidate wins only if it beats the
// incumbent by more than kTolerance, so ties go to the lowest id.
inline std::optional<Pick> BestGain(const Session& session,
                                    std::span<const ElementId> candidates) {
  std::optional<Pick> best;
  for (ElementId x : candidates) {
    if (session.Contains(x)) continue;
    const double gain = session.Gain(x);
    if (!best || gain > best->gain + kTolerance) best = Pick{x, gain};
  }
  return best;
}

// Uniform sample without replacement, returned sorted. `pool` holds a
// permutation of the ground set and is reshuffled in place.
inline std::vector<ElementId> SampleSorted(std::vector<ElementId>& pool,
                                           std::size_t count,
                                           std::mt19937_64& rng) {
  count = std::min(count, pool.size());
  for (std::size_t i = 0; i < count; ++i) {
    std::uniform_int_distribution<std::size_t> pick(i, pool.size() - 1);
    std::swap(pool[i], pool[pick(rng)]);
  }
  std::vector<ElementId> sample(pool.begin(), pool.begin() + count);
  std::sort(sample.begin(), sample.end());
  return sample;
}

// Measures queries and wall time of one solver run.
class RunMeter {
 public:
  explicit RunMeter(const Oracle& oracle)
      : oracle_(oracle),
        start_queries_(oracle.queries()),
        start_(std::chrono::steady_clock::now()) {}

  BicriteriaResult Finish(ElementSet solution, Status status) const {
    BicriteriaResult result;
    result.f_value = oracle_.Peek(solution);
    result.size = solution.size();
    result.solution = std::move(solution);
    result.queries = oracle_.queries() - start_queries_;
    result.status = status;
    result.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start_)
                         .count();
    return result;
  }

 private:
  Oracle oracle_;
  std::uint64_t start_queries_;
  std::chrono::steady_clock::time_point start_;
};

inline void RequireThreshold(double tau) {
  if (!(tau >= 0.0) || !std::isfinite(tau)) {
    throw InputError("threshold tau must be finite and >= 0");
  }
}

}  // namespace subcover::internal
