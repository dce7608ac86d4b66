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

//
// Cover for general (possibly non-monotone) submodular functions
//
// StreamCover keeps ceil(2/eps) disjoint buckets filled by threshold passes
// over U and, after each pass, solves a maximization problem over their
// union. The maximization subroutine is pluggable.

#pragma once

#include <chrono>
#include <cstdint>
#include <functional>
#include <optional>
#include <ostream>
#include <string_view>
#include <vector>

#include "subcover/common.hpp"
#include "subcover/instances.hpp"

namespace subcover {

enum class SmpSubroutine { kRandomGreedy, kDoubleGreedy, kExact, kFastExact };

// Fraction of (1 - eps) tau a subroutine result must reach: 1/e for random
// greedy, 1/2 for double greedy, 1 for the exact searches.
double StopFraction(SmpSubroutine kind);

// "rg", "dg", "ex", "fex".
std::string_view ToString(SmpSubroutine kind);
SmpSubroutine SubroutineFromString(std::string_view text);

// Random greedy for max f(X), |X| <= kappa, over `ground`. Each of kappa
// rounds ranks the positive-gain elements, pads the top kappa with dummies of
// gain zero and adds one slot uniformly at random (dummies add nothing).
ElementSet RandomGreedySmp(const Oracle& oracle, const ElementSet& ground,
                           std::size_t kappa, std::uint64_t seed);
ElementSet RandomGreedySmp(const SmpInstance& instance, std::uint64_t seed);

// Randomized double greedy for unconstrained maximization over `ground`,
// scanned in id order. Element x goes to X with probability a'/(a' + b'),
// where a' and b' are the clipped gains of adding x to X and of removing it
// from Y; a' = b' = 0 adds it.
ElementSet DoubleGreedyUsm(const Oracle& oracle, const ElementSet& ground,
                           std::uint64_t seed);
ElementSet DoubleGreedyUsm(const Oracle& oracle, std::uint64_t seed);

struct SearchResult {
  ElementSet set;
  double value = 0.0;
  bool met_target = false;
  bool timed_out = false;
  std::uint64_t nodes = 0;
  // Fast exact only: size of the non-monotone part that was searched.
  std::size_t nonmonotone = 0;
};

// Zero disables the timeout.
using SearchTimeout = std::chrono::milliseconds;

// Exact search for max f(X), X subset of `ground`, |X| <= kappa.
//
// Tries greedy first; if the greedy prefix misses `target`, searches subsets
// depth first, children ordered by decreasing current marginal gain. Returns
// the first set reaching `target`, or the best set seen. With an infinite
// target the result is a true maximizer unless the search timed out.
SearchResult ExactSmp(const Oracle& oracle, const ElementSet& ground,
                      std::size_t kappa, double target,
                      SearchTimeout timeout = SearchTimeout::zero());

struct MonotonePartition {
  ElementSet monotone;
  ElementSet nonmonotone;
};

// Splits T by the sign of f(T) - f(T - x), with tolerance.
MonotonePartition ClassifyMonotoneElements(const Oracle& oracle,
                                           const ElementSet& t);

// Exact search that fixes the monotone elements of `ground` and enumerates
// subsets of the rest. Only valid unconstrained; falls back to ExactSmp
// when kappa < |ground|.
SearchResult FastExactSmp(const Oracle& oracle, const ElementSet& ground,
                          std::size_t kappa, double target,
                          SearchTimeout timeout = SearchTimeout::zero());

// Disjoint buckets S_1..S_m with a shared size cap.
class BucketState {
 public:
  BucketState(const Oracle& oracle, std::size_t num_buckets, std::size_t cap);

  // Puts u in the first bucket with room whose gain clears `threshold`.
  // Returns the bucket index, or nothing if u was discarded or is stored.
  std::optional<std::size_t> Offer(ElementId u, double threshold);

  void Clear();
  void set_cap(std::size_t cap) { cap_ = cap; }

  std::size_t num_buckets() const { return buckets_.size(); }
  std::size_t cap() const { return cap_; }
  std::size_t stored() const;
  ElementSet Bucket(std::size_t j) const { return buckets_[j].Elements(); }
  ElementSet Union() const;

  // Pairwise disjoint and every bucket within the cap.
  bool CheckInvariants() const;

 private:
  Oracle oracle_;
  std::size_t cap_;
  std::vector<Session> buckets_;
  std::vector<bool> stored_;
};

struct StreamPass {
  double g = 0.0;
  std::size_t stored = 0;
  std::size_t union_size = 0;
  std::size_t nonmonotone = 0;  // only filled for the fast exact subroutine
  double smp_value = 0.0;
};

struct StreamOptions {
  // Keep bucket contents across guesses instead of emptying them.
  bool retain_buckets = false;
  // Stream U in a seeded random order instead of id order.
  bool shuffle = false;
  // First guess of |OPT|; values <= 0 select 1 + alpha.
  double initial_guess = 0.0;
  // Per subroutine call; zero disables.
  SearchTimeout timeout = SearchTimeout::zero();
  // Receives "g=<val> stored=<count> smp_value=<val>" per pass.
  std::ostream* trace = nullptr;
  // Called after every offered element.
  std::function<void(const BucketState&)> observer;
  std::vector<StreamPass>* passes = nullptr;
};

BicriteriaResult StreamCover(const CoverInstance& instance, double eps,
                             double alpha, SmpSubroutine sub,
                             std::uint64_t seed,
                             const StreamOptions& options = {});

}  // namespace subcover
