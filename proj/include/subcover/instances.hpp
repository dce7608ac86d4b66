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
#include <memory>

#include "subcover/oracle.hpp"
#include "subcover/set_function.hpp"

namespace subcover {

// Minimize |X| subject to f(X) >= tau.
struct CoverInstance {
  Oracle oracle;
  double tau = 0.0;
};

// Maximize f(X) subject to |X| <= kappa.
struct SmpInstance {
  Oracle oracle;
  std::size_t kappa = 1;
};

// Objective g - c with g monotone nonnegative submodular and c modular.
// `kappa` is used by the maximization solvers, `tau` by the cover solvers.
struct RegularizedInstance {
  Oracle g;
  ModularCost cost;
  std::size_t kappa = 1;
  double tau = 0.0;
};

// Tag-coverage instance with a dense "head" of popular tags and a sparse
// tail. Defaults are the full-size synthetic benchmark.
struct SyntheticSummarizationParams {
  std::size_t num_tags = 4000;
  std::size_t num_elements = 2000;
  double p_head = 0.4;
  double p_tail = 0.002;
  std::size_t head_size = 250;
};

// Element e receives tag i < head_size with probability p_head and tag
// i >= head_size with probability p_tail, independently. Deterministic in
// `seed`.
std::shared_ptr<const CoverageFunction> MakeSyntheticSummarization(
    const SyntheticSummarizationParams& params, std::uint64_t seed);

// Set-cover instance on which greedy is forced down the geometric "A" chain.
//
// The universe is k groups of measure l each. Set S_i covers group i. Set A_j
// covers, from every group, the next slice of measure (1-1/k)^(j-1) * l/k.
// Slices are emitted while their measure is at least `min_slice`; the rest of
// each group, l * (1-1/k)^J, is covered by S_i alone. Slices are fractional,
// so the coverage uses weighted tags (one tag per group slice).
//
// A sets get the lowest ids, so greedy's lowest-id tie-breaking keeps picking
// them. OPT = {S_1..S_k}, tau = k * l.
struct TightnessInstance {
  std::shared_ptr<const CoverageFunction> function;
  double tau = 0.0;
  std::size_t k = 0;
  std::size_t num_a_sets = 0;

  bool IsASet(ElementId id) const { return id < num_a_sets; }
  ElementId ASet(std::size_t j) const { return static_cast<ElementId>(j - 1); }
  ElementId SSet(std::size_t i) const {
    return static_cast<ElementId>(num_a_sets + i - 1);
  }
};

TightnessInstance MakeGreedyTightnessInstance(std::size_t k, double l,
                                              double min_slice = 1.0);

// Erdos-Renyi G(n, p) cut function; unit weights unless `max_weight` > 0, in
// which case weights are uniform in (0, max_weight].
std::shared_ptr<const GraphCutFunction> MakeRandomGraphCut(
    std::size_t n, double p, std::uint64_t seed, double max_weight = 0.0);

// Every element receives each of `num_tags` tags with probability p.
std::shared_ptr<const CoverageFunction> MakeRandomCoverage(
    std::size_t n, std::size_t num_tags, double p, std::uint64_t seed);

}  // namespace subcover
