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

#include "subcover/instances.hpp"

#include <cmath>
#include <random>
#include <vector>

namespace subcover {

namespace {

void RequireProbability(double p, const char* name) {
  if (!(p >= 0.0 && p <= 1.0)) {
    throw InputError(std::string(name) + " must lie in [0, 1]");
  }
}

}  // namespace

std::shared_ptr<const CoverageFunction> MakeSyntheticSummarization(
    const SyntheticSummarizationParams& params, std::uint64_t seed) {
  RequireProbability(params.p_head, "p_head");
  RequireProbability(params.p_tail, "p_tail");
  if (params.head_size > params.num_tags) {
    throw InputError("head_size must not exceed the tag count");
  }
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution head(params.p_head);
  std::bernoulli_distribution tail(params.p_tail);

  std::vector<std::vector<std::uint32_t>> tags(params.num_elements);
  for (auto& list : tags) {
    for (std::uint32_t t = 0; t < params.num_tags; ++t) {
      const bool take = t < params.head_size ? head(rng) : tail(rng);
      if (take) list.push_back(t);
    }
  }
  return std::make_shared<CoverageFunction>(std::move(tags), params.num_tags);
}

TightnessInstance MakeGreedyTightnessInstance(std::size_t k, double l,
                                              double min_slice) {
  if (k < 2) throw InputError("tightness instance requires k >= 2");
  if (!(l > 0.0)) throw InputError("group measure l must be positive");
  if (!(min_slice > 0.0)) throw InputError("min_slice must be positive");

  const double shrink = 1.0 - 1.0 / static_cast<double>(k);
  std::vector<double> slices;
  for (double w = l / static_cast<double>(k); w >= min_slice; w *= shrink) {
    slices.push_back(w);
  }
  const std::size_t num_slices = slices.size();
  // Per group: the A slices, then the leftover l * shrink^J that only S_i
  // covers.
  const std::size_t per_group = num_slices + 1;
  const double leftover = l * std::pow(shrink, static_cast<double>(num_slices));
  std::vector<double> weights(k * per_group);
  for (std::size_t g = 0; g < k; ++g) {
    for (std::size_t j = 0; j < num_slices; ++j) {
      weights[g * per_group + j] = slices[j];
    }
    weights[g * per_group + num_slices] = leftover;
  }

  std::vector<std::vector<std::uint32_t>> tags;
  tags.reserve(num_slices + k);
  for (std::size_t j = 0; j < num_slices; ++j) {
    std::vector<std::uint32_t> a;
    for (std::size_t g = 0; g < k; ++g) {
      a.push_back(static_cast<std::uint32_t>(g * per_group + j));
    }
    tags.push_back(std::move(a));
  }
  for (std::size_t g = 0; g < k; ++g) {
    std::vector<std::uint32_t> s;
    for (std::size_t j = 0; j < per_group; ++j) {
      s.push_back(static_cast<std::uint32_t>(g * per_group + j));
    }
    tags.push_back(std::move(s));
  }

  TightnessInstance instance;
  instance.function =
      std::make_shared<CoverageFunction>(std::move(tags), std::move(weights));
  instance.tau = static_cast<double>(k) * l;
  instance.k = k;
  instance.num_a_sets = num_slices;
  return instance;
}

std::shared_ptr<const GraphCutFunction> MakeRandomGraphCut(std::size_t n,
                                                           double p,
                                                           std::uint64_t seed,
                                                           double max_weight) {
  RequireProbability(p, "edge probability");
  std::mt19937_64 rng(seed);
  std::bernoulli_distribution coin(p);
  std::uniform_real_distribution<double> weight(0.0, max_weight);
  std::vector<WeightedEdge> edges;
  for (ElementId u = 0; u < n; ++u) {
    for (ElementId v = u + 1; v < n; ++v) {
      if (!coin(rng)) continue;
      double w = 1.0;
      if (max_weight > 0.0) {
        w = max_weight - weight(rng);  // (0, max_weight]
      }
      edges.push_back({u, v, w});
    }
  }
  return std::make_shared<GraphCutFunction>(n, edges);
}

std::shared_ptr<const CoverageFunction> MakeRandomCoverage(std::size_t n,
                                                           std::size_t num_tags,
                                                           double p,
                                                           std::uint64_t seed) {
  SyntheticSummarizationParams params;
  params.num_tags = num_tags;
  params.num_elements = n;
  params.p_head = p;
  params.p_tail = p;
  params.head_size = num_tags;
  return MakeSyntheticSummarization(params, seed);
}

}  // namespace subcover
