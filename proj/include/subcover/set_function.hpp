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
// Set functions
//
// A SetFunction is an immutable map from subsets of 0..n-1 to reals. Besides
// whole-set evaluation it can hand out a SetState, which tracks one evolving
// set S and answers f(S + x) - f(S) and f(S - x) - f(S) without re-evaluating
// S from scratch. Query accounting lives one level up, in Oracle.

#pragma once

#include <cstddef>
#include <memory>
#include <span>
#include <string>
#include <vector>

#include "subcover/common.hpp"

namespace subcover {

class SetState {
 public:
  virtual ~SetState() = default;

  // f(S).
  virtual double value() const = 0;
  // f(S + x) - f(S); requires x not in S.
  virtual double AddGain(ElementId x) const = 0;
  // f(S - x) - f(S); requires x in S.
  virtual double RemoveGain(ElementId x) const = 0;
  virtual void Add(ElementId x) = 0;
  virtual void Remove(ElementId x) = 0;

  virtual bool Contains(ElementId x) const = 0;
  virtual std::size_t size() const = 0;
  // Current members, sorted.
  virtual ElementSet Elements() const = 0;

  virtual std::unique_ptr<SetState> Clone() const = 0;
};

class SetFunction {
 public:
  virtual ~SetFunction() = default;

  virtual std::size_t ground_size() const = 0;
  // `set` must be sorted and duplicate-free; not re-validated here.
  virtual double Value(std::span<const ElementId> set) const = 0;
  // State for the empty set. The default re-evaluates Value on every gain.
  virtual std::unique_ptr<SetState> NewState() const;

  virtual std::string name() const = 0;
  virtual bool is_monotone() const = 0;
  virtual bool is_nonnegative() const = 0;
};

// Tracks membership of an evolving set; derived states maintain the value.
class MembershipState : public SetState {
 public:
  explicit MembershipState(std::size_t n);

  bool Contains(ElementId x) const override { return position_[x] != kAbsent; }
  std::size_t size() const override { return members_.size(); }
  ElementSet Elements() const override;

 protected:
  void Insert(ElementId x);
  void Erase(ElementId x);

 private:
  static constexpr std::size_t kAbsent = static_cast<std::size_t>(-1);
  std::vector<std::size_t> position_;
  std::vector<ElementId> members_;
};

// f(S) = total weight of the union of the tag sets of S. Unit weights by
// default. Monotone, submodular, f(empty) = 0.
class CoverageFunction : public SetFunction {
 public:
  CoverageFunction(std::vector<std::vector<std::uint32_t>> tags,
                   std::size_t num_tags);
  CoverageFunction(std::vector<std::vector<std::uint32_t>> tags,
                   std::vector<double> tag_weights);

  std::size_t ground_size() const override { return tags_.size(); }
  double Value(std::span<const ElementId> set) const override;
  std::unique_ptr<SetState> NewState() const override;
  std::string name() const override { return "coverage"; }
  bool is_monotone() const override { return true; }
  bool is_nonnegative() const override { return true; }

  std::size_t num_tags() const { return weights_.size(); }
  // Sorted, duplicate-free tag ids of element x.
  const std::vector<std::uint32_t>& tags_of(ElementId x) const {
    return tags_[x];
  }
  double tag_weight(std::uint32_t tag) const { return weights_[tag]; }
  bool unit_weights() const { return unit_weights_; }
  // f(U).
  double TotalValue() const;

 private:
  std::vector<std::vector<std::uint32_t>> tags_;
  std::vector<double> weights_;
  bool unit_weights_ = true;
};

struct WeightedEdge {
  ElementId u;
  ElementId v;
  double weight;
};

// f(S) = total weight of edges with exactly one endpoint in S. Undirected,
// no self-loops. Submodular, nonnegative, f(empty) = f(V) = 0.
class GraphCutFunction : public SetFunction {
 public:
  // Parallel edges are merged by summing weights; self-loops are dropped.
  GraphCutFunction(std::size_t num_vertices, std::span<const WeightedEdge> edges);

  std::size_t ground_size() const override { return offsets_.size() - 1; }
  double Value(std::span<const ElementId> set) const override;
  std::unique_ptr<SetState> NewState() const override;
  std::string name() const override { return "graph-cut"; }
  bool is_monotone() const override { return false; }
  bool is_nonnegative() const override { return true; }

  std::size_t num_edges() const { return num_edges_; }
  // Each undirected edge once, with u < v, sorted by (u, v).
  std::vector<WeightedEdge> Edges() const;

  struct Neighbor {
    ElementId vertex;
    double weight;
  };
  std::span<const Neighbor> neighbors(ElementId x) const {
    return {adjacency_.data() + offsets_[x], adjacency_.data() + offsets_[x + 1]};
  }

 private:
  std::vector<std::size_t> offsets_;
  std::vector<Neighbor> adjacency_;
  std::size_t num_edges_ = 0;
};

// min(inner(S), tau). Preserves monotonicity and submodularity of inner.
class TruncatedFunction : public SetFunction {
 public:
  TruncatedFunction(std::shared_ptr<const SetFunction> inner, double tau);

  std::size_t ground_size() const override { return inner_->ground_size(); }
  double Value(std::span<const ElementId> set) const override;
  std::unique_ptr<SetState> NewState() const override;
  std::string name() const override;
  bool is_monotone() const override { return inner_->is_monotone(); }
  bool is_nonnegative() const override { return inner_->is_nonnegative(); }

  double tau() const { return tau_; }
  const SetFunction& inner() const { return *inner_; }

 private:
  std::shared_ptr<const SetFunction> inner_;
  double tau_;
};

// c(X) = sum of per-element nonnegative costs.
class ModularCost {
 public:
  ModularCost() = default;
  explicit ModularCost(std::vector<double> costs);
  static ModularCost Uniform(std::size_t n, double cost);

  double operator()(std::span<const ElementId> set) const;
  double operator[](ElementId x) const { return costs_[x]; }
  std::size_t size() const { return costs_.size(); }
  const std::vector<double>& costs() const { return costs_; }
  ModularCost Scaled(double factor) const;

 private:
  std::vector<double> costs_;
};

// g(S) - c(S) for monotone nonnegative g and modular cost c.
class RegularizedFunction : public SetFunction {
 public:
  RegularizedFunction(std::shared_ptr<const SetFunction> g, ModularCost cost);

  std::size_t ground_size() const override { return g_->ground_size(); }
  double Value(std::span<const ElementId> set) const override;
  std::unique_ptr<SetState> NewState() const override;
  std::string name() const override;
  bool is_monotone() const override { return false; }
  bool is_nonnegative() const override { return false; }

  const SetFunction& g() const { return *g_; }
  const ModularCost& cost() const { return cost_; }

 private:
  std::shared_ptr<const SetFunction> g_;
  ModularCost cost_;
};

}  // namespace subcover
