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

#include "subcover/set_function.hpp"

#include <algorithm>
#include <map>
#include <utility>

namespace subcover {

// ---------------------------------------------------------------------------
// MembershipState

MembershipState::MembershipState(std::size_t n) : position_(n, kAbsent) {}

ElementSet MembershipState::Elements() const {
  ElementSet sorted = members_;
  std::sort(sorted.begin(), sorted.end());
  return sorted;
}

void MembershipState::Insert(ElementId x) {
  position_[x] = members_.size();
  members_.push_back(x);
}

void MembershipState::Erase(ElementId x) {
  const std::size_t at = position_[x];
  const ElementId last = members_.back();
  members_[at] = last;
  position_[last] = at;
  members_.pop_back();
  position_[x] = kAbsent;
}

namespace {

// Fallback state: re-evaluates the whole set for every gain.
class GenericState : public MembershipState {
 public:
  explicit GenericState(const SetFunction& f)
      : MembershipState(f.ground_size()), f_(f), value_(f.Value({})) {}

  double value() const override { return value_; }
  double AddGain(ElementId x) const override {
    ElementSet with = Elements();
    with.insert(std::upper_bound(with.begin(), with.end(), x), x);
    return f_.Value(with) - value_;
  }
  double RemoveGain(ElementId x) const override {
    ElementSet without = Elements();
    without.erase(std::lower_bound(without.begin(), without.end(), x));
    return f_.Value(without) - value_;
  }
  void Add(ElementId x) override {
    Insert(x);
    value_ = f_.Value(Elements());
  }
  void Remove(ElementId x) override {
    Erase(x);
    value_ = f_.Value(Elements());
  }
  std::unique_ptr<SetState> Clone() const override {
    return std::make_unique<GenericState>(*this);
  }

 private:
  const SetFunction& f_;
  double value_;
};

}  // namespace

std::unique_ptr<SetState> SetFunction::NewState() const {
  return std::make_unique<GenericState>(*this);
}

// ---------------------------------------------------------------------------
// CoverageFunction

namespace {

void SortTags(std::vector<std::vector<std::uint32_t>>& tags,
              std::size_t num_tags) {
  for (auto& list : tags) {
    std::sort(list.begin(), list.end());
    list.erase(std::unique(list.begin(), list.end()), list.end());
    if (!list.empty() && list.back() >= num_tags) {
      throw InputError("tag id out of range");
    }
  }
}

class CoverageState : public MembershipState {
 public:
  explicit CoverageState(const CoverageFunction& f)
      : MembershipState(f.ground_size()), f_(f), counts_(f.num_tags(), 0) {}

  double value() const override { return value_; }
  double AddGain(ElementId x) const override {
    double gain = 0.0;
    for (std::uint32_t t : f_.tags_of(x)) {
      if (counts_[t] == 0) gain += f_.tag_weight(t);
    }
    return gain;
  }
  double RemoveGain(ElementId x) const override {
    double loss = 0.0;
    for (std::uint32_t t : f_.tags_of(x)) {
      if (counts_[t] == 1) loss += f_.tag_weight(t);
    }
    return -loss;
  }
  void Add(ElementId x) override {
    value_ += AddGain(x);
    for (std::uint32_t t : f_.tags_of(x)) ++counts_[t];
    Insert(x);
  }
  void Remove(ElementId x) override {
    value_ += RemoveGain(x);
    for (std::uint32_t t : f_.tags_of(x)) --counts_[t];
    Erase(x);
  }
  std::unique_ptr<SetState> Clone() const override {
    return std::make_unique<CoverageState>(*this);
  }

 private:
  const CoverageFunction& f_;
  std::vector<std::uint32_t> counts_;
  double value_ = 0.0;
};

}  // namespace

CoverageFunction::CoverageFunction(std::vector<std::vector<std::uint32_t>> tags,
                                   std::size_t num_tags)
    : tags_(std::move(tags)), weights_(num_tags, 1.0) {
  SortTags(tags_, num_tags);
}

CoverageFunction::CoverageFunction(std::vector<std::vector<std::uint32_t>> tags,
                                   std::vector<double> tag_weights)
    : tags_(std::move(tags)), weights_(std::move(tag_weights)) {
  SortTags(tags_, weights_.size());
  for (double w : weights_) {
    if (w < 0.0) throw InputError("tag weights must be nonnegative");
    if (w != 1.0) unit_weights_ = false;
  }
}

double CoverageFunction::Value(std::span<const ElementId> set) const {
  std::vector<char> seen(weights_.size(), 0);
  double total = 0.0;
  for (ElementId x : set) {
    for (std::uint32_t t : tags_[x]) {
      if (!seen[t]) {
        seen[t] = 1;
        total += weights_[t];
      }
    }
  }
  return total;
}

std::unique_ptr<SetState> CoverageFunction::NewState() const {
  return std::make_unique<CoverageState>(*this);
}

double CoverageFunction::TotalValue() const {
  std::vector<char> seen(weights_.size(), 0);
  for (const auto& list : tags_) {
    for (std::uint32_t t : list) seen[t] = 1;
  }
  double total = 0.0;
  for (std::size_t t = 0; t < seen.size(); ++t) {
    if (seen[t]) total += weights_[t];
  }
  return total;
}

// ---------------------------------------------------------------------------
// GraphCutFunction

namespace {

class CutState : public MembershipState {
 public:
  explicit CutState(const GraphCutFunction& f)
      : MembershipState(f.ground_size()), f_(f) {}

  double value() const override { return value_; }
  // Edges from x into S stop being cut, edges from x out of S start.
  double AddGain(ElementId x) const override {
    double gain = 0.0;
    for (const auto& nb : f_.neighbors(x)) {
      gain += Contains(nb.vertex) ? -nb.weight : nb.weight;
    }
    return gain;
  }
  double RemoveGain(ElementId x) const override {
    double gain = 0.0;
    for (const auto& nb : f_.neighbors(x)) {
      gain += Contains(nb.vertex) ? nb.weight : -nb.weight;
    }
    return gain;
  }
  void Add(ElementId x) override {
    value_ += AddGain(x);
    Insert(x);
  }
  void Remove(ElementId x) override {
    value_ += RemoveGain(x);
    Erase(x);
  }
  std::unique_ptr<SetState> Clone() const override {
    return std::make_unique<CutState>(*this);
  }

 private:
  const GraphCutFunction& f_;
  double value_ = 0.0;
};

}  // namespace

GraphCutFunction::GraphCutFunction(std::size_t num_vertices,
                                   std::span<const WeightedEdge> edges) {
  std::map<std::pair<ElementId, ElementId>, double> merged;
  for (const auto& e : edges) {
    if (e.u >= num_vertices || e.v >= num_vertices) {
      throw InputError("edge endpoint out of range");
    }
    if (e.weight < 0.0) throw InputError("edge weights must be nonnegative");
    if (e.u == e.v) continue;
    merged[std::minmax(e.u, e.v)] += e.weight;
  }
  num_edges_ = merged.size();

  std::vector<std::size_t> degree(num_vertices, 0);
  for (const auto& [key, w] : merged) {
    ++degree[key.first];
    ++degree[key.second];
  }
  offsets_.assign(num_vertices + 1, 0);
  for (std::size_t v = 0; v < num_vertices; ++v) {
    offsets_[v + 1] = offsets_[v] + degree[v];
  }
  adjacency_.resize(offsets_.back());
  std::vector<std::size_t> fill(offsets_.begin(), offsets_.end() - 1);
  for (const auto& [key, w] : merged) {
    adjacency_[fill[key.first]++] = {key.second, w};
    adjacency_[fill[key.second]++] = {key.first, w};
  }
}

double GraphCutFunction::Value(std::span<const ElementId> set) const {
  std::vector<char> in(ground_size(), 0);
  for (ElementId x : set) in[x] = 1;
  double total = 0.0;
  for (ElementId x : set) {
    for (const auto& nb : neighbors(x)) {
      if (!in[nb.vertex]) total += nb.weight;
    }
  }
  return total;
}

std::unique_ptr<SetState> GraphCutFunction::NewState() const {
  return std::make_unique<CutState>(*this);
}

std::vector<WeightedEdge> GraphCutFunction::Edges() const {
  std::vector<WeightedEdge> edges;
  edges.reserve(num_edges_);
  for (ElementId u = 0; u < ground_size(); ++u) {
    for (const auto& nb : neighbors(u)) {
      if (u < nb.vertex) edges.push_back({u, nb.vertex, nb.weight});
    }
  }
  std::sort(edges.begin(), edges.end(), [](const auto& a, const auto& b) {
    return std::tie(a.u, a.v) < std::tie(b.u, b.v);
  });
  return edges;
}

// ---------------------------------------------------------------------------
// TruncatedFunction

namespace {

class TruncatedState : public SetState {
 public:
  TruncatedState(std::unique_ptr<SetState> inner, double tau)
      : inner_(std::move(inner)), tau_(tau) {}

  double value() const override { return std::min(inner_->value(), tau_); }
  double AddGain(ElementId x) const override {
    const double base = inner_->value();
    return std::min(base + inner_->AddGain(x), tau_) - std::min(base, tau_);
  }
  double RemoveGain(ElementId x) const override {
    const double base = inner_->value();
    return std::min(base + inner_->RemoveGain(x), tau_) - std::min(base, tau_);
  }
  void Add(ElementId x) override { inner_->Add(x); }
  void Remove(ElementId x) override { inner_->Remove(x); }
  bool Contains(ElementId x) const override { return inner_->Contains(x); }
  std::size_t size() const override { return inner_->size(); }
  ElementSet Elements() const override { return inner_->Elements(); }
  std::unique_ptr<SetState> Clone() const override {
    return std::make_unique<TruncatedState>(inner_->Clone(), tau_);
  }

 private:
  std::unique_ptr<SetState> inner_;
  double tau_;
};

}  // namespace

TruncatedFunction::TruncatedFunction(std::shared_ptr<const SetFunction> inner,
                                     double tau)
    : inner_(std::move(inner)), tau_(tau) {
  if (!(tau >= 0.0)) throw InputError("truncation threshold must be >= 0");
}

double TruncatedFunction::Value(std::span<const ElementId> set) const {
  return std::min(inner_->Value(set), tau_);
}

std::unique_ptr<SetState> TruncatedFunction::NewState() const {
  return std::make_unique<TruncatedState>(inner_->NewState(), tau_);
}

std::string TruncatedFunction::name() const {
  return "truncated(" + inner_->name() + ")";
}

// ---------------------------------------------------------------------------
// ModularCost

ModularCost::ModularCost(std::vector<double> costs) : costs_(std::move(costs)) {
  for (double c : costs_) {
    if (!(c >= 0.0)) throw InputError("costs must be nonnegative");
  }
}

ModularCost ModularCost::Uniform(std::size_t n, double cost) {
  return ModularCost(std::vector<double>(n, cost));
}

double ModularCost::operator()(std::span<const ElementId> set) const {
  double total = 0.0;
  for (ElementId x : set) total += costs_[x];
  return total;
}

ModularCost ModularCost::Scaled(double factor) const {
  std::vector<double> scaled = costs_;
  for (double& c : scaled) c *= factor;
  return ModularCost(std::move(scaled));
}

// ---------------------------------------------------------------------------
// RegularizedFunction

namespace {

class RegularizedState : public SetState {
 public:
  RegularizedState(std::unique_ptr<SetState> g, const ModularCost& cost,
                   double spent = 0.0)
      : g_(std::move(g)), cost_(cost), spent_(spent) {}

  double value() const override { return g_->value() - spent_; }
  double AddGain(ElementId x) const override {
    return g_->AddGain(x) - cost_[x];
  }
  double RemoveGain(ElementId x) const override {
    return g_->RemoveGain(x) + cost_[x];
  }
  void Add(ElementId x) override {
    g_->Add(x);
    spent_ += cost_[x];
  }
  void Remove(ElementId x) override {
    g_->Remove(x);
    spent_ -= cost_[x];
  }
  bool Contains(ElementId x) const override { return g_->Contains(x); }
  std::size_t size() const override { return g_->size(); }
  ElementSet Elements() const override { return g_->Elements(); }
  std::unique_ptr<SetState> Clone() const override {
    return std::make_unique<RegularizedState>(g_->Clone(), cost_, spent_);
  }

 private:
  std::unique_ptr<SetState> g_;
  const ModularCost& cost_;
  double spent_;
};

}  // namespace

RegularizedFunction::RegularizedFunction(std::shared_ptr<const SetFunction> g,
                                         ModularCost cost)
    : g_(std::move(g)), cost_(std::move(cost)) {
  if (cost_.size() != g_->ground_size()) {
    throw InputError("cost vector size must match the ground set");
  }
}

double RegularizedFunction::Value(std::span<const ElementId> set) const {
  return g_->Value(set) - cost_(set);
}

std::unique_ptr<SetState> RegularizedFunction::NewState() const {
  return std::make_unique<RegularizedState>(g_->NewState(), cost_);
}

std::string RegularizedFunction::name() const {
  return "regularized(" + g_->name() + ")";
}

}  // namespace subcover
