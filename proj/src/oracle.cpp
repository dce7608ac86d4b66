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

#include "subcover/oracle.hpp"

#include <algorithm>
#include <string>
#include <utility>

namespace subcover {

Oracle::Oracle(std::shared_ptr<const SetFunction> function)
    : function_(std::move(function)),
      counter_(std::make_shared<std::atomic<std::uint64_t>>(0)) {
  if (!function_) throw InputError("oracle requires a set function");
}

void Oracle::Validate(const ElementSet& set) const {
  if (!IsValidSet(set, n())) {
    throw InputError("element set must be sorted, unique and within 0.." +
                     std::to_string(n()) + "-1");
  }
}

double Oracle::Eval(const ElementSet& set) const {
  Validate(set);
  Charge(1);
  return function_->Value(set);
}

double Oracle::MarginalGain(const ElementSet& set, ElementId x) const {
  Validate(set);
  if (x >= n()) throw InputError("element id out of range");
  auto at = std::lower_bound(set.begin(), set.end(), x);
  if (at != set.end() && *at == x) {
    throw InputError("marginal gain requires x outside the set");
  }
  ElementSet with = set;
  with.insert(with.begin() + (at - set.begin()), x);
  Charge(2);
  return function_->Value(with) - function_->Value(set);
}

double Oracle::Peek(const ElementSet& set) const {
  Validate(set);
  return function_->Value(set);
}

Session Oracle::NewSession() const {
  Charge(1);
  return Session(*this, function_->NewState());
}

Oracle Oracle::Clone() const { return Oracle(function_); }

Oracle Oracle::WithFunction(std::shared_ptr<const SetFunction> function) const {
  Oracle derived(std::move(function));
  derived.counter_ = counter_;
  return derived;
}

Session::Session(Oracle oracle, std::unique_ptr<SetState> state)
    : oracle_(std::move(oracle)), state_(std::move(state)) {}

void Session::CheckId(ElementId x) const {
  if (x >= oracle_.n()) throw InputError("element id out of range");
}

double Session::Gain(ElementId x) const {
  CheckId(x);
  if (state_->Contains(x)) {
    throw InputError("marginal gain requires x outside the set");
  }
  oracle_.Charge(1);
  return state_->AddGain(x);
}

double Session::RemovalGain(ElementId x) const {
  CheckId(x);
  if (!state_->Contains(x)) throw InputError("removal requires x in the set");
  oracle_.Charge(1);
  return state_->RemoveGain(x);
}

void Session::Add(ElementId x) {
  CheckId(x);
  if (state_->Contains(x)) throw InputError("element already in the set");
  state_->Add(x);
}

void Session::Remove(ElementId x) {
  CheckId(x);
  if (!state_->Contains(x)) throw InputError("element not in the set");
  state_->Remove(x);
}

Session Session::Fork() const { return Session(oracle_, state_->Clone()); }

Oracle Truncate(const Oracle& oracle, double tau) {
  if (!(tau >= 0.0)) throw InputError("truncation threshold must be >= 0");
  return oracle.WithFunction(
      std::make_shared<TruncatedFunction>(oracle.shared_function(), tau));
}

Oracle Regularize(const Oracle& g, const ModularCost& cost) {
  return g.WithFunction(
      std::make_shared<RegularizedFunction>(g.shared_function(), cost));
}

}  // namespace subcover
