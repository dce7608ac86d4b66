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

#include <atomic>
#include <cstdint>
#include <memory>

#include "subcover/common.hpp"
#include "subcover/set_function.hpp"

namespace subcover {

class Session;

// Query-counted handle to a set function.
//
// Copies share the counter; Clone() starts a fresh one. Derived handles
// (Truncate, Regularize) keep counting on the counter of their source, so a
// solver that internally works on f_tau is charged against f.
//
// Accounting:
//   Eval                  1 query
//   MarginalGain          2 queries (cold cache)
//   NewSession            1 query (f of the empty set)
//   Session::Gain         1 query (f(S) is cached by the session)
//   Session::RemovalGain  1 query
//   Session::Add/Remove   free (the value follows from the last gain)
class Oracle {
 public:
  explicit Oracle(std::shared_ptr<const SetFunction> function);

  std::size_t n() const { return function_->ground_size(); }
  const SetFunction& function() const { return *function_; }
  const std::shared_ptr<const SetFunction>& shared_function() const {
    return function_;
  }

  // f(S). Throws InputError unless S is sorted, unique and in range.
  double Eval(const ElementSet& set) const;
  // f(S + x) - f(S). Throws InputError if x is in S.
  double MarginalGain(const ElementSet& set, ElementId x) const;
  // Uncounted evaluation, for post-hoc checks.
  double Peek(const ElementSet& set) const;

  Session NewSession() const;

  std::uint64_t queries() const {
    return counter_->load(std::memory_order_relaxed);
  }
  void Charge(std::uint64_t count) const {
    counter_->fetch_add(count, std::memory_order_relaxed);
  }

  Oracle Clone() const;

  // Same function, same counter.
  Oracle WithFunction(std::shared_ptr<const SetFunction> function) const;

 private:
  void Validate(const ElementSet& set) const;

  std::shared_ptr<const SetFunction> function_;
  std::shared_ptr<std::atomic<std::uint64_t>> counter_;
};

// Counted incremental evaluation of one evolving set.
class Session {
 public:
  Session(Session&&) noexcept = default;
  Session& operator=(Session&&) noexcept = default;

  double value() const { return state_->value(); }
  double Gain(ElementId x) const;
  double RemovalGain(ElementId x) const;
  void Add(ElementId x);
  void Remove(ElementId x);

  bool Contains(ElementId x) const { return state_->Contains(x); }
  std::size_t size() const { return state_->size(); }
  ElementSet Elements() const { return state_->Elements(); }

  // Independent copy of the current set; counts against the same oracle.
  Session Fork() const;

 private:
  friend class Oracle;
  Session(Oracle oracle, std::unique_ptr<SetState> state);
  void CheckId(ElementId x) const;

  Oracle oracle_;
  std::unique_ptr<SetState> state_;
};

// f_tau = min(f, tau), counted on the counter of `oracle`.
Oracle Truncate(const Oracle& oracle, double tau);

// g - c, counted on the counter of `g`.
Oracle Regularize(const Oracle& g, const ModularCost& cost);

}  // namespace subcover
