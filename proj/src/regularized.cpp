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

#include "subcover/regularized.hpp"

#include <cmath>

#include "solver_util.hpp"

namespace subcover {

namespace {

void CheckCost(const RegularizedInstance& instance) {
  if (instance.cost.size() != instance.g.n()) {
    throw InputError("cost vector size differs from the ground set");
  }
}

double DistortionWeight(std::size_t kappa, std::size_t t, std::size_t i) {
  const double base = 1.0 - 1.0 / static_cast<double>(kappa);
  return std::pow(base, static_cast<double>(t - i));
}

}  // namespace

std::size_t DistortedHorizon(std::size_t kappa, double eps) {
  RequireOpenUnit(eps, "eps");
  if (kappa == 0) throw InputError("budget kappa must be >= 1");
  return internal::CeilCount(std::log(1.0 / eps) * static_cast<double>(kappa));
}

double DistortedPotential(const RegularizedInstance& instance, double eps,
                          std::size_t i, const ElementSet& x) {
  CheckCost(instance);
  const std::size_t t = DistortedHorizon(instance.kappa, eps);
  if (i > t) throw InputError("step index exceeds the horizon");
  return DistortionWeight(instance.kappa, t, i) * instance.g.Eval(x) -
         instance.cost(x);
}

DistortedTrace DistortedBicriteria(const RegularizedInstance& instance,
                                   double eps, const DistortedOptions& options) {
  CheckCost(instance);
  const std::size_t t = DistortedHorizon(instance.kappa, eps);
  const std::size_t n = instance.g.n();
  DistortedTrace trace;
  Session session = instance.g.NewSession();
  for (std::size_t i = 1; i <= t; ++i) {
    const double w = DistortionWeight(instance.kappa, t, i);
    std::optional<internal::Pick> best;
    for (ElementId x = 0; x < n; ++x) {
      if (session.Contains(x)) continue;
      const double gain = w * session.Gain(x) - instance.cost[x];
      if (!best || gain > best->gain + kTolerance) best = internal::Pick{x, gain};
    }
    if (best && best->gain > kTolerance) {
      session.Add(best->element);
      trace.order.push_back(best->element);
      trace.steps.push_back(best->element);
    } else {
      trace.steps.push_back(std::nullopt);
      if (options.early_break) break;
    }
  }
  trace.solution = session.Elements();
  return trace;
}

RegularizedContract DistortedBiContract(double eps) {
  RequireOpenUnit(eps, "eps");
  const double log_term = std::log(1.0 / eps);
  return {1.0 - eps, log_term, log_term};
}

RegularizedSolver DistortedBiSolver(double eps, const DistortedOptions& options) {
  RequireOpenUnit(eps, "eps");
  return [eps, options](const Oracle& g, const ModularCost& cost,
                        std::size_t kappa) {
    return DistortedBicriteria(RegularizedInstance{g, cost, kappa, 0.0}, eps,
                               options)
        .solution;
  };
}

BicriteriaResult ConvertRegularized(const RegularizedSolver& solver,
                                    const RegularizedContract& contract,
                                    const RegularizedInstance& instance,
                                    double alpha,
                                    const RegularizedConvertOptions& options) {
  CheckCost(instance);
  RequirePositive(alpha, "alpha");
  RequirePositive(contract.gamma, "gamma");
  RequirePositive(contract.beta, "beta");
  if (!std::isfinite(instance.tau)) throw InputError("tau must be finite");
  const Oracle& g = instance.g;
  const std::size_t n = g.n();
  const ModularCost scaled = instance.cost.Scaled(contract.gamma / contract.beta);
  const Oracle objective = Regularize(g, scaled);
  internal::RunMeter meter(Regularize(g, instance.cost));
  const double target = contract.gamma * instance.tau;

  ElementSet solution;
  if (MeetsTarget(objective.Eval(solution), target)) {
    return meter.Finish(solution, Status::kSolved);
  }
  std::size_t last_budget = 0;
  double guess = options.initial_guess > 0.0 ? options.initial_guess : 1.0 + alpha;
  for (;; guess *= 1.0 + alpha) {
    const std::size_t budget = BudgetFromGuess(guess, n);
    if (budget != last_budget) {
      last_budget = budget;
      solution = solver(g, scaled, budget);
      if (MeetsTarget(objective.Eval(solution), target)) {
        return meter.Finish(std::move(solution), Status::kSolved);
      }
    }
    if (budget >= n) break;
  }
  return meter.Finish(std::move(solution), Status::kInfeasibleDetected);
}

ElementSet DistortedStream(const RegularizedInstance& instance, double eps,
                           double beta, std::size_t opt_size) {
  CheckCost(instance);
  RequireOpenUnit(eps, "eps");
  if (!(beta >= 1.0)) throw InputError("beta must be >= 1");
  if (opt_size == 0) throw InputError("opt_size must be >= 1");
  const double size = static_cast<double>(opt_size);
  const std::size_t cap = internal::CeilCount(size / eps);
  const double threshold = eps * instance.tau / size;
  Session session = instance.g.NewSession();
  for (ElementId u = 0; u < instance.g.n() && session.size() < cap; ++u) {
    if (session.Gain(u) - beta * instance.cost[u] >= threshold - kTolerance) {
      session.Add(u);
    }
  }
  return session.Elements();
}

BicriteriaResult DistortedStreamCover(const RegularizedInstance& instance,
                                      double eps, double beta, double alpha) {
  CheckCost(instance);
  RequireOpenUnit(eps, "eps");
  RequirePositive(alpha, "alpha");
  internal::RequireThreshold(instance.tau);
  const Oracle objective = Regularize(instance.g, instance.cost);
  internal::RunMeter meter(objective);
  const std::size_t n = instance.g.n();
  const double target = (1.0 - 1.0 / beta) * (1.0 - eps) * instance.tau;

  ElementSet solution;
  if (MeetsTarget(objective.Eval(solution), target)) {
    return meter.Finish(solution, Status::kSolved);
  }
  if (n == 0) return meter.Finish(solution, Status::kInfeasibleDetected);
  std::size_t last_budget = 0;
  for (double guess = 1.0 + alpha;; guess *= 1.0 + alpha) {
    const std::size_t budget = BudgetFromGuess(guess, n);
    if (budget != last_budget) {
      last_budget = budget;
      solution = DistortedStream(instance, eps, beta, budget);
      if (MeetsTarget(objective.Eval(solution), target)) {
        return meter.Finish(std::move(solution), Status::kSolved);
      }
    }
    if (budget >= n) break;
  }
  return meter.Finish(std::move(solution), Status::kInfeasibleDetected);
}

}  // namespace subcover
