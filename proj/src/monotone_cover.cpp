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

#include "subcover/monotone_cover.hpp"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include "solver_util.hpp"

namespace subcover {

using internal::BestGain;
using internal::CeilCount;
using internal::RunMeter;

std::size_t RepetitionCount(double delta) {
  RequireOpenUnit(delta, "delta");
  return std::max<std::size_t>(1, CeilCount(std::log(1.0 / delta) / std::log(2.0)));
}

double SingletonRatioGuess(const Oracle& oracle, double tau) {
  Session empty = oracle.NewSession();
  double best = 0.0;
  for (ElementId x = 0; x < oracle.n(); ++x) {
    best = std::max(best, empty.Gain(x));
  }
  return best > kTolerance ? tau / best : 0.0;
}

BicriteriaResult GreedyCover(const CoverInstance& instance, double eps) {
  RequireOpenUnit(eps, "eps");
  internal::RequireThreshold(instance.tau);
  const Oracle& oracle = instance.oracle;
  RunMeter meter(oracle);
  const double target = (1.0 - eps) * instance.tau;
  const ElementSet all = Iota(oracle.n());

  Session session = oracle.NewSession();
  while (!MeetsTarget(session.value(), target)) {
    const auto pick = BestGain(session, all);
    if (!pick || pick->gain <= kTolerance) {
      return meter.Finish(session.Elements(), Status::kInfeasibleDetected);
    }
    session.Add(pick->element);
  }
  return meter.Finish(session.Elements(), Status::kSolved);
}

BicriteriaResult ThresholdGreedyCover(const CoverInstance& instance,
                                      double eps) {
  RequireOpenUnit(eps, "eps");
  internal::RequireThreshold(instance.tau);
  const Oracle& oracle = instance.oracle;
  RunMeter meter(oracle);
  const double target = (1.0 - eps) * instance.tau;
  const std::size_t n = oracle.n();

  Session session = oracle.NewSession();
  if (MeetsTarget(session.value(), target)) {
    return meter.Finish({}, Status::kSolved);
  }
  double max_single = 0.0;
  for (ElementId x = 0; x < n; ++x) {
    max_single = std::max(max_single, session.Gain(x));
  }
  if (max_single <= kTolerance) {
    return meter.Finish({}, Status::kInfeasibleDetected);
  }

  const double floor = eps * max_single / static_cast<double>(n);
  for (double w = max_single; w >= floor; w *= 1.0 - eps / 2.0) {
    for (ElementId x = 0; x < n; ++x) {
      if (session.Contains(x)) continue;
      if (session.Gain(x) >= w - kTolerance) {
        session.Add(x);
        if (MeetsTarget(session.value(), target)) {
          return meter.Finish(session.Elements(), Status::kSolved);
        }
      }
    }
  }
  return meter.Finish(session.Elements(), Status::kInfeasibleDetected);
}

BicriteriaResult StochasticGreedyCover(const CoverInstance& instance,
                                       double eps, double delta, double alpha,
                                       std::uint64_t seed,
                                       const StochasticGreedyOptions& options) {
  RequireOpenUnit(eps, "eps");
  RequireOpenUnit(delta, "delta");
  RequirePositive(alpha, "alpha");
  internal::RequireThreshold(instance.tau);
  const Oracle& oracle = instance.oracle;
  RunMeter meter(oracle);
  const std::size_t n = oracle.n();
  const double target = (1.0 - eps) * instance.tau;
  const double log_term = std::log(3.0 / eps);
  const std::size_t copies = RepetitionCount(delta);

  const Oracle truncated = Truncate(oracle, instance.tau);
  std::vector<Session> solutions;
  std::vector<std::mt19937_64> rngs;
  std::vector<std::vector<ElementId>> pools;
  for (std::size_t i = 0; i < copies; ++i) {
    solutions.push_back(truncated.NewSession());
    rngs.emplace_back(DeriveSeed(seed, i));
    pools.push_back(Iota(n));
  }

  auto first_feasible = [&]() -> const Session* {
    const Session* best = nullptr;
    for (const auto& s : solutions) {
      if (MeetsTarget(s.value(), target) && (!best || s.size() < best->size())) {
        best = &s;
      }
    }
    return best;
  };

  double g = 1.0 + alpha;
  if (options.initial_guess == InitialGuess::kSingletonRatio) {
    g = std::max(g, SingletonRatioGuess(truncated, instance.tau));
  }
  g = std::min(g, static_cast<double>(std::max<std::size_t>(n, 1)));

  std::size_t rounds_at_cap = 0;
  const std::size_t cap_rounds = CeilCount(log_term * static_cast<double>(n));
  std::size_t r = 1;
  while (first_feasible() == nullptr) {
    if (n == 0) return meter.Finish({}, Status::kInfeasibleDetected);
    const std::size_t sample_size =
        std::min(n, CeilCount(static_cast<double>(n) * log_term / g));
    for (std::size_t i = 0; i < copies; ++i) {
      const auto sample = internal::SampleSorted(pools[i], sample_size, rngs[i]);
      const auto pick = BestGain(solutions[i], sample);
      if (pick && pick->gain > kTolerance) solutions[i].Add(pick->element);
    }
    ++r;
    if (static_cast<double>(r) > std::ceil(log_term * g - kTolerance)) {
      g = std::min(g * (1.0 + alpha), static_cast<double>(n));
    }
    if (g >= static_cast<double>(n) && ++rounds_at_cap > cap_rounds &&
        first_feasible() == nullptr) {
      return meter.Finish(solutions.front().Elements(),
                          Status::kInfeasibleDetected);
    }
  }
  return meter.Finish(first_feasible()->Elements(), Status::kSolved);
}

ElementSet BudgetedGreedy(const Oracle& oracle, std::size_t kappa) {
  const ElementSet all = Iota(oracle.n());
  Session session = oracle.NewSession();
  while (session.size() < kappa) {
    const auto pick = BestGain(session, all);
    if (!pick || pick->gain <= kTolerance) break;
    session.Add(pick->element);
  }
  return session.Elements();
}

ElementSet StochasticBicriteria(const SmpInstance& instance, double eps,
                                std::uint64_t seed) {
  RequireOpenUnit(eps, "eps");
  if (instance.kappa < 1) throw InputError("budget kappa must be >= 1");
  const Oracle& oracle = instance.oracle;
  const std::size_t n = oracle.n();
  const double kappa = static_cast<double>(instance.kappa);
  const double log_term = std::log(3.0 / (2.0 * eps));
  const std::size_t rounds = CeilCount(log_term * kappa);
  const std::size_t sample_size =
      std::min(n, CeilCount(static_cast<double>(n) / kappa * log_term));

  std::mt19937_64 rng(seed);
  std::vector<ElementId> pool = Iota(n);
  Session session = oracle.NewSession();
  for (std::size_t round = 0; round < rounds && session.size() < n; ++round) {
    const auto sample = internal::SampleSorted(pool, sample_size, rng);
    const auto pick = BestGain(session, sample);
    if (pick && pick->gain > kTolerance) session.Add(pick->element);
  }
  return session.Elements();
}

SmpSolver BudgetedGreedySolver() {
  return [](const Oracle& oracle, std::size_t kappa) {
    return BudgetedGreedy(oracle, kappa);
  };
}

RandomizedSmpSolver StochasticBicriteriaSolver(double eps) {
  RequireOpenUnit(eps, "eps");
  return [eps](const Oracle& oracle, std::size_t kappa, std::uint64_t seed) {
    return StochasticBicriteria(SmpInstance{oracle, kappa}, eps, seed);
  };
}

namespace {

double FirstGuess(const ConvertOptions& options, const Oracle& oracle,
                  double tau, double alpha) {
  double guess = 1.0 + alpha;
  if (options.initial_guess == InitialGuess::kSingletonRatio) {
    guess = std::max(guess, SingletonRatioGuess(oracle, tau));
  }
  return guess;
}

}  // namespace

BicriteriaResult Convert(const SmpSolver& solver, const CoverInstance& instance,
                         double alpha, double gamma,
                         const ConvertOptions& options) {
  RequirePositive(alpha, "alpha");
  if (!(gamma > 0.0 && gamma <= 1.0)) {
    throw InputError("gamma must lie in (0, 1]");
  }
  internal::RequireThreshold(instance.tau);
  const Oracle& oracle = instance.oracle;
  RunMeter meter(oracle);
  const std::size_t n = oracle.n();
  const double target = gamma * instance.tau;

  ElementSet solution;
  if (MeetsTarget(oracle.Eval(solution), target)) {
    return meter.Finish(solution, Status::kSolved);
  }
  std::size_t last_budget = 0;
  for (double guess = FirstGuess(options, oracle, instance.tau, alpha);;
       guess *= 1.0 + alpha) {
    const std::size_t budget = BudgetFromGuess(guess, n);
    // A deterministic solver gives the same answer for a repeated budget.
    if (budget != last_budget) {
      last_budget = budget;
      solution = solver(oracle, budget);
      if (MeetsTarget(oracle.Eval(solution), target)) {
        return meter.Finish(std::move(solution), Status::kSolved);
      }
    }
    if (budget >= n) break;
  }
  return meter.Finish(std::move(solution), Status::kInfeasibleDetected);
}

BicriteriaResult ConvertRandomized(const RandomizedSmpSolver& solver,
                                   const CoverInstance& instance, double alpha,
                                   double delta, double eps, std::uint64_t seed,
                                   const ConvertOptions& options) {
  RequirePositive(alpha, "alpha");
  RequireOpenUnit(eps, "eps");
  const std::size_t repetitions = RepetitionCount(delta);
  internal::RequireThreshold(instance.tau);
  const Oracle& oracle = instance.oracle;
  RunMeter meter(oracle);
  const std::size_t n = oracle.n();
  const double target = (1.0 - eps) * instance.tau;
  const Oracle truncated = Truncate(oracle, instance.tau);

  ElementSet last;
  if (MeetsTarget(oracle.Eval(last), target)) {
    return meter.Finish(last, Status::kSolved);
  }
  std::uint64_t round = 0;
  for (double guess = FirstGuess(options, oracle, instance.tau, alpha);;
       guess *= 1.0 + alpha, ++round) {
    const std::size_t budget = BudgetFromGuess(guess, n);
    std::optional<ElementSet> best;
    for (std::size_t rep = 0; rep < repetitions; ++rep) {
      ElementSet candidate = solver(truncated, budget, DeriveSeed(seed, round, rep));
      if (MeetsTarget(oracle.Eval(candidate), target)) {
        if (!best || candidate.size() < best->size()) best = std::move(candidate);
      } else {
        last = std::move(candidate);
      }
    }
    if (best) return meter.Finish(std::move(*best), Status::kSolved);
    if (budget >= n) break;
  }
  return meter.Finish(std::move(last), Status::kInfeasibleDetected);
}

}  // namespace subcover
