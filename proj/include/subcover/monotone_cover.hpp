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
// Monotone submodular cover
//
// Every cover solver returns a set S with f(S) >= (1 - eps) * tau (status
// Solved) or reports that it could not get there. Argmax ties are broken by
// the lowest element id. Budgets derived from a real-valued guess g of |OPT|
// are floor(g), which reaches |OPT| exactly when g does.

#pragma once

#include <cstdint>
#include <functional>

#include "subcover/common.hpp"
#include "subcover/instances.hpp"

namespace subcover {

// Standard greedy: add the element of largest marginal gain until
// f(S) >= (1 - eps) tau. O(n |S|) queries.
BicriteriaResult GreedyCover(const CoverInstance& instance, double eps);

// Threshold greedy. Passes over U add every element whose gain clears the
// threshold w, which starts at max_u f({u}) and shrinks by (1 - eps/2) per
// pass. Stops as soon as f(S) >= (1 - eps) tau; gives up once w drops below
// eps * max_u f({u}) / n.
BicriteriaResult ThresholdGreedyCover(const CoverInstance& instance, double eps);

enum class InitialGuess {
  kOnePlusAlpha,    // g = 1 + alpha
  kSingletonRatio,  // g = max(1 + alpha, tau / max_u f({u})), n extra queries
};

struct StochasticGreedyOptions {
  InitialGuess initial_guess = InitialGuess::kOnePlusAlpha;
};

// Stochastic greedy for cover.
//
// Grows ceil(ln(1/delta) / ln 2) independent solutions on f_tau. Each round,
// every solution adds the best element of a fresh uniform sample of size
// min(n, ceil(n ln(3/eps) / g)). After round r, if r > ceil(ln(3/eps) g) the
// guess g of |OPT| grows by (1 + alpha), capped at n. Returns the smallest
// solution that reaches (1 - eps) tau.
BicriteriaResult StochasticGreedyCover(const CoverInstance& instance,
                                       double eps, double delta, double alpha,
                                       std::uint64_t seed,
                                       const StochasticGreedyOptions& options = {});

// Maximization solvers plugged into the conversions: given an oracle and a
// budget kappa, return a set.
using SmpSolver = std::function<ElementSet(const Oracle&, std::size_t kappa)>;
using RandomizedSmpSolver =
    std::function<ElementSet(const Oracle&, std::size_t kappa, std::uint64_t)>;

// Greedy maximization with at most kappa additions of positive gain.
ElementSet BudgetedGreedy(const Oracle& oracle, std::size_t kappa);

// Bicriteria stochastic greedy for maximization: ceil(ln(3/(2 eps)) kappa)
// rounds, each adding the best of min(n, ceil((n/kappa) ln(3/(2 eps))))
// sampled elements. E[f(S)] >= (1 - eps) max_{|X| <= kappa} f(X).
ElementSet StochasticBicriteria(const SmpInstance& instance, double eps,
                                std::uint64_t seed);

// Adapters with the solver signatures above.
SmpSolver BudgetedGreedySolver();
RandomizedSmpSolver StochasticBicriteriaSolver(double eps);

struct ConvertOptions {
  InitialGuess initial_guess = InitialGuess::kOnePlusAlpha;
};

// Runs a deterministic (gamma, beta) maximization solver with budgets
// floor((1 + alpha)^r g_0) until f(S) >= gamma tau.
BicriteriaResult Convert(const SmpSolver& solver, const CoverInstance& instance,
                         double alpha, double gamma,
                         const ConvertOptions& options = {});

// Randomized conversion: for each guess, runs `solver` on f_tau
// ceil(ln(1/delta) / ln 2) times and stops once a run reaches (1 - eps) tau.
BicriteriaResult ConvertRandomized(const RandomizedSmpSolver& solver,
                                   const CoverInstance& instance, double alpha,
                                   double delta, double eps, std::uint64_t seed,
                                   const ConvertOptions& options = {});

// tau / max_u f({u}), the initial |OPT| guess used in the experiments.
// Costs one session plus n queries. Returns 0 if no singleton has value.
double SingletonRatioGuess(const Oracle& oracle, double tau);

// ceil(ln(1/delta) / ln 2), at least 1.
std::size_t RepetitionCount(double delta);

}  // namespace subcover
