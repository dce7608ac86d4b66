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
// Regularized objectives g - c
//
// g is monotone, submodular and nonnegative; c is a nonnegative modular cost.
// Distorted greedy maximizes the time-varying potential
//
//   Phi_i(X) = (1 - 1/kappa)^(t - i) g(X) - c(X),   t = ceil(ln(1/eps) kappa),
//
// and ConvertRegularized turns any maximizer with a "for all |X| <= kappa"
// guarantee into a cover algorithm.

#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <vector>

#include "subcover/common.hpp"
#include "subcover/instances.hpp"

namespace subcover {

// ceil(ln(1/eps) kappa).
std::size_t DistortedHorizon(std::size_t kappa, double eps);

// (1 - 1/kappa)^(t - i) g(X) - c(X). Costs one query.
double DistortedPotential(const RegularizedInstance& instance, double eps,
                          std::size_t i, const ElementSet& x);

struct DistortedOptions {
  // Stop at the first step without a positive distorted gain instead of
  // moving on to the next step.
  bool early_break = false;
};

struct DistortedTrace {
  ElementSet solution;
  // Elements in the order they were added.
  std::vector<ElementId> order;
  // steps[i - 1] is the element added at step i, if any.
  std::vector<std::optional<ElementId>> steps;
};

// Distorted greedy with budget instance.kappa. Step i = 1..t adds the
// argmax of w_i * dg(S, x) - c_x, w_i = (1 - 1/kappa)^(t - i), when it is
// positive. For every |X| <= kappa,
//   g(S) - c(S) >= (1 - eps) g(X) - ln(1/eps) c(X).
DistortedTrace DistortedBicriteria(const RegularizedInstance& instance,
                                   double eps,
                                   const DistortedOptions& options = {});

// A regularized maximizer promises |S| <= rho kappa and
// g(S) - c(S) >= gamma g(X) - beta c(X) for all |X| <= kappa.
struct RegularizedContract {
  double gamma = 1.0;
  double beta = 1.0;
  double rho = 1.0;
};

using RegularizedSolver = std::function<ElementSet(
    const Oracle& g, const ModularCost& cost, std::size_t kappa)>;

RegularizedContract DistortedBiContract(double eps);
RegularizedSolver DistortedBiSolver(double eps,
                                    const DistortedOptions& options = {});

struct RegularizedConvertOptions {
  // First guess of |OPT|; values <= 0 select 1 + alpha.
  double initial_guess = 0.0;
};

// Runs `solver` on g - (gamma/beta) c with budgets floor((1 + alpha)^r g_0)
// until g(S) - (gamma/beta) c(S) >= gamma tau. The result's f_value is
// g(S) - c(S).
BicriteriaResult ConvertRegularized(const RegularizedSolver& solver,
                                    const RegularizedContract& contract,
                                    const RegularizedInstance& instance,
                                    double alpha,
                                    const RegularizedConvertOptions& options = {});

// One pass in id order with a known |OPT| guess: accept u while
// |S| < ceil(opt_size / eps) and dg(S, u) - beta c_u >= eps tau / opt_size.
ElementSet DistortedStream(const RegularizedInstance& instance, double eps,
                           double beta, std::size_t opt_size);

// Experimental cover wrapper around DistortedStream: guesses |OPT|
// geometrically and stops once g(S) - c(S) >= (1 - 1/beta)(1 - eps) tau.
BicriteriaResult DistortedStreamCover(const RegularizedInstance& instance,
                                      double eps, double beta, double alpha);

}  // namespace subcover
