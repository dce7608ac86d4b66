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

#include "subcover/harness.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cmath>
#include <filesystem>
#include <map>
#include <mutex>
#include <ostream>
#include <thread>

#include "subcover/exact.hpp"
#include "subcover/regularized.hpp"

namespace subcover {

std::string_view ToString(DatasetKind kind) {
  switch (kind) {
    case DatasetKind::kTags:
      return "tags";
    case DatasetKind::kEdges:
      return "edges";
    case DatasetKind::kSynthetic:
      return "synthetic";
    case DatasetKind::kTightness:
      return "tightness";
  }
  return "?";
}

DatasetKind DatasetKindFromString(std::string_view text) {
  if (text == "tags") return DatasetKind::kTags;
  if (text == "edges") return DatasetKind::kEdges;
  if (text == "synthetic") return DatasetKind::kSynthetic;
  if (text == "tightness") return DatasetKind::kTightness;
  throw InputError("unknown dataset kind: " + std::string(text));
}

LoadedDataset LoadDataset(const DatasetSpec& spec, std::uint64_t reference_seed) {
  std::shared_ptr<const SetFunction> function;
  std::string name;
  switch (spec.kind) {
    case DatasetKind::kTags:
      function = ParseTagAssignments(std::filesystem::path(spec.path)).coverage;
      name = std::filesystem::path(spec.path).filename().string();
      break;
    case DatasetKind::kEdges:
      function = ParseEdgeList(std::filesystem::path(spec.path)).graph;
      name = std::filesystem::path(spec.path).filename().string();
      break;
    case DatasetKind::kSynthetic:
      function = MakeSyntheticSummarization(spec.synthetic, spec.synthetic_seed);
      name = "synthetic-" + std::to_string(spec.synthetic.num_elements);
      break;
    case DatasetKind::kTightness: {
      TightnessInstance tight = MakeGreedyTightnessInstance(spec.k, spec.l);
      function = tight.function;
      name = "tightness-" + std::to_string(spec.k);
      break;
    }
  }
  if (spec.cost < 0.0) throw InputError("cost must be >= 0");
  LoadedDataset data{name, Oracle(function),
                     ModularCost::Uniform(function->ground_size(), spec.cost),
                     0.0, reference_seed};
  if (function->is_monotone()) {
    data.reference = data.oracle.Peek(Iota(function->ground_size()));
  } else {
    Oracle scratch = data.oracle.Clone();
    data.reference = scratch.Peek(DoubleGreedyUsm(scratch, reference_seed));
  }
  return data;
}

std::size_t CellCount(const ExperimentGrid& grid) {
  return grid.algorithms.size() * grid.eps.size() * grid.tau_fractions.size() *
         grid.seeds.size() * grid.repetitions;
}

std::vector<std::string> AlgorithmNames() {
  return {"greedy",     "thresh",      "stoch", "convert", "convert-greedy",
          "stream",     "dist-cover", "dist-stream", "exact"};
}

bool IsKnownAlgorithm(const std::string& name) {
  const auto names = AlgorithmNames();
  return std::find(names.begin(), names.end(), name) != names.end();
}

BicriteriaResult RunAlgorithm(const std::string& name, const LoadedDataset& data,
                              const CellParams& p) {
  const Oracle oracle = data.oracle.Clone();
  const CoverInstance cover{oracle, p.tau};
  const InitialGuess guess = p.singleton_guess ? InitialGuess::kSingletonRatio
                                               : InitialGuess::kOnePlusAlpha;

  if (name == "greedy") return GreedyCover(cover, p.eps);
  if (name == "thresh") return ThresholdGreedyCover(cover, p.eps);
  if (name == "stoch") {
    StochasticGreedyOptions options{guess};
    return StochasticGreedyCover(cover, p.eps, p.delta, p.alpha, p.seed, options);
  }
  if (name == "convert") {
    return ConvertRandomized(StochasticBicriteriaSolver(p.eps / 2.0), cover,
                             p.alpha, p.delta, p.eps, p.seed,
                             ConvertOptions{guess});
  }
  if (name == "convert-greedy") {
    return Convert(BudgetedGreedySolver(), cover, p.alpha, 1.0 - p.eps,
                   ConvertOptions{guess});
  }
  if (name == "stream") {
    StreamOptions options;
    options.timeout = p.timeout;
    return StreamCover(cover, p.eps, p.alpha, p.sub, p.seed, options);
  }
  if (name == "exact") {
    const auto start = std::chrono::steady_clock::now();
    const auto found = ExactMinCover(cover);
    BicriteriaResult result;
    result.status = found ? Status::kSolved : Status::kInfeasibleDetected;
    if (found) {
      result.solution = found->optimum_set;
      result.f_value = found->optimum_value;
      result.size = found->optimum_set.size();
      // Every enumerated set costs one evaluation.
      result.queries = found->enumerated;
    } else {
      result.queries = std::uint64_t{1} << oracle.n();
    }
    result.wall_ms = std::chrono::duration<double, std::milli>(
                         std::chrono::steady_clock::now() - start)
                         .count();
    return result;
  }
  const RegularizedInstance reg{oracle, data.cost, 1, p.tau};
  if (name == "dist-cover") {
    return ConvertRegularized(DistortedBiSolver(p.eps), DistortedBiContract(p.eps),
                              reg, p.alpha);
  }
  if (name == "dist-stream") {
    return DistortedStreamCover(reg, p.eps, 1.0 / p.eps, p.alpha);
  }
  throw InputError("unknown algorithm: " + name);
}

ExperimentOutcome RunExperiment(const ExperimentGrid& grid, std::ostream* log) {
  const std::uint64_t reference_seed =
      grid.reference_seed != 0 || grid.seeds.empty() ? grid.reference_seed
                                                     : grid.seeds.front();
  return RunExperiment(grid, LoadDataset(grid.dataset, reference_seed), log);
}

ExperimentOutcome RunExperiment(const ExperimentGrid& grid,
                                const LoadedDataset& data, std::ostream* log) {
  for (const auto& name : grid.algorithms) {
    if (!IsKnownAlgorithm(name)) throw InputError("unknown algorithm: " + name);
  }
  if (grid.repetitions == 0) throw InputError("repetitions must be >= 1");

  struct Cell {
    std::string algorithm;
    CellParams params;
    std::uint64_t base_seed;
  };
  std::vector<Cell> cells;
  cells.reserve(CellCount(grid));
  for (const auto& name : grid.algorithms) {
    for (double eps : grid.eps) {
      for (double fraction : grid.tau_fractions) {
        for (std::uint64_t seed : grid.seeds) {
          for (std::size_t rep = 0; rep < grid.repetitions; ++rep) {
            CellParams p;
            p.eps = eps;
            p.tau = fraction * data.reference;
            p.alpha = grid.alpha;
            p.delta = grid.delta;
            p.seed = rep == 0 ? seed : DeriveSeed(seed, rep);
            p.sub = grid.sub;
            p.timeout = grid.timeout;
            p.singleton_guess = grid.singleton_guess;
            cells.push_back({name, p, seed});
          }
        }
      }
    }
  }

  std::vector<std::optional<ResultRow>> slots(cells.size());
  std::atomic<std::size_t> next{0};
  std::atomic<std::size_t> errors{0};
  std::mutex log_mutex;
  auto worker = [&] {
    for (std::size_t i = next++; i < cells.size(); i = next++) {
      const Cell& cell = cells[i];
      try {
        const BicriteriaResult result = RunAlgorithm(cell.algorithm, data, cell.params);
        ResultRow row;
        row.run_id = i;
        row.dataset = data.name;
        row.algorithm = cell.algorithm;
        if (cell.algorithm == "stream") {
          row.algorithm += "-" + std::string(ToString(cell.params.sub));
        }
        row.eps = cell.params.eps;
        row.tau = cell.params.tau;
        row.alpha = cell.params.alpha;
        row.delta = cell.params.delta;
        row.seed = cell.base_seed;
        row.f_value = result.f_value;
        row.size = result.size;
        row.queries = result.queries;
        row.wall_ms = grid.record_timing ? result.wall_ms : 0.0;
        row.status = result.status;
        slots[i] = std::move(row);
      } catch (const std::exception& e) {
        ++errors;
        if (log) {
          std::lock_guard<std::mutex> lock(log_mutex);
          *log << "run " << i << " (" << cell.algorithm << "): " << e.what() << '\n';
        }
      }
    }
  };
  const std::size_t jobs = std::max<std::size_t>(1, std::min(grid.jobs, cells.size()));
  std::vector<std::thread> threads;
  for (std::size_t j = 1; j < jobs; ++j) threads.emplace_back(worker);
  worker();
  for (auto& t : threads) t.join();

  ExperimentOutcome outcome;
  outcome.errors = errors;
  for (auto& slot : slots) {
    if (slot) outcome.rows.push_back(std::move(*slot));
  }
  return outcome;
}

PlotAxis PlotAxisFromString(std::string_view text) {
  if (text == "eps") return PlotAxis::kEps;
  if (text == "tau") return PlotAxis::kTau;
  throw InputError("unknown x axis: " + std::string(text));
}

PlotMetric PlotMetricFromString(std::string_view text) {
  if (text == "f" || text == "f_value") return PlotMetric::kFValue;
  if (text == "size") return PlotMetric::kSize;
  if (text == "queries") return PlotMetric::kQueries;
  throw InputError("unknown metric: " + std::string(text));
}

std::size_t EmitPlotData(const std::vector<ResultRow>& rows, PlotAxis axis,
                         PlotMetric metric, std::ostream& out) {
  std::map<std::string, std::map<double, std::vector<double>>> groups;
  for (const ResultRow& r : rows) {
    if (r.status == Status::kBudgetExhausted) continue;
    const double x = axis == PlotAxis::kEps ? r.eps : r.tau;
    double y = r.f_value;
    if (metric == PlotMetric::kSize) y = static_cast<double>(r.size);
    if (metric == PlotMetric::kQueries) y = static_cast<double>(r.queries);
    groups[r.algorithm][x].push_back(y);
  }
  if (groups.empty()) {
    out << "# warning: empty selection, no rows to plot\n";
    return 0;
  }
  std::size_t count = 0;
  for (const auto& [algorithm, by_x] : groups) {
    out << "# algorithm=" << algorithm << '\n';
    out << "x\tmean\tstddev\tn\n";
    for (const auto& [x, ys] : by_x) {
      double mean = 0.0;
      for (double y : ys) mean += y;
      mean /= static_cast<double>(ys.size());
      double sq = 0.0;
      for (double y : ys) sq += (y - mean) * (y - mean);
      const double stddev =
          ys.size() > 1 ? std::sqrt(sq / static_cast<double>(ys.size() - 1)) : 0.0;
      out << FormatReal(x) << '\t' << FormatReal(mean) << '\t'
          << FormatReal(stddev) << '\t' << ys.size() << '\n';
      ++count;
    }
    out << '\n';
  }
  return count;
}

}  // namespace subcover
