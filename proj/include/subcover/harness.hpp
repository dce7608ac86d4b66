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

// Experiment sweeps: datasets, the algorithm registry, grid execution and
// plot tables.

#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>
#include <vector>

#include "subcover/data_io.hpp"
#include "subcover/general_cover.hpp"
#include "subcover/instances.hpp"
#include "subcover/monotone_cover.hpp"

namespace subcover {

enum class DatasetKind { kTags, kEdges, kSynthetic, kTightness };

std::string_view ToString(DatasetKind kind);
DatasetKind DatasetKindFromString(std::string_view text);

struct DatasetSpec {
  DatasetKind kind = DatasetKind::kSynthetic;
  // Tags and edges only.
  std::string path;
  SyntheticSummarizationParams synthetic;
  std::uint64_t synthetic_seed = 0;
  // Tightness only.
  std::size_t k = 10;
  double l = 1000.0;
  // Uniform per-element cost for the regularized algorithms.
  double cost = 0.0;
};

struct LoadedDataset {
  std::string name;
  Oracle oracle;
  ModularCost cost;
  // tau = fraction * reference. f(U) for monotone objectives, otherwise the
  // value of a double greedy solution seeded with reference_seed.
  double reference = 0.0;
  std::uint64_t reference_seed = 0;
};

LoadedDataset LoadDataset(const DatasetSpec& spec, std::uint64_t reference_seed = 0);

struct ExperimentGrid {
  DatasetSpec dataset;
  std::vector<std::string> algorithms;
  std::vector<double> eps;
  std::vector<double> tau_fractions;
  double alpha = 0.1;
  double delta = 0.1;
  std::vector<std::uint64_t> seeds;
  SmpSubroutine sub = SmpSubroutine::kExact;
  std::size_t repetitions = 1;
  std::size_t jobs = 1;
  // Per exact subroutine call in stream; zero disables.
  SearchTimeout timeout = SearchTimeout::zero();
  // Start the |OPT| guess of stoch and convert at tau / max_u f({u}).
  bool singleton_guess = true;
  // Write wall_ms = 0 so repeated runs give identical files.
  bool record_timing = true;
  std::uint64_t reference_seed = 0;
};

// Number of cells the grid expands to.
std::size_t CellCount(const ExperimentGrid& grid);

// Registered algorithm names, in a fixed order.
std::vector<std::string> AlgorithmNames();
bool IsKnownAlgorithm(const std::string& name);

struct CellParams {
  double eps = 0.1;
  double tau = 0.0;
  double alpha = 0.1;
  double delta = 0.1;
  std::uint64_t seed = 0;
  SmpSubroutine sub = SmpSubroutine::kExact;
  SearchTimeout timeout = SearchTimeout::zero();
  bool singleton_guess = true;
};

// Runs one algorithm on a fresh copy of the dataset's oracle.
BicriteriaResult RunAlgorithm(const std::string& name, const LoadedDataset& data,
                              const CellParams& params);

struct ExperimentOutcome {
  std::vector<ResultRow> rows;  // sorted by run_id
  std::size_t errors = 0;
};

// Executes every cell; a failing cell is reported to `log` and counted, the
// rest still run.
ExperimentOutcome RunExperiment(const ExperimentGrid& grid, std::ostream* log);
ExperimentOutcome RunExperiment(const ExperimentGrid& grid,
                                const LoadedDataset& data, std::ostream* log);

enum class PlotAxis { kEps, kTau };
enum class PlotMetric { kFValue, kSize, kQueries };

PlotAxis PlotAxisFromString(std::string_view text);
PlotMetric PlotMetricFromString(std::string_view text);

// Per algorithm, a block of tab-separated `x mean stddev n` lines grouped by
// x. Runs that hit a timeout are left out. Returns the number of groups.
std::size_t EmitPlotData(const std::vector<ResultRow>& rows, PlotAxis axis,
                         PlotMetric metric, std::ostream& out);

}  // namespace subcover
