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

// subcover: run cover experiment grids and turn their CSVs into plot tables.
//
//   subcover run --kind synthetic --alg greedy,stoch --eps 0.1,0.2 \
//       --tau-frac 0.6 --seeds 1,2,3 --out results.csv
//   subcover plot --in results.csv --x eps --metric queries --out q.tsv

#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "subcover/harness.hpp"

namespace {

struct RunFlags {
  std::string dataset;
  std::string kind = "synthetic";
  std::vector<std::string> algorithms;
  std::vector<double> eps;
  std::vector<double> tau_fractions;
  double alpha = 0.1;
  double delta = 0.1;
  std::vector<std::uint64_t> seeds{0};
  std::string sub = "ex";
  std::size_t jobs = 1;
  std::size_t reps = 1;
  std::string out;
  std::size_t k = 10;
  double l = 1000.0;
  std::size_t synthetic_m = 4000;
  std::size_t synthetic_n = 2000;
  double p_head = 0.4;
  double p_tail = 0.002;
  std::size_t head = 250;
  std::uint64_t synthetic_seed = 0;
  std::uint64_t reference_seed = 0;
  double cost = 0.0;
  long timeout_ms = 0;
  bool no_timing = false;
  std::string initial_guess = "singleton";
};

struct PlotFlags {
  std::string in;
  std::string x = "eps";
  std::string metric = "f";
  std::string out;
};

int Run(const RunFlags& flags) {
  subcover::ExperimentGrid grid;
  grid.dataset.kind = subcover::DatasetKindFromString(flags.kind);
  grid.dataset.path = flags.dataset;
  if ((grid.dataset.kind == subcover::DatasetKind::kTags ||
       grid.dataset.kind == subcover::DatasetKind::kEdges) &&
      flags.dataset.empty()) {
    throw subcover::InputError("--dataset is required for kind " + flags.kind);
  }
  grid.dataset.synthetic = {flags.synthetic_m, flags.synthetic_n, flags.p_head,
                            flags.p_tail, flags.head};
  grid.dataset.synthetic_seed = flags.synthetic_seed;
  grid.dataset.k = flags.k;
  grid.dataset.l = flags.l;
  grid.dataset.cost = flags.cost;
  grid.algorithms = flags.algorithms;
  grid.eps = flags.eps;
  grid.tau_fractions = flags.tau_fractions;
  grid.alpha = flags.alpha;
  grid.delta = flags.delta;
  grid.seeds = flags.seeds;
  grid.sub = subcover::SubroutineFromString(flags.sub);
  grid.jobs = flags.jobs;
  grid.repetitions = flags.reps;
  grid.timeout = subcover::SearchTimeout(flags.timeout_ms);
  grid.record_timing = !flags.no_timing;
  grid.reference_seed = flags.reference_seed;
  if (flags.initial_guess == "singleton") {
    grid.singleton_guess = true;
  } else if (flags.initial_guess == "one-plus-alpha") {
    grid.singleton_guess = false;
  } else {
    throw subcover::InputError("unknown --initial-guess " + flags.initial_guess);
  }

  const subcover::ExperimentOutcome outcome = subcover::RunExperiment(grid, &std::cerr);
  if (flags.out.empty() || flags.out == "-") {
    subcover::WriteResultsCsv(outcome.rows, std::cout);
  } else {
    subcover::WriteResultsCsv(outcome.rows, std::filesystem::path(flags.out));
  }
  std::cerr << outcome.rows.size() << " rows, " << outcome.errors << " errors\n";
  return outcome.errors == 0 ? 0 : 1;
}

int Plot(const PlotFlags& flags) {
  const auto rows = subcover::ReadResultsCsv(std::filesystem::path(flags.in));
  const auto axis = subcover::PlotAxisFromString(flags.x);
  const auto metric = subcover::PlotMetricFromString(flags.metric);
  std::size_t groups = 0;
  if (flags.out.empty() || flags.out == "-") {
    groups = subcover::EmitPlotData(rows, axis, metric, std::cout);
  } else {
    std::ofstream out(flags.out);
    if (!out) throw subcover::InputError("cannot write " + flags.out);
    groups = subcover::EmitPlotData(rows, axis, metric, out);
  }
  if (groups == 0) std::cerr << "warning: empty selection\n";
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Submodular cover experiments"};
  app.require_subcommand(1);

  RunFlags run;
  CLI::App* run_cmd = app.add_subcommand("run", "Run an experiment grid");
  run_cmd->add_option("--dataset", run.dataset, "Tag or edge-list file");
  run_cmd->add_option("--kind", run.kind, "tags|edges|synthetic|tightness")
      ->check(CLI::IsMember({"tags", "edges", "synthetic", "tightness"}));
  run_cmd->add_option("--alg", run.algorithms, "Comma-separated algorithms")
      ->delimiter(',')
      ->required()
      ->check(CLI::IsMember(subcover::AlgorithmNames()));
  run_cmd->add_option("--eps", run.eps, "Comma-separated eps values")
      ->delimiter(',')
      ->required();
  run_cmd->add_option("--tau-frac", run.tau_fractions,
                      "Comma-separated fractions of the reference value")
      ->delimiter(',')
      ->required();
  run_cmd->add_option("--alpha", run.alpha, "Guess growth factor");
  run_cmd->add_option("--delta", run.delta, "Failure probability");
  run_cmd->add_option("--seeds", run.seeds, "Comma-separated seeds")->delimiter(',');
  run_cmd->add_option("--sub", run.sub, "stream subroutine rg|dg|ex|fex")
      ->check(CLI::IsMember({"rg", "dg", "ex", "fex"}));
  run_cmd->add_option("--jobs", run.jobs, "Worker threads");
  run_cmd->add_option("--reps", run.reps, "Repetitions per cell");
  run_cmd->add_option("--out", run.out, "Output CSV (default stdout)");
  run_cmd->add_option("--k", run.k, "Tightness instance: number of groups");
  run_cmd->add_option("--l", run.l, "Tightness instance: tags per group");
  run_cmd->add_option("--synthetic-m", run.synthetic_m, "Synthetic: tags");
  run_cmd->add_option("--synthetic-n", run.synthetic_n, "Synthetic: elements");
  run_cmd->add_option("--p-head", run.p_head, "Synthetic: head tag probability");
  run_cmd->add_option("--p-tail", run.p_tail, "Synthetic: tail tag probability");
  run_cmd->add_option("--head", run.head, "Synthetic: number of head tags");
  run_cmd->add_option("--synthetic-seed", run.synthetic_seed, "Synthetic: seed");
  run_cmd->add_option("--reference-seed", run.reference_seed,
                      "Seed of the double greedy reference (default: first seed)");
  run_cmd->add_option("--cost", run.cost, "Uniform element cost (dist-*)");
  run_cmd->add_option("--timeout-ms", run.timeout_ms,
                      "Exact subroutine timeout, 0 for none");
  run_cmd->add_flag("--no-timing", run.no_timing, "Write wall_ms as 0");
  run_cmd->add_option("--initial-guess", run.initial_guess,
                      "singleton|one-plus-alpha")
      ->check(CLI::IsMember({"singleton", "one-plus-alpha"}));

  PlotFlags plot;
  CLI::App* plot_cmd = app.add_subcommand("plot", "Aggregate a results CSV");
  plot_cmd->add_option("--in", plot.in, "Results CSV")->required();
  plot_cmd->add_option("--x", plot.x, "eps|tau")->check(CLI::IsMember({"eps", "tau"}));
  plot_cmd->add_option("--metric", plot.metric, "f|size|queries")
      ->check(CLI::IsMember({"f", "size", "queries"}));
  plot_cmd->add_option("--out", plot.out, "Output TSV (default stdout)");

  CLI11_PARSE(app, argc, argv);
  try {
    if (*run_cmd) return Run(run);
    if (*plot_cmd) return Plot(plot);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  }
  return 0;
}
