// Copyright 2026 The Robsel Authors.
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

// Experiment harness behind `robsel run|sweep|trace`: builds the objective
// ensembles a config describes, runs the selected algorithms as independent
// jobs and collects rows for the CSV outputs.

#ifndef ROBSEL_EXPERIMENT_H_
#define ROBSEL_EXPERIMENT_H_

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "robsel/config.h"
#include "robsel/diffusion.h"
#include "robsel/graph.h"
#include "robsel/objective.h"
#include "robsel/set_function.h"

namespace robsel {

// "modular:3,2,1" or "coverage:0+1,1,2+3"; throws ConfigError.
std::shared_ptr<const SetFunction> ParseSyntheticFunction(const std::string& spec);

// Everything shared by all grid points and repetitions of one config:
// loaded graphs and the perturbation draws, so sweep points compare
// algorithms on the same sampled objectives.
class Workload {
 public:
  static Workload Prepare(const ExperimentConfig& config);

  int num_items() const { return static_cast<int>(labels_.size()); }
  const std::vector<std::string>& labels() const { return labels_; }
  bool noisy() const { return noisy_; }
  // Largest m the workload can serve.
  int max_objectives() const;
  const std::vector<std::string>& warnings() const { return warnings_; }
  int num_edges() const;

  // The first m objectives; `oracle_seed` drives Monte Carlo estimates.
  std::unique_ptr<ObjectiveEnsemble> BuildEnsemble(int m, uint64_t oracle_seed) const;

 private:
  Workload() = default;

  ExperimentMode mode_ = ExperimentMode::kSynthetic;
  int r_ = 1;
  SeedPolicy policy_ = SeedPolicy::kMemoizedPerSubset;
  GeneralICParams general_ic_;
  bool noisy_ = false;
  std::vector<std::string> labels_;
  std::vector<std::shared_ptr<const DirectedGraph>> graphs_;  // one, or one per snapshot
  std::vector<ProbabilityVector> thetas_;                     // perturb-ic only
  std::vector<std::shared_ptr<const SetFunction>> functions_;  // synthetic only
  std::vector<std::string> warnings_;
};

struct RunRecord {
  std::string algorithm;
  int k = 0;
  int m = 0;
  int repetition = 0;
  uint64_t seed = 0;
  double value = 0.0;
  int64_t evaluations = 0;
  double wall_ms = 0.0;
  std::string subset;  // labels joined by ';'
};

struct SummaryRow {
  std::string algorithm;
  int k = 0;
  int m = 0;
  int runs = 0;
  double value_mean = 0.0;
  double value_std = 0.0;  // sample standard deviation, 0 for a single run
  double evaluations_mean = 0.0;
  double wall_ms_mean = 0.0;
};

struct TraceRow {
  std::string series;
  int64_t iteration = 0;
  double iteration_kn = 0.0;
  double value = 0.0;
};

enum class ExperimentCommand { kRun, kSweep, kTrace };

struct ExperimentOutput {
  ExperimentCommand command = ExperimentCommand::kRun;
  std::string sweep_param;  // "k" or "m" for sweeps
  std::vector<RunRecord> records;
  std::vector<SummaryRow> summary;
  std::vector<TraceRow> trace;
  std::string metadata_json;
  // Jobs that threw; their rows are missing from `records`.
  std::vector<std::string> errors;
};

// Validates `config` for `command`; throws ConfigError.
void ValidateFor(const ExperimentConfig& config, ExperimentCommand command);

ExperimentOutput RunExperiment(const ExperimentConfig& config,
                               ExperimentCommand command);

// One row per (algorithm, k, m) in first-appearance order of `records`.
std::vector<SummaryRow> Summarize(const std::vector<RunRecord>& records);

void WriteResultsCsv(std::ostream& out, const std::vector<RunRecord>& records);
void WriteSummaryCsv(std::ostream& out, const std::vector<SummaryRow>& rows);
void WriteSweepCsv(std::ostream& out, const std::string& param,
                   const std::vector<SummaryRow>& rows);
void WriteTraceCsv(std::ostream& out, const std::vector<TraceRow>& rows);

// Writes every file the command produces into `dir` (created if missing).
void WriteOutputs(const ExperimentOutput& output, const std::string& dir);

}  // namespace robsel

#endif  // ROBSEL_EXPERIMENT_H_
