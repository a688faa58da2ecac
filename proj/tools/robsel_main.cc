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

// robsel: run, sweep and trace experiments from a config file, or run the
// verification suite.
//
//   robsel run|sweep|trace|verify --config <path> [--seed N] [--out DIR]

#include <cstdio>
#include <exception>
#include <iostream>
#include <optional>
#include <string>

#include "CLI11.hpp"
#include "robsel/config.h"
#include "robsel/experiment.h"
#include "robsel/verify.h"

namespace {

struct Flags {
  std::string config_path;
  std::optional<uint64_t> seed;
  std::string out_dir;
  std::string tier;
};

void AddCommonFlags(CLI::App* cmd, Flags& flags, bool config_required) {
  auto* config = cmd->add_option("--config", flags.config_path, "Experiment config file");
  if (config_required) config->required()->check(CLI::ExistingFile);
  cmd->add_option("--seed", flags.seed, "Override the config seed");
  cmd->add_option("--out", flags.out_dir, "Override the output directory");
}

void PrintSummary(const robsel::ExperimentOutput& output) {
  std::printf("%-16s %4s %3s %5s %14s %12s %14s\n", "algorithm", "k", "m", "runs",
              "F_mean", "F_std", "evals_mean");
  for (const auto& row : output.summary) {
    std::printf("%-16s %4d %3d %5d %14.6f %12.6f %14.1f\n", row.algorithm.c_str(),
                row.k, row.m, row.runs, row.value_mean, row.value_std,
                row.evaluations_mean);
  }
}

int RunExperimentCommand(const Flags& flags, robsel::ExperimentCommand command) {
  robsel::ExperimentConfig config = robsel::LoadConfigFile(flags.config_path);
  if (flags.seed) config.seed = *flags.seed;
  if (!flags.out_dir.empty()) config.output_dir = flags.out_dir;
  const robsel::ExperimentOutput output = robsel::RunExperiment(config, command);
  robsel::WriteOutputs(output, config.output_dir);
  PrintSummary(output);
  std::printf("outputs written to %s\n", config.output_dir.c_str());
  for (const std::string& e : output.errors) std::cerr << "error: " << e << "\n";
  return output.errors.empty() ? 0 : 1;
}

int RunVerify(const Flags& flags) {
  uint64_t seed = 0;
  std::string tier = "tiny";
  if (!flags.config_path.empty()) {
    const robsel::ExperimentConfig config = robsel::LoadConfigFile(flags.config_path);
    seed = config.seed;
    tier = config.verify_tier;
  }
  if (flags.seed) seed = *flags.seed;
  if (!flags.tier.empty()) tier = flags.tier;
  const auto results =
      robsel::RunVerification(robsel::ParseVerifyTier(tier), seed, &std::cout);
  int failed = 0;
  for (const auto& r : results) failed += r.passed ? 0 : 1;
  std::printf("%d/%zu checks passed\n", static_cast<int>(results.size()) - failed,
              results.size());
  return failed == 0 ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Robust subset selection experiments"};
  app.set_version_flag("--version", std::string(ROBSEL_VERSION));
  app.require_subcommand(1);

  Flags flags;
  auto* run = app.add_subcommand("run", "Run the configured algorithms once per grid point");
  auto* sweep = app.add_subcommand("sweep", "Sweep k or m over a range");
  auto* trace = app.add_subcommand("trace", "Record EPORSS best-feasible F over time");
  auto* verify = app.add_subcommand("verify", "Run the guarantee and invariant checks");
  for (auto* cmd : {run, sweep, trace}) AddCommonFlags(cmd, flags, true);
  AddCommonFlags(verify, flags, false);
  verify->add_option("--tier", flags.tier, "Instance scale")
      ->check(CLI::IsMember({"tiny", "small"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run) return RunExperimentCommand(flags, robsel::ExperimentCommand::kRun);
    if (*sweep) return RunExperimentCommand(flags, robsel::ExperimentCommand::kSweep);
    if (*trace) return RunExperimentCommand(flags, robsel::ExperimentCommand::kTrace);
    return RunVerify(flags);
  } catch (const std::exception& e) {
    std::cerr << "robsel: " << e.what() << "\n";
    return 2;
  }
}
