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

// Experiment configuration: flat "key = value" text, '#' comments, list
// values comma separated, integer ranges written "lo..hi".

#ifndef ROBSEL_CONFIG_H_
#define ROBSEL_CONFIG_H_

#include <cstdint>
#include <istream>
#include <string>
#include <utility>
#include <vector>

#include "robsel/diffusion.h"
#include "robsel/saturate.h"
#include "robsel/spread_function.h"

namespace robsel {

enum class ExperimentMode { kPerturbIc, kMultiGraphGeneralIc, kSynthetic };

std::string ToString(ExperimentMode mode);

struct IntRange {
  int lo = 0;
  int hi = 0;
  bool is_range() const { return lo != hi; }
  int count() const { return hi - lo + 1; }
};

struct ExperimentConfig {
  ExperimentMode mode = ExperimentMode::kPerturbIc;
  std::vector<std::string> graph_paths;  // resolved against the config dir
  IntRange m{3, 3};
  IntRange k{5, 5};
  int r = 100;
  int node_limit = 200;
  uint64_t seed = 0;
  std::vector<std::string> algorithms{"greedy", "modified-greedy", "saturate",
                                      "eporss"};
  int64_t eporss_iterations = -1;  // -1 is "auto"
  int eporss_seeds = 10;
  int repetitions = 10;  // deterministic algorithms on noisy oracles
  SaturateConfig saturate;
  std::string output_dir = ".";
  SeedPolicy seed_policy = SeedPolicy::kMemoizedPerSubset;
  double perturb_lo = 0.9;
  double perturb_hi = 1.1;
  GeneralICParams general_ic;
  bool record_timing = false;  // wall_ms is 0 unless set
  std::string verify_tier = "tiny";  // `robsel verify`: tiny or small
  // Synthetic mode: one spec per function, "modular:3,2,1" or
  // "coverage:0+1,1,2+3" (elements covered by each item).
  std::vector<std::string> synthetic_functions;

  // Every key as written, in file order, for the metadata echo.
  std::vector<std::pair<std::string, std::string>> entries;

  bool HasAlgorithm(const std::string& name) const;

  // Throws ConfigError on the first violated constraint.
  void Validate() const;
};

// Throws ConfigError naming the line for unknown keys or bad values.
ExperimentConfig ParseConfig(std::istream& in, const std::string& base_dir = ".");
ExperimentConfig LoadConfigFile(const std::string& path);

}  // namespace robsel

#endif  // ROBSEL_CONFIG_H_
