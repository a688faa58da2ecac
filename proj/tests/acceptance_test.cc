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

// Acceptance suite: one PASS/FAIL line per criterion, nonzero exit if any
// criterion fails. Tolerances and instance counts are pinned here.

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include "robsel/config.h"
#include "robsel/experiment.h"
#include "robsel/rng.h"
#include "robsel/verify.h"

namespace {

constexpr uint64_t kSeed = 20260101;

struct Outcome {
  bool passed = false;
  std::string summary;
};

int failures = 0;

void Report(int id, const std::string& title, const Outcome& outcome) {
  std::printf("%s [%d] %s: %s\n", outcome.passed ? "PASS" : "FAIL", id, title.c_str(),
              outcome.summary.c_str());
  std::fflush(stdout);
  if (!outcome.passed) ++failures;
}

Outcome FromCheck(const robsel::CheckResult& r, double time_limit_seconds = 0.0) {
  Outcome o;
  o.passed = r.passed && (time_limit_seconds <= 0.0 || r.seconds < time_limit_seconds);
  o.summary = robsel::FormatCheck(r);
  if (time_limit_seconds > 0.0) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), " [limit %.0fs]", time_limit_seconds);
    o.summary += buf;
  }
  return o;
}

// 50-node random network: every node points at four distinct others.
std::string WriteTrendGraph() {
  const auto dir = std::filesystem::temp_directory_path() / "robsel_acceptance";
  std::filesystem::create_directories(dir);
  const auto path = dir / "network50.txt";
  std::ofstream out(path);
  out << "# 50-node random network\n";
  robsel::Rng rng(robsel::DeriveSeed(kSeed, {10}));
  for (int u = 0; u < 50; ++u) {
    std::vector<int> targets;
    while (targets.size() < 4) {
      const int v = static_cast<int>(rng() % 50);
      if (v == u || std::find(targets.begin(), targets.end(), v) != targets.end()) continue;
      targets.push_back(v);
      out << u << ' ' << v << '\n';
    }
  }
  return path.string();
}

Outcome NetworkTrend() {
  const auto start = std::chrono::steady_clock::now();
  std::istringstream text("mode = perturb-ic\ngraph = " + WriteTrendGraph() +
                          "\nk = 5\nm = 3\nr = 100\nalgorithms = greedy, eporss\n"
                          "eporss-T = auto\neporss-seeds = 10\nrepetitions = 10\nseed = " +
                          std::to_string(kSeed) + "\n");
  const robsel::ExperimentConfig config = robsel::ParseConfig(text, ".");
  const robsel::ExperimentOutput out =
      robsel::RunExperiment(config, robsel::ExperimentCommand::kRun);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  const robsel::SummaryRow* greedy = nullptr;
  const robsel::SummaryRow* eporss = nullptr;
  for (const auto& row : out.summary) {
    if (row.algorithm == "greedy") greedy = &row;
    if (row.algorithm == "eporss") eporss = &row;
  }
  Outcome o;
  if (!greedy || !eporss || !out.errors.empty()) {
    o.summary = "experiment did not produce both algorithms";
    return o;
  }
  const double pooled =
      std::sqrt((greedy->value_std * greedy->value_std + eporss->value_std * eporss->value_std) / 2);
  const double gap = eporss->value_mean - greedy->value_mean;
  const char* relation = gap > pooled    ? "EPORSS better by more than one pooled std"
                         : gap > 0.0     ? "EPORSS better, within one pooled std"
                         : gap == 0.0    ? "tied"
                                         : "greedy ahead, within tolerance";
  o.passed = eporss->value_mean >= greedy->value_mean - pooled && seconds < 600.0;
  char buf[256];
  std::snprintf(buf, sizeof(buf),
                "EPORSS mean %.4f (runs %d), greedy mean %.4f (runs %d), pooled std %.4f; "
                "%s; %.1fs [limit 600s]",
                eporss->value_mean, eporss->runs, greedy->value_mean, greedy->runs, pooled,
                relation, seconds);
  o.summary = buf;
  return o;
}

}  // namespace

int main() {
  using namespace robsel;
  const uint64_t pool = DeriveSeed(kSeed, {1});
  Report(1, "greedy approximation bound", FromCheck(CheckGreedyGuarantee(100, pool), 120));
  Report(2, "EPORSS approximation bound, best of 10 seeds",
         FromCheck(CheckEporssGuarantee(100, 10, pool), 300));
  Report(3, "evaluation counts for n <= 12", FromCheck(CheckEvaluationCounts(12, kSeed + 3)));
  Report(4, "spread Lipschitz bound", FromCheck(CheckSpreadLipschitz(200, 12, kSeed + 4)));
  Report(5, "correlation-ratio lower bound under perturbation",
         FromCheck(CheckBetaLowerBound(20, kSeed + 5)));
  Report(6, "one-step gain inequalities", FromCheck(CheckOneStepGains(100, kSeed + 6)));
  Report(7, "submodularity detection", FromCheck(CheckSubmodularityDetection(50, kSeed + 7)));
  Report(8, "Monte Carlo calibration",
         FromCheck(CheckMonteCarloCalibration(50, 10000, 1, kSeed + 8)));
  Report(9, "EPORSS archive invariants over 1e6 iterations",
         FromCheck(CheckPopulationInvariants(1'000'000, kSeed + 9)));
  Report(10, "EPORSS versus greedy trend on a 50-node network", NetworkTrend());
  std::printf("%d of 10 criteria failed\n", failures);
  return failures == 0 ? 0 : 1;
}
