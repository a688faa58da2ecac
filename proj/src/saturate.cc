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

#include "robsel/saturate.h"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include "candidate_scan.h"
#include "robsel/greedy.h"

namespace robsel {
namespace {

struct TruncatedRun {
  Subset subset;
  std::vector<double> values;  // f_i(subset)
  double h = 0.0;
};

bool TargetReached(double h, double c) { return h >= c * (1.0 - kSaturateSlack); }

TruncatedRun RunTruncatedGreedy(const ObjectiveEnsemble& ensemble, double c,
                                int limit) {
  TruncatedRun run{Subset(ensemble.ground_size()),
                   std::vector<double>(ensemble.num_functions(), 0.0), 0.0};
  while (!TargetReached(run.h, c) && run.subset.size() < limit) {
    const std::vector<int> candidates = internal::Complement(run.subset);
    if (candidates.empty()) break;
    const auto values = internal::ScanCandidates(ensemble, run.subset, candidates);
    size_t best = 0;
    double best_h = -1.0;
    for (size_t i = 0; i < candidates.size(); ++i) {
      const double h = TruncatedMean(values[i], c);
      if (h > best_h) {
        best_h = h;
        best = i;
      }
    }
    if (!(best_h > run.h)) break;
    run.subset.insert(candidates[best]);
    run.values = values[best];
    run.h = best_h;
  }
  return run;
}

}  // namespace

void SaturateConfig::Validate() const {
  if (!(alpha >= 1.0)) throw std::invalid_argument("SATURATE alpha must be >= 1");
  if (!(epsilon > 0.0)) throw std::invalid_argument("SATURATE epsilon must be > 0");
  if (max_rounds < 1) throw std::invalid_argument("SATURATE max_rounds must be >= 1");
}

double TruncatedMean(const std::vector<double>& values, double c) {
  double total = 0.0;
  for (double v : values) total += std::min(v, c);
  return total / static_cast<double>(values.size());
}

Subset TruncatedGreedy(const ObjectiveEnsemble& ensemble, double c, int limit) {
  if (!(c >= 0.0)) throw std::invalid_argument("target c must be >= 0");
  if (limit < 1) throw std::invalid_argument("limit must be >= 1");
  return RunTruncatedGreedy(ensemble, c, limit).subset;
}

SaturateResult SaturateSelect(const ObjectiveEnsemble& ensemble, int k,
                              const SaturateConfig& config) {
  const int n = ensemble.ground_size();
  CheckBudget(k, n);
  config.Validate();
  const int64_t start_count = ensemble.eval_count();
  const int limit =
      std::min(n, static_cast<int>(std::floor(config.alpha * k)));

  SaturateResult out;
  out.selection.trace.algorithm = "saturate";
  out.c_max = ensemble.EvaluateWorstCase(Subset::Full(n));

  Subset best(n);
  double best_value = 0.0;
  double lo = 0.0;
  double hi = out.c_max;
  const double width_tol = config.epsilon * std::max(1.0, out.c_max);

  auto try_target = [&](double c) {
    TruncatedRun run = RunTruncatedGreedy(ensemble, c, limit);
    ++out.rounds;
    const bool feasible = run.subset.size() <= limit && TargetReached(run.h, c);
    const double f = internal::MinOf(run.values);
    if (feasible) {
      if (!out.found_feasible || f > best_value) {
        best = run.subset;
        best_value = f;
      }
      out.found_feasible = true;
    }
    out.selection.trace.steps.push_back({out.rounds, -1, run.subset, f,
                                         ensemble.eval_count() - start_count});
    return feasible;
  };

  if (out.c_max > 0.0 && try_target(out.c_max)) {
    lo = hi;
  }
  while (hi - lo > width_tol && out.rounds < config.max_rounds) {
    const double c = 0.5 * (lo + hi);
    if (try_target(c)) {
      lo = c;
    } else {
      hi = c;
    }
  }

  out.selection.subset = std::move(best);
  out.selection.value = best_value;
  return out;
}

}  // namespace robsel
