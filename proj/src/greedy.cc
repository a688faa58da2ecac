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

#include "robsel/greedy.h"

#include <limits>
#include <vector>

#include "candidate_scan.h"
#include "robsel/errors.h"

namespace robsel {

void CheckBudget(int k, int n) {
  if (k < 1 || k > n) {
    throw InvalidBudgetError("budget k=" + std::to_string(k) +
                             " must lie in [1, " + std::to_string(n) + "]");
  }
}

int64_t GreedyEvaluationCount(int n, int k) {
  // (n - k/2 + 1/2) * k, kept in integers.
  return static_cast<int64_t>(2 * n - k + 1) * k / 2;
}

int64_t ModifiedGreedyEvaluationCount(int n, int k) {
  return static_cast<int64_t>(2 * n - k + 1) * k;
}

SelectionResult GreedySelect(const ObjectiveEnsemble& ensemble, int k) {
  const int n = ensemble.ground_size();
  CheckBudget(k, n);
  const int64_t start_count = ensemble.eval_count();

  SelectionResult result;
  result.trace.algorithm = "greedy";
  Subset x(n);
  double value = 0.0;
  for (int j = 1; j <= k; ++j) {
    const std::vector<int> candidates = internal::Complement(x);
    const auto values = internal::ScanCandidates(ensemble, x, candidates);
    size_t best = 0;
    double best_value = -std::numeric_limits<double>::infinity();
    for (size_t c = 0; c < candidates.size(); ++c) {
      const double f = internal::MinOf(values[c]);
      if (f > best_value) {
        best_value = f;
        best = c;
      }
    }
    x.insert(candidates[best]);
    value = best_value;
    result.trace.steps.push_back({j, candidates[best], x, value,
                                  ensemble.eval_count() - start_count});
  }
  result.subset = std::move(x);
  result.value = value;
  return result;
}

SelectionResult ModifiedGreedySelect(const ObjectiveEnsemble& ensemble, int k,
                                     ModifiedGreedyOptions options) {
  const int n = ensemble.ground_size();
  const int m = ensemble.num_functions();
  CheckBudget(k, n);
  const int64_t start_count = ensemble.eval_count();

  SelectionResult result;
  result.trace.algorithm =
      options.cache_best_gains ? "modified-greedy-cached" : "modified-greedy";
  Subset x(n);
  // f_i(X_0) = 0 by normalization; afterwards f_i(X_j) is carried over from
  // the scan that selected the j-th item.
  std::vector<double> base(m, 0.0);
  for (int j = 1; j <= k; ++j) {
    const std::vector<int> candidates = internal::Complement(x);

    // a_i*: the best single addition for each f_i.
    const auto first = internal::ScanCandidates(ensemble, x, candidates);
    std::vector<double> best_gain(m, -std::numeric_limits<double>::infinity());
    for (size_t c = 0; c < candidates.size(); ++c) {
      for (int i = 0; i < m; ++i) {
        const double gain = first[c][i] - base[i];
        if (gain > best_gain[i]) best_gain[i] = gain;
      }
    }

    const auto second = options.cache_best_gains
                            ? first
                            : internal::ScanCandidates(ensemble, x, candidates);
    size_t best = 0;
    double best_ratio = -std::numeric_limits<double>::infinity();
    for (size_t c = 0; c < candidates.size(); ++c) {
      double ratio = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m; ++i) {
        const double term =
            best_gain[i] > 0.0 ? (second[c][i] - base[i]) / best_gain[i] : 1.0;
        if (term < ratio) ratio = term;
      }
      if (ratio > best_ratio) {
        best_ratio = ratio;
        best = c;
      }
    }
    x.insert(candidates[best]);
    base = second[best];
    result.trace.steps.push_back({j, candidates[best], x, internal::MinOf(base),
                                  ensemble.eval_count() - start_count});
  }
  result.subset = std::move(x);
  result.value = internal::MinOf(base);
  return result;
}

}  // namespace robsel
