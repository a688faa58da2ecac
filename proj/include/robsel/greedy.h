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

#ifndef ROBSEL_GREEDY_H_
#define ROBSEL_GREEDY_H_

#include <cstdint>

#include "robsel/objective.h"
#include "robsel/trace.h"

namespace robsel {

// Throws InvalidBudgetError unless 1 <= k <= n.
void CheckBudget(int k, int n);

// Worst-case evaluations consumed by GreedySelect: sum_{j=1..k} (n - j + 1).
int64_t GreedyEvaluationCount(int n, int k);

// Worst-case evaluations consumed by ModifiedGreedySelect without caching.
int64_t ModifiedGreedyEvaluationCount(int n, int k);

// Adds, k times, the item maximizing F(X + v). Ties go to the lowest index.
// The trace holds X_1..X_k with F(X_j) and the cumulative evaluation count.
SelectionResult GreedySelect(const ObjectiveEnsemble& ensemble, int k);

struct ModifiedGreedyOptions {
  // Reuse the first scan's values for the ratio scan, halving the cost.
  // Off by default so the evaluation count matches the uncached algorithm.
  bool cache_best_gains = false;
};

// Each iteration first finds, for every f_i, the largest single-item gain
// g_i* at X_j, then adds the item maximizing min_i gain_i(v) / g_i*.
// A term with g_i* = 0 counts as 1 (monotonicity makes every gain zero).
SelectionResult ModifiedGreedySelect(const ObjectiveEnsemble& ensemble, int k,
                                     ModifiedGreedyOptions options = {});

}  // namespace robsel

#endif  // ROBSEL_GREEDY_H_
