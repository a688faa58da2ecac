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

#ifndef ROBSEL_SATURATE_H_
#define ROBSEL_SATURATE_H_

#include "robsel/objective.h"
#include "robsel/trace.h"

namespace robsel {

// Relative slack applied to the "target reached" test.
inline constexpr double kSaturateSlack = 1e-9;

struct SaturateConfig {
  double alpha = 1.0;     // cardinality relaxation; 1 keeps |X| <= k
  double epsilon = 1e-3;  // stop when width <= epsilon * max(1, c_max)
  int max_rounds = 60;

  // Throws std::invalid_argument unless alpha >= 1, epsilon > 0 and
  // max_rounds >= 1.
  void Validate() const;
};

// H_c(X) = (1/m) sum_i min(f_i(X), c).
double TruncatedMean(const std::vector<double>& values, double c);

// Greedy on H_c: adds the item with the largest H_c gain (lowest index on
// ties) until H_c(X) >= c(1 - slack), |X| = limit, or no item has positive
// gain.
Subset TruncatedGreedy(const ObjectiveEnsemble& ensemble, double c, int limit);

struct SaturateResult {
  SelectionResult selection;
  bool found_feasible = false;  // false: only the empty set was feasible
  int rounds = 0;               // TruncatedGreedy invocations
  double c_max = 0.0;
};

// Bisection on the target c over [0, min_i f_i(V)]. Round 1 probes c_max
// itself; later rounds bisect. A round is feasible when TruncatedGreedy
// reaches the target within floor(alpha k) items. Returns the recorded
// feasible set with the largest true F.
SaturateResult SaturateSelect(const ObjectiveEnsemble& ensemble, int k,
                              const SaturateConfig& config = {});

}  // namespace robsel

#endif  // ROBSEL_SATURATE_H_
