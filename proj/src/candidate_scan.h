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

#ifndef ROBSEL_SRC_CANDIDATE_SCAN_H_
#define ROBSEL_SRC_CANDIDATE_SCAN_H_

#include <vector>

#include "robsel/objective.h"
#include "robsel/parallel.h"
#include "robsel/subset.h"

namespace robsel::internal {

// Items of the ground set not in `x`, ascending.
inline std::vector<int> Complement(const Subset& x) {
  std::vector<int> out;
  for (int v = 0; v < x.universe_size(); ++v) {
    if (!x.contains(v)) out.push_back(v);
  }
  return out;
}

// values[c] = (f_1(x + candidates[c]), ..., f_m(x + candidates[c])).
// Costs one worst-case evaluation per candidate. Only noisy (expensive)
// ensembles fan out; cheap deterministic oracles stay on the calling thread.
inline std::vector<std::vector<double>> ScanCandidates(
    const ObjectiveEnsemble& ensemble, const Subset& x,
    const std::vector<int>& candidates) {
  std::vector<std::vector<double>> values(candidates.size());
  ParallelFor(
      candidates.size(),
      [&](size_t c) { values[c] = ensemble.EvaluateAll(x.With(candidates[c])); },
      ensemble.stochastic() ? WorkerCount() : 1);
  return values;
}

inline double MinOf(const std::vector<double>& values) {
  double m = values.front();
  for (double v : values) m = v < m ? v : m;
  return m;
}

}  // namespace robsel::internal

#endif  // ROBSEL_SRC_CANDIDATE_SCAN_H_
