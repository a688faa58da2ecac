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

#ifndef ROBSEL_TRACE_H_
#define ROBSEL_TRACE_H_

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "robsel/subset.h"

namespace robsel {

// One record per solver iteration. `item` is the index added at this step,
// or -1 for solvers that do not grow a single path (SATURATE rounds, EPORSS
// samples). For the greedy family, `subset` is X_j and `iteration` is j.
struct TraceStep {
  int64_t iteration = 0;
  int item = -1;
  Subset subset;
  double value = 0.0;
  int64_t evaluations = 0;
};

struct RunTrace {
  std::string algorithm;
  std::optional<uint64_t> seed;
  std::vector<TraceStep> steps;
};

struct SelectionResult {
  Subset subset;
  double value = 0.0;
  RunTrace trace;
};

}  // namespace robsel

#endif  // ROBSEL_TRACE_H_
