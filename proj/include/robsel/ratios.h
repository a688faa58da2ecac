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

// Brute-force oracles for the approximation-guarantee constants. Everything
// here is exponential-time and meant for instances with a dozen items or so.

#ifndef ROBSEL_RATIOS_H_
#define ROBSEL_RATIOS_H_

#include <cstdint>
#include <string>
#include <vector>

#include "robsel/objective.h"
#include "robsel/set_function.h"
#include "robsel/subset.h"
#include "robsel/trace.h"

namespace robsel {

inline constexpr int64_t kMaxRatioPairs = 10'000'000;
inline constexpr int64_t kMaxEnumeratedSubsets = 1'000'000;

// gamma_{X,b}(f): min over L subset of X and nonempty S with |S| <= b,
// S disjoint from L, of
//   sum_{v in S} [f(L + v) - f(L)] / [f(L + S) - f(L)].
// Pairs with a zero denominator are skipped; returns 1 if all are skipped.
// Throws SizeLimitError past kMaxRatioPairs pairs.
double SubmodularityRatio(const SetFunction& f, const Subset& x, int b);

// beta_X: max over v outside X of min_i gain_i(v) / gain_i(v^i), where v^i
// is f_i's best single addition (lowest index on ties). Terms whose
// denominator is zero count as 1. Throws std::invalid_argument if X = V.
double CorrelationRatio(const ObjectiveEnsemble& ensemble, const Subset& x);

struct OptimumResult {
  double value = 0.0;
  Subset witness;
};

// max F(X) over |X| <= k. Ties prefer ItemOrderLess-smallest witnesses.
// Throws SizeLimitError past kMaxEnumeratedSubsets subsets.
OptimumResult ExhaustiveOptimum(const ObjectiveEnsemble& ensemble, int k);
OptimumResult ExhaustiveOptimum(const SetFunction& f, int k);

struct GuaranteeReport {
  double opt = 0.0;
  std::vector<double> opt_per_function;
  double beta = 1.0;        // min over greedy prefixes X_0..X_{k-1}
  double gamma = 1.0;       // min_i gamma_{X_{k-1},k}(f_i)
  double beta_prime = 1.0;  // min over all |X| <= k-1
  double gamma_prime = 1.0; // min_i min_{|X| = k-1} gamma_{X,k}(f_i)
  double ratio_bound = 0.0;        // 1 - exp(-beta gamma)
  double ratio_bound_prime = 0.0;  // 1 - exp(-beta' gamma')

  // One "key=value" per line.
  std::string ToKeyValue() const;
};

// `greedy_trace` must hold at least the first k-1 greedy steps.
GuaranteeReport ComputeGuaranteeReport(const ObjectiveEnsemble& ensemble, int k,
                                       const RunTrace& greedy_trace);

}  // namespace robsel

#endif  // ROBSEL_RATIOS_H_
