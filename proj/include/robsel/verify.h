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

// Oracle-backed checks of the approximation guarantees and structural
// invariants, run on generated desk-scale instances. `robsel verify` and the
// acceptance suite both drive these.

#ifndef ROBSEL_VERIFY_H_
#define ROBSEL_VERIFY_H_

#include <cstdint>
#include <memory>
#include <ostream>
#include <string>
#include <vector>

#include "robsel/graph.h"
#include "robsel/objective.h"
#include "robsel/rng.h"

namespace robsel {

struct CheckResult {
  std::string name;
  bool passed = false;
  int64_t cases = 0;
  int64_t violations = 0;
  std::string detail;
  double seconds = 0.0;
};

// Random deterministic instance: m functions drawn from {modular, coverage,
// sqrt-of-modular, log1p-of-modular} on n items, plus a budget k.
struct RandomInstance {
  std::unique_ptr<ObjectiveEnsemble> ensemble;
  int k = 1;
  std::string description;
};

struct InstanceShape {
  int min_n = 3;
  int max_n = 10;
  int max_k = 3;
  int max_m = 3;
  bool allow_non_submodular = false;  // adds power-of-modular (exponent 2)
};

RandomInstance MakeRandomInstance(Rng& rng, const InstanceShape& shape);

// Random simple digraph on n nodes with exactly min(edges, n(n-1)) edges.
DirectedGraph MakeRandomGraph(Rng& rng, int n, int edges);

// F(greedy) >= (1 - e^{-beta gamma}) OPT - 1e-9.
CheckResult CheckGreedyGuarantee(int instances, uint64_t seed);

// Best of `seeds` EPORSS runs with T = 2 floor(2e k^2 n) reaches
// (1 - e^{-beta' gamma'}) OPT - 1e-9.
CheckResult CheckEporssGuarantee(int instances, int seeds, uint64_t seed);

// Exact greedy / modified-greedy evaluation counts for 1 <= k <= n <= max_n.
CheckResult CheckEvaluationCounts(int max_n, uint64_t seed);

// |sigma_theta(X) - sigma_theta'(X)| <= n delta(theta, theta') + 1e-9 with
// exact live-edge spreads on graphs of at most `max_edges` edges.
CheckResult CheckSpreadLipschitz(int triples, int max_edges, uint64_t seed);

// beta_{X_j} >= 1 - 2en delta_max - 1e-9 on greedy prefixes of exact-oracle
// IC ensembles perturbed so that delta_max < 1/(4en), for prefixes where
// every sigma_i(X_j) < (1 - 1/e) n.
CheckResult CheckBetaLowerBound(int instances, uint64_t seed);

// Best single-item gains versus the one-step inequalities, per function
// (gamma_{X,k}(f_i)/k)(OPT_i - f_i(X)) and for F
// (beta_X gamma^min_{X,k}/k)(OPT - F(X)).
CheckResult CheckOneStepGains(int pairs, uint64_t seed);

// gamma_{X,b} == 1 for coverage functions; < 1 for supermodular witnesses.
CheckResult CheckSubmodularityDetection(int triples, uint64_t seed);

// |MC(r) - exact| <= 4 s / sqrt(r) on `cases` random small graphs; at most
// `allowed_failures` misses.
CheckResult CheckMonteCarloCalibration(int cases, int replicates,
                                       int allowed_failures, uint64_t seed);

// Fuzzed EPORSS runs totalling `total_iterations`, validating the archive
// after every insert plus monotone best-feasible F and the 2k threshold.
CheckResult CheckPopulationInvariants(int64_t total_iterations, uint64_t seed);

enum class VerifyTier { kTiny, kSmall };

VerifyTier ParseVerifyTier(const std::string& text);

// Runs every check at the tier's scale, printing one line per check to
// `log` when given.
std::vector<CheckResult> RunVerification(VerifyTier tier, uint64_t seed,
                                         std::ostream* log);

std::string FormatCheck(const CheckResult& result);

}  // namespace robsel

#endif  // ROBSEL_VERIFY_H_
