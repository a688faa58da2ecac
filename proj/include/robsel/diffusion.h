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

#ifndef ROBSEL_DIFFUSION_H_
#define ROBSEL_DIFFUSION_H_

#include <cstdint>
#include <functional>
#include <istream>
#include <ostream>
#include <span>
#include <vector>

#include "robsel/graph.h"
#include "robsel/rng.h"
#include "robsel/subset.h"

namespace robsel {

// Per-edge activation probabilities, indexed like DirectedGraph::edges().
class ProbabilityVector {
 public:
  ProbabilityVector() = default;
  // Throws std::invalid_argument if any entry lies outside [0, 1].
  explicit ProbabilityVector(std::vector<double> probs);

  size_t size() const { return probs_.size(); }
  double operator[](size_t e) const { return probs_[e]; }
  const std::vector<double>& values() const { return probs_; }

  friend bool operator==(const ProbabilityVector&, const ProbabilityVector&) = default;

 private:
  std::vector<double> probs_;
};

// p(u, v) = weight(u, v) / indegree(v), clamped to [0, 1].
ProbabilityVector WeightedCascadeProbabilities(const DirectedGraph& graph);

// m vectors with entries drawn uniformly from [lo p, hi p], clamped to [0, 1].
std::vector<ProbabilityVector> PerturbProbabilities(const ProbabilityVector& theta,
                                                    double lo_factor,
                                                    double hi_factor, int m,
                                                    Rng& rng);

// One independent-cascade run from `seeds`: every newly activated node gets
// a single chance, in the next step, to activate each inactive out-neighbour
// with that edge's probability. Returns the number of active nodes.
int SimulateIC(const DirectedGraph& graph, const ProbabilityVector& theta,
               const Subset& seeds, Rng& rng);

// Activation probability min(base + increment |S_v|, cap), where S_v is the
// set of in-neighbours that already tried and failed to activate v.
struct GeneralICParams {
  double base = 0.1;
  double increment = 0.05;
  double cap = 1.0;

  void Validate() const;
  double AttemptProbability(int failed_attempts) const;
};

// General-IC cascade. Within a step, newly active nodes attempt in ascending
// id order; failed-attempt counts persist across steps.
int SimulateGeneralIC(const DirectedGraph& graph, const GeneralICParams& params,
                      const Subset& seeds, Rng& rng);

using Simulator = std::function<int(const Subset&, Rng&)>;

struct SpreadEstimate {
  double mean = 0.0;
  double sample_stddev = 0.0;  // of single runs, n - 1 denominator
  int replicates = 0;
};

// Replicate i runs with an Rng seeded by DeriveSeed(seed, {i}), so results
// do not depend on how replicates are scheduled.
SpreadEstimate EstimateSpreadWithError(const Simulator& simulator,
                                       const Subset& seeds, int replicates,
                                       uint64_t seed);
double EstimateSpread(const Simulator& simulator, const Subset& seeds,
                      int replicates, uint64_t seed);

// Enumeration cap for ExactSpreadLiveEdge.
inline constexpr int kMaxExactEdges = 22;

// Expected IC spread as sum over all 2^|E| live-edge subgraphs S of
// Pr_theta(S) * |reachable(seeds in S)|. Throws SizeLimitError above
// kMaxExactEdges edges.
double ExactSpreadLiveEdge(const DirectedGraph& graph,
                           const ProbabilityVector& theta, const Subset& seeds);

// L1 distance; throws std::invalid_argument on length mismatch.
double VectorDistance(const ProbabilityVector& a, const ProbabilityVector& b);

// Largest pairwise L1 distance (0 for fewer than two vectors).
double MaxPairwiseDistance(std::span<const ProbabilityVector> thetas);

// 1 - 2 e n delta_max; non-positive values are vacuous.
double BetaLowerBound(int n, double delta_max);

// Text format: "#edges=<E>" then one value per line in edge order.
void WriteProbabilityVector(std::ostream& out, const ProbabilityVector& theta);
ProbabilityVector ReadProbabilityVector(std::istream& in);

}  // namespace robsel

#endif  // ROBSEL_DIFFUSION_H_
