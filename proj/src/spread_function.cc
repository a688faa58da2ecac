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

#include "robsel/spread_function.h"

#include <stdexcept>

#include "robsel/rng.h"

namespace robsel {

std::string ToString(SeedPolicy policy) {
  return policy == SeedPolicy::kMemoizedPerSubset ? "memoized" : "fresh";
}

SeedPolicy ParseSeedPolicy(const std::string& text) {
  if (text == "memoized" || text == "memoized-per-subset") {
    return SeedPolicy::kMemoizedPerSubset;
  }
  if (text == "fresh" || text == "fresh-sample") return SeedPolicy::kFreshSample;
  throw std::invalid_argument("unknown oracle mode '" + text + "'");
}

ExactSpreadFunction::ExactSpreadFunction(std::shared_ptr<const DirectedGraph> graph,
                                         ProbabilityVector theta)
    : graph_(std::move(graph)), theta_(std::move(theta)) {
  if (static_cast<int>(theta_.size()) != graph_->num_edges()) {
    throw std::invalid_argument("probability vector does not match graph");
  }
}

double ExactSpreadFunction::Evaluate(const Subset& x) const {
  return ExactSpreadLiveEdge(*graph_, theta_, x);
}

MonteCarloSpreadFunction::MonteCarloSpreadFunction(int num_nodes,
                                                   Simulator simulator,
                                                   int replicates,
                                                   SeedPolicy policy,
                                                   uint64_t run_seed,
                                                   uint64_t stream,
                                                   std::string name)
    : num_nodes_(num_nodes),
      simulator_(std::move(simulator)),
      replicates_(replicates),
      policy_(policy),
      run_seed_(run_seed),
      stream_(stream),
      name_(std::move(name)) {
  if (replicates < 1) throw std::invalid_argument("replicates must be >= 1");
}

double MonteCarloSpreadFunction::Evaluate(const Subset& x) const {
  if (x.empty()) return 0.0;
  const uint64_t key = policy_ == SeedPolicy::kMemoizedPerSubset
                           ? x.Hash()
                           : calls_.fetch_add(1, std::memory_order_relaxed);
  return EstimateSpread(simulator_, x, replicates_,
                        DeriveSeed(run_seed_, {stream_, key}));
}

std::shared_ptr<MonteCarloSpreadFunction> MakeICSpreadFunction(
    std::shared_ptr<const DirectedGraph> graph, ProbabilityVector theta,
    int replicates, SeedPolicy policy, uint64_t run_seed, uint64_t stream) {
  if (static_cast<int>(theta.size()) != graph->num_edges()) {
    throw std::invalid_argument("probability vector does not match graph");
  }
  const int n = graph->num_nodes();
  Simulator sim = [graph = std::move(graph), theta = std::move(theta)](
                      const Subset& seeds, Rng& rng) {
    return SimulateIC(*graph, theta, seeds, rng);
  };
  return std::make_shared<MonteCarloSpreadFunction>(
      n, std::move(sim), replicates, policy, run_seed, stream, "ic-spread");
}

std::shared_ptr<MonteCarloSpreadFunction> MakeGeneralICSpreadFunction(
    std::shared_ptr<const DirectedGraph> graph, GeneralICParams params,
    int replicates, SeedPolicy policy, uint64_t run_seed, uint64_t stream) {
  params.Validate();
  const int n = graph->num_nodes();
  Simulator sim = [graph = std::move(graph), params](const Subset& seeds,
                                                     Rng& rng) {
    return SimulateGeneralIC(*graph, params, seeds, rng);
  };
  return std::make_shared<MonteCarloSpreadFunction>(
      n, std::move(sim), replicates, policy, run_seed, stream,
      "general-ic-spread");
}

}  // namespace robsel
