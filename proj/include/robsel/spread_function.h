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

#ifndef ROBSEL_SPREAD_FUNCTION_H_
#define ROBSEL_SPREAD_FUNCTION_H_

#include <atomic>
#include <cstdint>
#include <memory>
#include <string>

#include "robsel/diffusion.h"
#include "robsel/graph.h"
#include "robsel/set_function.h"

namespace robsel {

// How a noisy oracle picks simulation seeds.
enum class SeedPolicy {
  // Seed derived from (run seed, stream, subset hash): a subset always gets
  // the same estimate within a run.
  kMemoizedPerSubset,
  // Fresh seed per call (from an internal call counter).
  kFreshSample,
};

std::string ToString(SeedPolicy policy);
SeedPolicy ParseSeedPolicy(const std::string& text);

// sigma_theta(X) computed exactly by live-edge enumeration.
class ExactSpreadFunction : public SetFunction {
 public:
  ExactSpreadFunction(std::shared_ptr<const DirectedGraph> graph,
                      ProbabilityVector theta);

  int ground_size() const override { return graph_->num_nodes(); }
  double Evaluate(const Subset& x) const override;
  std::string name() const override { return "exact-ic-spread"; }

  const ProbabilityVector& theta() const { return theta_; }

 private:
  std::shared_ptr<const DirectedGraph> graph_;
  ProbabilityVector theta_;
};

// Monte Carlo mean of `replicates` simulations.
class MonteCarloSpreadFunction : public SetFunction {
 public:
  MonteCarloSpreadFunction(int num_nodes, Simulator simulator, int replicates,
                           SeedPolicy policy, uint64_t run_seed, uint64_t stream,
                           std::string name);

  int ground_size() const override { return num_nodes_; }
  double Evaluate(const Subset& x) const override;
  bool stochastic() const override { return true; }
  std::string name() const override { return name_; }

 private:
  int num_nodes_;
  Simulator simulator_;
  int replicates_;
  SeedPolicy policy_;
  uint64_t run_seed_;
  uint64_t stream_;
  std::string name_;
  mutable std::atomic<uint64_t> calls_{0};
};

// `stream` distinguishes the functions of one ensemble (use the index i).
std::shared_ptr<MonteCarloSpreadFunction> MakeICSpreadFunction(
    std::shared_ptr<const DirectedGraph> graph, ProbabilityVector theta,
    int replicates, SeedPolicy policy, uint64_t run_seed, uint64_t stream);

std::shared_ptr<MonteCarloSpreadFunction> MakeGeneralICSpreadFunction(
    std::shared_ptr<const DirectedGraph> graph, GeneralICParams params,
    int replicates, SeedPolicy policy, uint64_t run_seed, uint64_t stream);

}  // namespace robsel

#endif  // ROBSEL_SPREAD_FUNCTION_H_
