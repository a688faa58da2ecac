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

#include "robsel/diffusion.h"

#include <algorithm>
#include <cmath>
#include <iomanip>
#include <numbers>
#include <stdexcept>
#include <string>

#include "robsel/errors.h"

namespace robsel {
namespace {

void CheckSeeds(const DirectedGraph& graph, const Subset& seeds) {
  if (seeds.universe_size() != graph.num_nodes()) {
    throw InvalidSubsetError("seed set is not over the graph's nodes");
  }
}

void CheckTheta(const DirectedGraph& graph, const ProbabilityVector& theta) {
  if (static_cast<int>(theta.size()) != graph.num_edges()) {
    throw std::invalid_argument("probability vector length " +
                                std::to_string(theta.size()) +
                                " does not match edge count " +
                                std::to_string(graph.num_edges()));
  }
}

double Clamp01(double p) { return std::clamp(p, 0.0, 1.0); }

}  // namespace

ProbabilityVector::ProbabilityVector(std::vector<double> probs)
    : probs_(std::move(probs)) {
  for (double p : probs_) {
    if (!(p >= 0.0 && p <= 1.0)) {
      throw std::invalid_argument("edge probabilities must lie in [0, 1]");
    }
  }
}

ProbabilityVector WeightedCascadeProbabilities(const DirectedGraph& graph) {
  std::vector<double> probs(graph.num_edges());
  for (int e = 0; e < graph.num_edges(); ++e) {
    const Edge& edge = graph.edge(e);
    probs[e] = Clamp01(edge.weight / graph.in_degree(edge.target));
  }
  return ProbabilityVector(std::move(probs));
}

std::vector<ProbabilityVector> PerturbProbabilities(const ProbabilityVector& theta,
                                                    double lo_factor,
                                                    double hi_factor, int m,
                                                    Rng& rng) {
  if (!(lo_factor >= 0.0 && lo_factor <= hi_factor)) {
    throw std::invalid_argument("perturbation needs 0 <= lo <= hi");
  }
  if (m < 1) throw std::invalid_argument("m must be >= 1");
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<ProbabilityVector> out;
  out.reserve(m);
  for (int i = 0; i < m; ++i) {
    std::vector<double> probs(theta.size());
    for (size_t e = 0; e < theta.size(); ++e) {
      const double lo = lo_factor * theta[e];
      const double hi = hi_factor * theta[e];
      probs[e] = Clamp01(lo + (hi - lo) * unit(rng));
    }
    out.emplace_back(std::move(probs));
  }
  return out;
}

int SimulateIC(const DirectedGraph& graph, const ProbabilityVector& theta,
               const Subset& seeds, Rng& rng) {
  CheckSeeds(graph, seeds);
  CheckTheta(graph, theta);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  std::vector<char> active(graph.num_nodes(), 0);
  std::vector<int> frontier = seeds.items();
  for (int u : frontier) active[u] = 1;
  int count = static_cast<int>(frontier.size());
  std::vector<int> next;
  while (!frontier.empty()) {
    next.clear();
    for (int u : frontier) {
      for (int e : graph.out_edges(u)) {
        const int v = graph.edge(e).target;
        if (active[v]) continue;
        if (unit(rng) < theta[e]) {
          active[v] = 1;
          next.push_back(v);
          ++count;
        }
      }
    }
    frontier.swap(next);
  }
  return count;
}

void GeneralICParams::Validate() const {
  if (!(base >= 0.0 && base <= cap && cap <= 1.0)) {
    throw std::invalid_argument("general IC needs 0 <= base <= cap <= 1");
  }
  if (!(increment >= 0.0)) {
    throw std::invalid_argument("general IC increment must be >= 0");
  }
}

double GeneralICParams::AttemptProbability(int failed_attempts) const {
  return std::min(base + increment * failed_attempts, cap);
}

int SimulateGeneralIC(const DirectedGraph& graph, const GeneralICParams& params,
                      const Subset& seeds, Rng& rng) {
  CheckSeeds(graph, seeds);
  std::uniform_real_distribution<double> unit(0.0, 1.0);
  const int n = graph.num_nodes();
  std::vector<char> active(n, 0);
  std::vector<int> failed(n, 0);
  std::vector<int> frontier = seeds.items();
  for (int u : frontier) active[u] = 1;
  int count = static_cast<int>(frontier.size());
  std::vector<int> next;
  while (!frontier.empty()) {
    std::sort(frontier.begin(), frontier.end());
    next.clear();
    for (int u : frontier) {
      for (int e : graph.out_edges(u)) {
        const int v = graph.edge(e).target;
        if (active[v]) continue;
        if (unit(rng) < params.AttemptProbability(failed[v])) {
          active[v] = 1;
          next.push_back(v);
          ++count;
        } else {
          ++failed[v];
        }
      }
    }
    frontier.swap(next);
  }
  return count;
}

SpreadEstimate EstimateSpreadWithError(const Simulator& simulator,
                                       const Subset& seeds, int replicates,
                                       uint64_t seed) {
  if (replicates < 1) throw std::invalid_argument("replicates must be >= 1");
  // Counts are integers, so these sums are exact and order independent.
  double sum = 0.0;
  double sum_sq = 0.0;
  for (int i = 0; i < replicates; ++i) {
    Rng rng(DeriveSeed(seed, {static_cast<uint64_t>(i)}));
    const double c = simulator(seeds, rng);
    sum += c;
    sum_sq += c * c;
  }
  SpreadEstimate est;
  est.replicates = replicates;
  est.mean = sum / replicates;
  if (replicates > 1) {
    const double var = (sum_sq - sum * sum / replicates) / (replicates - 1);
    est.sample_stddev = std::sqrt(std::max(0.0, var));
  }
  return est;
}

double EstimateSpread(const Simulator& simulator, const Subset& seeds,
                      int replicates, uint64_t seed) {
  return EstimateSpreadWithError(simulator, seeds, replicates, seed).mean;
}

double ExactSpreadLiveEdge(const DirectedGraph& graph,
                           const ProbabilityVector& theta, const Subset& seeds) {
  CheckSeeds(graph, seeds);
  CheckTheta(graph, theta);
  const int num_edges = graph.num_edges();
  if (num_edges > kMaxExactEdges) {
    throw SizeLimitError("exact live-edge spread supports at most " +
                         std::to_string(kMaxExactEdges) + " edges, graph has " +
                         std::to_string(num_edges) +
                         "; use the Monte Carlo estimator");
  }
  const std::vector<int> sources = seeds.items();
  if (sources.empty()) return 0.0;

  const int n = graph.num_nodes();
  std::vector<int> visited(n, -1);
  std::vector<int> stack;
  double total = 0.0;
  const uint64_t masks = uint64_t{1} << num_edges;
  for (uint64_t mask = 0; mask < masks; ++mask) {
    double prob = 1.0;
    for (int e = 0; e < num_edges && prob > 0.0; ++e) {
      prob *= ((mask >> e) & 1) ? theta[e] : 1.0 - theta[e];
    }
    if (prob == 0.0) continue;
    const int stamp = static_cast<int>(mask & 0x7fffffff);
    int reached = 0;
    stack.clear();
    for (int s : sources) {
      if (visited[s] != stamp) {
        visited[s] = stamp;
        stack.push_back(s);
        ++reached;
      }
    }
    while (!stack.empty()) {
      const int u = stack.back();
      stack.pop_back();
      for (int e : graph.out_edges(u)) {
        if (!((mask >> e) & 1)) continue;
        const int v = graph.edge(e).target;
        if (visited[v] != stamp) {
          visited[v] = stamp;
          stack.push_back(v);
          ++reached;
        }
      }
    }
    total += prob * reached;
  }
  return total;
}

double VectorDistance(const ProbabilityVector& a, const ProbabilityVector& b) {
  if (a.size() != b.size()) {
    throw std::invalid_argument("probability vectors differ in length");
  }
  double d = 0.0;
  for (size_t i = 0; i < a.size(); ++i) d += std::abs(a[i] - b[i]);
  return d;
}

double MaxPairwiseDistance(std::span<const ProbabilityVector> thetas) {
  double d = 0.0;
  for (size_t i = 0; i < thetas.size(); ++i) {
    for (size_t j = i + 1; j < thetas.size(); ++j) {
      d = std::max(d, VectorDistance(thetas[i], thetas[j]));
    }
  }
  return d;
}

double BetaLowerBound(int n, double delta_max) {
  if (n < 1) throw std::invalid_argument("n must be >= 1");
  if (!(delta_max >= 0.0)) throw std::invalid_argument("delta_max must be >= 0");
  return 1.0 - 2.0 * std::numbers::e * n * delta_max;
}

void WriteProbabilityVector(std::ostream& out, const ProbabilityVector& theta) {
  out << "#edges=" << theta.size() << '\n';
  out << std::setprecision(17);
  for (double p : theta.values()) out << p << '\n';
}

ProbabilityVector ReadProbabilityVector(std::istream& in) {
  std::string line;
  if (!std::getline(in, line) || line.rfind("#edges=", 0) != 0) {
    throw ParseError(1, "expected '#edges=<E>' header");
  }
  size_t expected = 0;
  try {
    expected = std::stoul(line.substr(7));
  } catch (const std::exception&) {
    throw ParseError(1, "bad edge count in header");
  }
  std::vector<double> probs;
  int line_no = 1;
  while (std::getline(in, line)) {
    ++line_no;
    if (line.empty()) continue;
    size_t used = 0;
    double p = 0.0;
    try {
      p = std::stod(line, &used);
    } catch (const std::exception&) {
      throw ParseError(line_no, "bad probability '" + line + "'");
    }
    if (used != line.size() || !(p >= 0.0 && p <= 1.0)) {
      throw ParseError(line_no, "bad probability '" + line + "'");
    }
    probs.push_back(p);
  }
  if (probs.size() != expected) {
    throw ParseError(line_no, "header promised " + std::to_string(expected) +
                                  " values, found " + std::to_string(probs.size()));
  }
  return ProbabilityVector(std::move(probs));
}

}  // namespace robsel
