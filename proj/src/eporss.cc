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

#include "robsel/eporss.h"

#include <algorithm>
#include <cmath>
#include <numbers>
#include <stdexcept>

#include "robsel/greedy.h"

namespace robsel {

std::pair<double, int> BiObjective(const Subset& bits, int k,
                                   const ObjectiveEnsemble& ensemble) {
  const int size = bits.size();
  if (size >= InfeasibleSizeThreshold(k)) return {kNegInfinity, -size};
  return {ensemble.EvaluateWorstCase(bits), -size};
}

Solution MakeSolution(Subset bits, int k, const ObjectiveEnsemble& ensemble) {
  auto [g1, g2] = BiObjective(bits, k, ensemble);
  return Solution{std::move(bits), g1, g2};
}

bool WeaklyDominates(const Solution& a, const Solution& b) {
  return a.g1 >= b.g1 && a.g2 >= b.g2;
}

bool Dominates(const Solution& a, const Solution& b) {
  return WeaklyDominates(a, b) && (a.g1 > b.g1 || a.g2 > b.g2);
}

Dominance Compare(const Solution& a, const Solution& b) {
  const bool ab = WeaklyDominates(a, b);
  const bool ba = WeaklyDominates(b, a);
  if (ab && ba) return Dominance::kEqual;
  if (ab) return Dominance::kFirstDominates;
  if (ba) return Dominance::kSecondDominates;
  return Dominance::kIncomparable;
}

std::string ToString(Dominance d) {
  switch (d) {
    case Dominance::kFirstDominates:
      return "first-dominates";
    case Dominance::kSecondDominates:
      return "second-dominates";
    case Dominance::kEqual:
      return "equal";
    case Dominance::kIncomparable:
      return "incomparable";
  }
  return "unknown";
}

Subset Mutate(const Subset& parent, Rng& rng) {
  const int n = parent.universe_size();
  Subset child = parent;
  std::bernoulli_distribution flip(1.0 / n);
  for (int i = 0; i < n; ++i) {
    if (flip(rng)) child.flip(i);
  }
  return child;
}

Population::Population(int k, Solution initial) : k_(k) {
  if (k < 1) throw std::invalid_argument("budget k must be >= 1");
  archive_.push_back(std::move(initial));
}

bool Population::Insert(Solution candidate) {
  if (candidate.size() >= InfeasibleSizeThreshold(k_)) return false;
  for (const Solution& z : archive_) {
    if (Dominates(z, candidate)) return false;
  }
  std::erase_if(archive_, [&](const Solution& z) {
    return WeaklyDominates(candidate, z);
  });
  archive_.push_back(std::move(candidate));
  return true;
}

const Solution* Population::BestFeasible() const {
  const Solution* best = nullptr;
  for (const Solution& s : archive_) {
    if (s.size() > k_) continue;
    if (best == nullptr || s.g1 > best->g1 ||
        (s.g1 == best->g1 &&
         (s.size() < best->size() ||
          (s.size() == best->size() && ItemOrderLess(s.bits, best->bits))))) {
      best = &s;
    }
  }
  return best;
}

std::string Population::CheckInvariants() const {
  if (size() > InfeasibleSizeThreshold(k_)) {
    return "archive holds " + std::to_string(size()) + " > 2k solutions";
  }
  std::vector<char> seen(InfeasibleSizeThreshold(k_), 0);
  bool has_empty = false;
  for (size_t i = 0; i < archive_.size(); ++i) {
    const Solution& s = archive_[i];
    if (s.size() != s.bits.size()) return "g2 disagrees with popcount";
    if (s.size() >= InfeasibleSizeThreshold(k_)) {
      return "archived solution of size " + std::to_string(s.size()) + " >= 2k";
    }
    if (seen[s.size()]) return "two solutions of size " + std::to_string(s.size());
    seen[s.size()] = 1;
    if (s.size() == 0) has_empty = s.g1 >= 0.0;
    for (size_t j = i + 1; j < archive_.size(); ++j) {
      if (Compare(s, archive_[j]) != Dominance::kIncomparable) {
        return "comparable pair of sizes " + std::to_string(s.size()) + " and " +
               std::to_string(archive_[j].size());
      }
    }
  }
  if (!has_empty) return "size-0 slot missing or has g1 < 0";
  return "";
}

int64_t DefaultIterations(int n, int k) {
  return static_cast<int64_t>(
      std::floor(2.0 * std::numbers::e * k * k * static_cast<double>(n)));
}

EporssResult EporssRun(const ObjectiveEnsemble& ensemble, int k,
                       const EporssOptions& options) {
  const int n = ensemble.ground_size();
  CheckBudget(k, n);
  const int64_t start_count = ensemble.eval_count();
  const int64_t iterations =
      options.iterations < 0 ? DefaultIterations(n, k) : options.iterations;
  const int64_t stride =
      std::max<int64_t>(1, (iterations + options.trace_samples - 1) /
                               std::max(1, options.trace_samples));

  EporssResult out;
  out.iterations = iterations;
  RunTrace& trace = out.selection.trace;
  trace.algorithm = "eporss";
  trace.seed = options.seed;

  Rng rng(options.seed);
  Population population(k, MakeSolution(Subset(n), k, ensemble));

  auto sample = [&](int64_t t) {
    const Solution* best = population.BestFeasible();
    trace.steps.push_back(
        {t, -1, best->bits, best->g1, ensemble.eval_count() - start_count});
  };
  sample(0);

  for (int64_t t = 1; t <= iterations; ++t) {
    std::uniform_int_distribution<int> pick(0, population.size() - 1);
    const Solution& parent = population.solutions()[pick(rng)];
    Subset child_bits = Mutate(parent.bits, rng);
    population.Insert(MakeSolution(std::move(child_bits), k, ensemble));
    out.max_population = std::max(out.max_population, population.size());
    if (options.check_invariants) {
      const std::string why = population.CheckInvariants();
      if (!why.empty()) {
        throw std::logic_error("iteration " + std::to_string(t) + ": " + why);
      }
    }
    if (t % stride == 0 || t == iterations) sample(t);
  }

  const Solution* best = population.BestFeasible();
  out.selection.subset = best->bits;
  out.selection.value = best->g1;
  return out;
}

}  // namespace robsel
