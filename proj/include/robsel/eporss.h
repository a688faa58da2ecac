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

// Evolutionary Pareto optimization for robust subset selection.
//
// The constrained problem max F(X) s.t. |X| <= k is recast as maximizing the
// pair (g1, g2) = (F(x) or -inf when |x| >= 2k, -|x|). A population of
// mutually incomparable solutions is evolved by uniform parent selection and
// bit-wise mutation; the answer is the best archived solution with |x| <= k.

#ifndef ROBSEL_EPORSS_H_
#define ROBSEL_EPORSS_H_

#include <cstdint>
#include <limits>
#include <string>
#include <utility>
#include <vector>

#include "robsel/objective.h"
#include "robsel/rng.h"
#include "robsel/subset.h"
#include "robsel/trace.h"

namespace robsel {

inline constexpr double kNegInfinity = -std::numeric_limits<double>::infinity();

// Solutions of at least this size score g1 = -inf.
inline int InfeasibleSizeThreshold(int k) { return 2 * k; }

struct Solution {
  Subset bits;
  double g1 = 0.0;
  int g2 = 0;  // -|bits|

  int size() const { return -g2; }
};

// (g1, g2) for `bits`. Consumes one worst-case evaluation only when
// |bits| < 2k.
std::pair<double, int> BiObjective(const Subset& bits, int k,
                                   const ObjectiveEnsemble& ensemble);
Solution MakeSolution(Subset bits, int k, const ObjectiveEnsemble& ensemble);

// a weakly dominates b: g1(a) >= g1(b) and g2(a) >= g2(b). Weak domination
// without strict domination means the objective vectors are equal, so the
// relation has four outcomes.
enum class Dominance { kFirstDominates, kSecondDominates, kEqual, kIncomparable };

bool WeaklyDominates(const Solution& a, const Solution& b);
bool Dominates(const Solution& a, const Solution& b);
Dominance Compare(const Solution& a, const Solution& b);
std::string ToString(Dominance d);

// Flips each bit independently with probability 1/n.
Subset Mutate(const Subset& parent, Rng& rng);

// Archive of mutually incomparable solutions, at most one per size in
// {0, ..., 2k-1}.
class Population {
 public:
  // Starts from {initial}; `initial` is normally the empty solution.
  Population(int k, Solution initial);

  // Rejects `candidate` if an archived solution strictly dominates it or if
  // its size is at least 2k; otherwise evicts every archived solution that
  // `candidate` weakly dominates and inserts it. Returns whether it was
  // inserted.
  bool Insert(Solution candidate);

  const std::vector<Solution>& solutions() const { return archive_; }
  int size() const { return static_cast<int>(archive_.size()); }
  int k() const { return k_; }

  // Best solution with |x| <= k: max g1, then smaller size, then
  // ItemOrderLess. Never null while the empty solution is archived.
  const Solution* BestFeasible() const;

  // Empty string when every archive invariant holds, else a description of
  // the first violation.
  std::string CheckInvariants() const;

 private:
  int k_;
  std::vector<Solution> archive_;
};

// floor(2 e k^2 n).
int64_t DefaultIterations(int n, int k);

struct EporssOptions {
  int64_t iterations = -1;  // T; negative selects DefaultIterations(n, k)
  uint64_t seed = 0;
  int trace_samples = 200;  // best-feasible-F recorded every ceil(T/samples)
  bool check_invariants = false;  // verify the archive after every insert
};

struct EporssResult {
  SelectionResult selection;
  int64_t iterations = 0;
  int max_population = 1;
};

// Throws std::logic_error if check_invariants is set and an insert breaks
// an archive invariant.
EporssResult EporssRun(const ObjectiveEnsemble& ensemble, int k,
                       const EporssOptions& options = {});

}  // namespace robsel

#endif  // ROBSEL_EPORSS_H_
