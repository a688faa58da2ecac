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

#include <cmath>
#include <memory>

#include "gtest/gtest.h"
#include "robsel/ratios.h"
#include "robsel/set_function.h"
#include "robsel/verify.h"

namespace robsel {
namespace {

ObjectiveEnsemble ModularPair() {
  return ObjectiveEnsemble({std::make_shared<ModularFunction>(std::vector<double>{3, 2, 1}),
                            std::make_shared<ModularFunction>(std::vector<double>{1, 2, 3})});
}

Solution Sol(int n, std::initializer_list<int> items, double g1) {
  Subset bits = Subset::FromItems(n, items);
  const int size = bits.size();
  return {std::move(bits), g1, -size};
}

TEST(BiObjectiveTest, EmptySolution) {
  const ObjectiveEnsemble ens = ModularPair();
  EXPECT_EQ(BiObjective(Subset(3), 1, ens), std::make_pair(0.0, 0));
  EXPECT_EQ(BiObjective(Subset(3), 2, ens), std::make_pair(0.0, 0));
}

TEST(BiObjectiveTest, PenaltyStartsAtTwiceTheBudget) {
  const ObjectiveEnsemble ens = ModularPair();
  const auto [g1, g2] = BiObjective(Subset::FromItems(3, {0, 2}), 1, ens);
  EXPECT_EQ(g1, kNegInfinity);
  EXPECT_EQ(g2, -2);
  EXPECT_EQ(ens.eval_count(), 0);
  EXPECT_EQ(InfeasibleSizeThreshold(5), 10);
}

TEST(BiObjectiveTest, ModularPairSingleton) {
  const ObjectiveEnsemble ens = ModularPair();
  EXPECT_EQ(BiObjective(Subset::FromItems(3, {1}), 2, ens), std::make_pair(2.0, -1));
}

TEST(DominanceTest, Examples) {
  EXPECT_EQ(Compare(Sol(3, {1}, 2), Sol(3, {0, 1}, 2)), Dominance::kFirstDominates);
  EXPECT_EQ(Compare(Sol(3, {0, 1}, 3), Sol(3, {1}, 2)), Dominance::kIncomparable);
  EXPECT_EQ(Compare(Sol(3, {}, 0), Sol(3, {0, 1}, kNegInfinity)),
            Dominance::kFirstDominates);
  EXPECT_EQ(Compare(Sol(3, {0, 1}, kNegInfinity), Sol(3, {}, 0)),
            Dominance::kSecondDominates);
  EXPECT_EQ(Compare(Sol(3, {0}, 1), Sol(3, {2}, 1)), Dominance::kEqual);
  EXPECT_TRUE(WeaklyDominates(Sol(3, {0}, 1), Sol(3, {2}, 1)));
  EXPECT_FALSE(Dominates(Sol(3, {0}, 1), Sol(3, {2}, 1)));
}

TEST(MutateTest, SameSeedSameChild) {
  const Subset parent = Subset::FromItems(30, {1, 4, 9});
  Rng a(99), b(99);
  EXPECT_EQ(Mutate(parent, a), Mutate(parent, b));
}

TEST(MutateTest, ExpectedHammingDistanceIsOne) {
  const int n = 20;
  const int trials = 100000;
  Rng rng(3);
  const Subset parent(n);
  int64_t flips = 0;
  for (int t = 0; t < trials; ++t) flips += Mutate(parent, rng).size();
  // Var of the mean is (1 - 1/n) / trials, so the std error is about 0.003.
  EXPECT_NEAR(static_cast<double>(flips) / trials, 1.0, 0.02);
}

TEST(MutateTest, SingleSpecificFlipProbability) {
  const int n = 10;
  const int trials = 200000;
  Rng rng(4);
  const Subset parent = Subset::FromItems(n, {2, 5});
  Subset target = parent;
  target.flip(7);
  int hits = 0;
  for (int t = 0; t < trials; ++t) hits += Mutate(parent, rng) == target;
  const double p = (1.0 / n) * std::pow(1.0 - 1.0 / n, n - 1);
  const double se = std::sqrt(p * (1 - p) / trials);
  EXPECT_NEAR(static_cast<double>(hits) / trials, p, 5 * se);
}

TEST(PopulationTest, ReinsertingEmptyKeepsOneSolution) {
  Population p(2, Sol(3, {}, 0));
  p.Insert(Sol(3, {}, 0));
  ASSERT_EQ(p.size(), 1);
  EXPECT_TRUE(p.solutions()[0].bits.empty());
}

TEST(PopulationTest, IncomparableCandidateJoins) {
  Population p(2, Sol(3, {}, 0));
  EXPECT_TRUE(p.Insert(Sol(3, {1}, 2)));
  EXPECT_EQ(p.size(), 2);
  EXPECT_EQ(p.CheckInvariants(), "");
}

TEST(PopulationTest, CandidateReplacesWeakerSameSize) {
  Population p(2, Sol(3, {}, 0));
  p.Insert(Sol(3, {0}, 1));
  EXPECT_TRUE(p.Insert(Sol(3, {1}, 2)));
  ASSERT_EQ(p.size(), 2);
  EXPECT_EQ(p.solutions()[0].g1 + p.solutions()[1].g1, 2.0);
  EXPECT_EQ(p.BestFeasible()->bits, Subset::FromItems(3, {1}));
}

TEST(PopulationTest, RejectsDominatedAndOversized) {
  Population p(1, Sol(3, {}, 0));
  p.Insert(Sol(3, {1}, 2));
  EXPECT_FALSE(p.Insert(Sol(3, {0}, 1)));
  EXPECT_FALSE(p.Insert(Sol(3, {0, 1}, kNegInfinity)));
  EXPECT_EQ(p.size(), 2);
}

TEST(PopulationTest, BestFeasibleIgnoresLargerSolutions) {
  Population q(2, Sol(4, {}, 0));
  q.Insert(Sol(4, {1}, 2));
  q.Insert(Sol(4, {1, 2, 3}, 9));
  EXPECT_EQ(q.size(), 3);
  EXPECT_EQ(q.BestFeasible()->g1, 2.0);
}

TEST(EporssTest, ZeroIterationsReturnsEmptySet) {
  const ObjectiveEnsemble ens = ModularPair();
  EporssOptions options;
  options.iterations = 0;
  const EporssResult r = EporssRun(ens, 1, options);
  EXPECT_TRUE(r.selection.subset.empty());
  EXPECT_EQ(r.selection.value, 0.0);
  ASSERT_EQ(r.selection.trace.steps.size(), 1u);
  EXPECT_EQ(r.selection.trace.steps[0].iteration, 0);
}

TEST(EporssTest, DefaultIterations) {
  EXPECT_EQ(DefaultIterations(200, 5), 27182);
  EXPECT_EQ(DefaultIterations(3, 1), 16);
  EXPECT_EQ(DefaultIterations(50, 5), 6795);
}

TEST(EporssTest, ModularPairBestOfTenSeedsFindsOptimum) {
  const ObjectiveEnsemble ens = ModularPair();
  double best = 0.0;
  for (uint64_t seed = 0; seed < 10; ++seed) {
    EporssOptions options;
    options.seed = seed;
    const EporssResult r = EporssRun(ens, 1, options);
    EXPECT_EQ(r.iterations, 16);
    best = std::max(best, r.selection.value);
  }
  EXPECT_EQ(best, ExhaustiveOptimum(ens, 1).value);
  EXPECT_EQ(best, 2.0);
}

TEST(EporssTest, TraceCadenceAndMonotonicity) {
  Rng rng(8);
  RandomInstance inst = MakeRandomInstance(rng, {.min_n = 8, .max_n = 8, .max_k = 3});
  EporssOptions options;
  options.iterations = 1000;
  options.seed = 5;
  const EporssResult r = EporssRun(*inst.ensemble, inst.k, options);
  const auto& steps = r.selection.trace.steps;
  ASSERT_EQ(steps.size(), 201u);
  for (size_t i = 0; i < steps.size(); ++i) {
    EXPECT_EQ(steps[i].iteration, static_cast<int64_t>(5 * i));
    EXPECT_LE(steps[i].subset.size(), inst.k);
    if (i > 0) {
      EXPECT_GE(steps[i].value, steps[i - 1].value);
    }
  }
  EXPECT_EQ(steps.back().value, r.selection.value);
}

TEST(EporssTest, SeededRunsRepeat) {
  Rng rng(12);
  RandomInstance inst = MakeRandomInstance(rng, {});
  EporssOptions options;
  options.iterations = 500;
  options.seed = 77;
  const EporssResult a = EporssRun(*inst.ensemble, inst.k, options);
  const EporssResult b = EporssRun(*inst.ensemble, inst.k, options);
  EXPECT_EQ(a.selection.subset, b.selection.subset);
  EXPECT_EQ(a.selection.trace.steps.size(), b.selection.trace.steps.size());
}

TEST(EporssTest, ArchiveInvariantsHoldOnRandomRuns) {
  Rng rng(13);
  for (int t = 0; t < 20; ++t) {
    RandomInstance inst = MakeRandomInstance(
        rng, {.min_n = 4, .max_n = 12, .max_k = 4, .allow_non_submodular = true});
    EporssOptions options;
    options.iterations = 2000;
    options.seed = static_cast<uint64_t>(t);
    options.check_invariants = true;
    EporssResult r;
    ASSERT_NO_THROW(r = EporssRun(*inst.ensemble, inst.k, options)) << inst.description;
    EXPECT_LE(r.max_population, 2 * inst.k);
  }
}

}  // namespace
}  // namespace robsel
