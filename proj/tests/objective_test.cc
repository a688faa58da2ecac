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

#include "robsel/objective.h"

#include <cmath>
#include <memory>
#include <random>

#include "gtest/gtest.h"
#include "robsel/errors.h"
#include "robsel/rng.h"
#include "robsel/set_function.h"
#include "test_oracles.h"

namespace robsel {
namespace {

std::unique_ptr<ObjectiveEnsemble> ModularPair() {
  return std::make_unique<ObjectiveEnsemble>(std::vector<std::shared_ptr<const SetFunction>>{
      std::make_shared<ModularFunction>(std::vector<double>{3, 2, 1}),
      std::make_shared<ModularFunction>(std::vector<double>{1, 2, 3})});
}

TEST(ObjectiveTest, WorstCaseOfModularPair) {
  const auto ens = ModularPair();
  EXPECT_EQ(ens->EvaluateWorstCase(Subset::FromItems(3, {1})), 2.0);
  EXPECT_EQ(ens->EvaluateWorstCase(Subset(3)), 0.0);
  // Cross-check every subset against direct sums.
  for (uint32_t mask = 0; mask < 8; ++mask) {
    Subset x(3);
    for (int i = 0; i < 3; ++i) {
      if (mask >> i & 1) x.insert(i);
    }
    const double expected = std::min(testing::NaiveModular({3, 2, 1}, mask),
                                     testing::NaiveModular({1, 2, 3}, mask));
    EXPECT_EQ(ens->EvaluateWorstCase(x), expected);
  }
}

TEST(ObjectiveTest, SingleFunctionEnsembleIsTheFunction) {
  auto f = std::make_shared<ConcaveOfModularFunction>(std::vector<double>{1, 4, 9, 2},
                                                      ConcaveShape::kSqrt);
  ObjectiveEnsemble ens({f});
  Rng rng(7);
  for (int t = 0; t < 20; ++t) {
    Subset x(4);
    for (int i = 0; i < 4; ++i) {
      if (rng() & 1) x.insert(i);
    }
    EXPECT_EQ(ens.EvaluateWorstCase(x), f->Evaluate(x));
  }
}

TEST(ObjectiveTest, CountersTrackWorstCaseEvaluations) {
  const auto ens = ModularPair();
  ens->EvaluateWorstCase(Subset(3));
  ens->EvaluateAll(Subset(3));
  ens->EvaluateFunction(1, Subset(3));
  EXPECT_EQ(ens->eval_count(), 2);
  EXPECT_EQ(ens->per_function_counts(), (std::vector<int64_t>{2, 3}));
  ens->ResetCounters();
  EXPECT_EQ(ens->eval_count(), 0);
}

TEST(ObjectiveTest, RejectsForeignSubsets) {
  const auto ens = ModularPair();
  EXPECT_THROW(ens->EvaluateWorstCase(Subset(4)), InvalidSubsetError);
}

TEST(ObjectiveTest, RejectsMismatchedFunctions) {
  std::vector<std::shared_ptr<const SetFunction>> fns{
      std::make_shared<ModularFunction>(std::vector<double>{1, 2}),
      std::make_shared<ModularFunction>(std::vector<double>{1, 2, 3})};
  EXPECT_THROW(ObjectiveEnsemble{fns}, std::invalid_argument);
  EXPECT_THROW(ObjectiveEnsemble({}), std::invalid_argument);
}

TEST(ObjectiveTest, GroundSetLabels) {
  EXPECT_EQ(GroundSet(2).labels(), (std::vector<std::string>{"v1", "v2"}));
  EXPECT_THROW(GroundSet(2, {"a", "a"}), std::invalid_argument);
}

TEST(MarginalGainTest, ModularGain) {
  const ModularFunction f({3, 2, 1});
  EXPECT_EQ(MarginalGain(f, Subset(3), 0), 3.0);
}

TEST(MarginalGainTest, ConstantFunctionHasZeroGain) {
  const CallableFunction f(4, [](const Subset&) { return 5.0; });
  EXPECT_EQ(MarginalGain(f, Subset::FromItems(4, {1}), 2), 0.0);
}

TEST(MarginalGainTest, CoverageAlreadyCovered) {
  // Universe {a, b} = {0, 1}; v1 covers a, v2 covers a and b.
  const CoverageFunction f({{0}, {0, 1}}, 2);
  EXPECT_EQ(MarginalGain(f, Subset::FromItems(2, {1}), 0), 0.0);
}

TEST(MarginalGainTest, RejectsItemAlreadyPresent) {
  const ModularFunction f({1, 1});
  EXPECT_THROW(MarginalGain(f, Subset::FromItems(2, {0}), 0), std::invalid_argument);
}

TEST(SetFunctionTest, DeterministicOraclesAreNormalizedAndMonotone) {
  std::vector<std::shared_ptr<const SetFunction>> fns{
      std::make_shared<ModularFunction>(std::vector<double>{1, 0, 2.5, 4, 0.5}),
      std::make_shared<CoverageFunction>(
          std::vector<std::vector<int>>{{0, 1}, {1}, {2, 3}, {}, {0, 4}}, 5),
      std::make_shared<ConcaveOfModularFunction>(std::vector<double>{1, 2, 3, 4, 5},
                                                 ConcaveShape::kLog1p),
      std::make_shared<PowerOfModularFunction>(std::vector<double>{1, 2, 3, 4, 5}, 2.0)};
  Rng rng(11);
  for (const auto& f : fns) {
    EXPECT_EQ(f->Evaluate(Subset(5)), 0.0) << f->name();
    for (int t = 0; t < 200; ++t) {
      Subset small(5), large(5);
      for (int i = 0; i < 5; ++i) {
        const int r = static_cast<int>(rng() % 3);
        if (r == 0) {
          small.insert(i);
          large.insert(i);
        } else if (r == 1) {
          large.insert(i);
        }
      }
      EXPECT_LE(f->Evaluate(small), f->Evaluate(large)) << f->name();
    }
  }
}

TEST(SetFunctionTest, ClosedForms) {
  const Subset x = Subset::FromItems(3, {0, 2});
  EXPECT_DOUBLE_EQ(ConcaveOfModularFunction({4, 1, 5}, ConcaveShape::kSqrt).Evaluate(x), 3.0);
  EXPECT_DOUBLE_EQ(ConcaveOfModularFunction({4, 1, 5}, ConcaveShape::kLog1p).Evaluate(x),
                   std::log(10.0));
  EXPECT_DOUBLE_EQ(PowerOfModularFunction({4, 1, 5}, 2.0).Evaluate(x), 81.0);
  EXPECT_EQ(CoverageFunction({{0}, {1}, {0, 2}}, 3, {1, 10, 100}).Evaluate(x), 101.0);
  EXPECT_EQ(TableFunction(2, {0, 1, 2, 7}).Evaluate(Subset::FromItems(2, {0, 1})), 7.0);
}

TEST(SetFunctionTest, ValidatesInputs) {
  EXPECT_THROW(ModularFunction({1, -1}), std::invalid_argument);
  EXPECT_THROW(ModularFunction({}), std::invalid_argument);
  EXPECT_THROW(CoverageFunction({{3}}, 2), std::invalid_argument);
  EXPECT_THROW(TableFunction(2, {0, 1}), std::invalid_argument);
  EXPECT_THROW(ModularFunction({1, 2}).Evaluate(Subset(3)), InvalidSubsetError);
}

}  // namespace
}  // namespace robsel
