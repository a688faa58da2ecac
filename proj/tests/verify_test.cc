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

#include "robsel/verify.h"

#include <chrono>
#include <sstream>

#include "gtest/gtest.h"

namespace robsel {
namespace {

TEST(VerifyTest, TinyTierPassesQuickly) {
  std::ostringstream log;
  const auto start = std::chrono::steady_clock::now();
  const auto results = RunVerification(VerifyTier::kTiny, 0, &log);
  const double seconds =
      std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  EXPECT_LT(seconds, 60.0);
  ASSERT_EQ(results.size(), 9u);
  for (const CheckResult& r : results) {
    EXPECT_TRUE(r.passed) << FormatCheck(r);
    EXPECT_GT(r.cases, 0) << r.name;
  }
  EXPECT_NE(log.str().find("[PASS] evaluation-counts"), std::string::npos);
}

TEST(VerifyTest, OtherSeedsPassToo) {
  for (uint64_t seed : {1u, 2u}) {
    for (const CheckResult& r : RunVerification(VerifyTier::kTiny, seed, nullptr)) {
      EXPECT_TRUE(r.passed) << "seed " << seed << ": " << FormatCheck(r);
    }
  }
}

TEST(VerifyTest, ParseTier) {
  EXPECT_EQ(ParseVerifyTier("tiny"), VerifyTier::kTiny);
  EXPECT_EQ(ParseVerifyTier("small"), VerifyTier::kSmall);
  EXPECT_THROW(ParseVerifyTier("huge"), std::invalid_argument);
}

TEST(VerifyTest, FormatCheck) {
  CheckResult r{"demo", false, 10, 2, "note", 1.5};
  EXPECT_EQ(FormatCheck(r), "[FAIL] demo: cases=10 violations=2 (note) 1.50s");
}

TEST(VerifyTest, RandomInstanceShape) {
  Rng rng(1);
  for (int t = 0; t < 50; ++t) {
    const RandomInstance inst = MakeRandomInstance(rng, {.min_n = 4, .max_n = 6, .max_k = 2});
    EXPECT_GE(inst.ensemble->ground_size(), 4);
    EXPECT_LE(inst.ensemble->ground_size(), 6);
    EXPECT_LE(inst.k, 2);
    EXPECT_LE(inst.ensemble->num_functions(), 3);
  }
  const DirectedGraph g = MakeRandomGraph(rng, 4, 100);
  EXPECT_EQ(g.num_edges(), 12);
  EXPECT_EQ(g.dropped_self_loops(), 0);
}

}  // namespace
}  // namespace robsel
