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

#include "robsel/combinatorics.h"

#include <limits>

#include "gtest/gtest.h"

namespace robsel {
namespace {

TEST(CombinatoricsTest, Binomial) {
  EXPECT_EQ(Binomial(5, 2), 10);
  EXPECT_EQ(Binomial(5, 0), 1);
  EXPECT_EQ(Binomial(5, 6), 0);
  EXPECT_EQ(Binomial(60, 30), 118264581564861424);
  EXPECT_EQ(Binomial(200, 100), std::numeric_limits<int64_t>::max());
}

TEST(CombinatoricsTest, BinomialRangeSumsTerms) {
  EXPECT_EQ(BinomialRange(4, 0, 4), 16);
  EXPECT_EQ(BinomialRange(10, 1, 2), 10 + 45);
}

TEST(CombinatoricsTest, ForEachCombinationVisitsInOrder) {
  std::vector<std::vector<int>> seen;
  ForEachCombination({2, 5, 7}, 1, 2, [&](const std::vector<int>& c) {
    seen.push_back(c);
    return true;
  });
  const std::vector<std::vector<int>> expected{{2}, {5}, {7}, {2, 5}, {2, 7}, {5, 7}};
  EXPECT_EQ(seen, expected);
}

TEST(CombinatoricsTest, ForEachCombinationStopsEarly) {
  int visits = 0;
  ForEachCombination({0, 1, 2, 3}, 0, 4, [&](const std::vector<int>&) {
    return ++visits < 3;
  });
  EXPECT_EQ(visits, 3);
}

}  // namespace
}  // namespace robsel
