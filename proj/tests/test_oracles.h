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

// Brute-force reference computations used to cross-check the library.
// Written directly over bit masks and adjacency lists so they share no code
// with the implementations under test.

#ifndef ROBSEL_TESTS_TEST_ORACLES_H_
#define ROBSEL_TESTS_TEST_ORACLES_H_

#include <algorithm>
#include <cstdint>
#include <functional>
#include <limits>
#include <utility>
#include <vector>

namespace robsel::testing {

struct RawEdge {
  int from;
  int to;
  double p;
};

// Expected number of nodes reachable from `seeds` (a bit mask over nodes)
// when each edge is kept independently with its probability.
inline double NaiveSpread(int n, const std::vector<RawEdge>& edges, uint32_t seeds) {
  const int e = static_cast<int>(edges.size());
  double total = 0.0;
  for (uint32_t mask = 0; mask < (1u << e); ++mask) {
    double weight = 1.0;
    for (int i = 0; i < e; ++i) {
      weight *= (mask >> i & 1) ? edges[i].p : 1.0 - edges[i].p;
    }
    if (weight == 0.0) continue;
    uint32_t reached = seeds;
    bool grew = true;
    while (grew) {
      grew = false;
      for (int i = 0; i < e; ++i) {
        if ((mask >> i & 1) && (reached >> edges[i].from & 1) &&
            !(reached >> edges[i].to & 1)) {
          reached |= 1u << edges[i].to;
          grew = true;
        }
      }
    }
    int count = 0;
    for (int v = 0; v < n; ++v) count += reached >> v & 1;
    total += weight * count;
  }
  return total;
}

// max over masks with popcount <= k of value(mask).
inline double NaiveMax(int n, int k, const std::function<double(uint32_t)>& value) {
  double best = -std::numeric_limits<double>::infinity();
  for (uint32_t mask = 0; mask < (1u << n); ++mask) {
    if (__builtin_popcount(mask) <= k) best = std::max(best, value(mask));
  }
  return best;
}

inline double NaiveModular(const std::vector<double>& w, uint32_t mask) {
  double s = 0.0;
  for (size_t i = 0; i < w.size(); ++i) {
    if (mask >> i & 1) s += w[i];
  }
  return s;
}

}  // namespace robsel::testing

#endif  // ROBSEL_TESTS_TEST_ORACLES_H_
