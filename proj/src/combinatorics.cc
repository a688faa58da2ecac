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

#include <algorithm>
#include <limits>

namespace robsel {

int64_t Binomial(int n, int r) {
  if (r < 0 || r > n) return 0;
  r = std::min(r, n - r);
  constexpr int64_t kMax = std::numeric_limits<int64_t>::max();
  __int128 result = 1;
  for (int i = 1; i <= r; ++i) {
    result = result * (n - r + i) / i;
    if (result > kMax) return kMax;
  }
  return static_cast<int64_t>(result);
}

int64_t BinomialRange(int n, int lo, int hi) {
  constexpr int64_t kMax = std::numeric_limits<int64_t>::max();
  int64_t total = 0;
  for (int r = std::max(0, lo); r <= std::min(n, hi); ++r) {
    const int64_t b = Binomial(n, r);
    if (b > kMax - total) return kMax;
    total += b;
  }
  return total;
}

void ForEachCombination(const std::vector<int>& pool, int min_size, int max_size,
                        const std::function<bool(const std::vector<int>&)>& fn) {
  const int n = static_cast<int>(pool.size());
  std::vector<int> pos;
  std::vector<int> chosen;
  for (int r = std::max(0, min_size); r <= std::min(n, max_size); ++r) {
    pos.resize(r);
    for (int i = 0; i < r; ++i) pos[i] = i;
    while (true) {
      chosen.resize(r);
      for (int i = 0; i < r; ++i) chosen[i] = pool[pos[i]];
      if (!fn(chosen)) return;
      int i = r - 1;
      while (i >= 0 && pos[i] == n - r + i) --i;
      if (i < 0) break;
      ++pos[i];
      for (int j = i + 1; j < r; ++j) pos[j] = pos[j - 1] + 1;
    }
  }
}

}  // namespace robsel
