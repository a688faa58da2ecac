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

#ifndef ROBSEL_COMBINATORICS_H_
#define ROBSEL_COMBINATORICS_H_

#include <cstdint>
#include <functional>
#include <vector>

namespace robsel {

// C(n, r), saturating at INT64_MAX.
int64_t Binomial(int n, int r);

// sum_{r=lo..hi} C(n, r), saturating.
int64_t BinomialRange(int n, int lo, int hi);

// Calls fn(chosen) for every subset of `pool` with size in [min_size,
// max_size], by increasing size and then lexicographically by position.
// `chosen` holds pool elements in pool order. Stops early if fn returns
// false.
void ForEachCombination(const std::vector<int>& pool, int min_size, int max_size,
                        const std::function<bool(const std::vector<int>&)>& fn);

}  // namespace robsel

#endif  // ROBSEL_COMBINATORICS_H_
