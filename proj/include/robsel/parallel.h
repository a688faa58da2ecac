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

#ifndef ROBSEL_PARALLEL_H_
#define ROBSEL_PARALLEL_H_

#include <cstddef>
#include <functional>

namespace robsel {

// Worker cap: ROBSEL_THREADS if set to a positive integer, else hardware
// concurrency (at least 1).
int WorkerCount();

// Runs fn(i) for i in [0, count) on at most `workers` threads, handing out
// indices one at a time. Calls made from inside a worker run serially. Results must be written to per-index slots; any
// reduction happens afterwards in index order so output does not depend on
// scheduling. The first exception thrown by a worker is rethrown.
void ParallelFor(size_t count, const std::function<void(size_t)>& fn,
                 int workers = WorkerCount());

}  // namespace robsel

#endif  // ROBSEL_PARALLEL_H_
