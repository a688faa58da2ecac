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

#ifndef ROBSEL_OBJECTIVE_H_
#define ROBSEL_OBJECTIVE_H_

#include <atomic>
#include <cstdint>
#include <memory>
#include <string>
#include <vector>

#include "robsel/set_function.h"
#include "robsel/subset.h"

namespace robsel {

// Items {0..n-1} with display labels ("v1".."vn" unless given).
class GroundSet {
 public:
  explicit GroundSet(int n, std::vector<std::string> labels = {});

  int size() const { return n_; }
  const std::vector<std::string>& labels() const { return labels_; }

 private:
  int n_;
  std::vector<std::string> labels_;
};

// m set functions over a common ground set, aggregated by F(X) = min_i f_i(X).
//
// Counters are atomic so that candidate scans may fan out across threads.
// One call to EvaluateWorstCase or EvaluateAll counts as one worst-case
// evaluation and bumps every per-function counter once.
class ObjectiveEnsemble {
 public:
  explicit ObjectiveEnsemble(std::vector<std::shared_ptr<const SetFunction>> functions,
                             std::vector<std::string> labels = {});

  ObjectiveEnsemble(const ObjectiveEnsemble&) = delete;
  ObjectiveEnsemble& operator=(const ObjectiveEnsemble&) = delete;

  int ground_size() const { return ground_.size(); }
  const GroundSet& ground() const { return ground_; }
  int num_functions() const { return static_cast<int>(functions_.size()); }
  const SetFunction& function(int i) const { return *functions_[i]; }
  bool stochastic() const;

  // F(X); throws InvalidSubsetError when X is not over this ground set.
  double EvaluateWorstCase(const Subset& x) const;

  // (f_1(X), ..., f_m(X)); same accounting as EvaluateWorstCase.
  std::vector<double> EvaluateAll(const Subset& x) const;

  // A single f_i(X); bumps only that function's counter.
  double EvaluateFunction(int i, const Subset& x) const;

  int64_t eval_count() const { return eval_count_.load(); }
  std::vector<int64_t> per_function_counts() const;
  void ResetCounters();

 private:
  void CheckSubset(const Subset& x) const;

  GroundSet ground_;
  std::vector<std::shared_ptr<const SetFunction>> functions_;
  mutable std::atomic<int64_t> eval_count_{0};
  std::unique_ptr<std::atomic<int64_t>[]> function_counts_;
};

// f(X + v) - f(X). Throws std::invalid_argument when v is already in X.
double MarginalGain(const SetFunction& f, const Subset& x, int v);

}  // namespace robsel

#endif  // ROBSEL_OBJECTIVE_H_
