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

#include <algorithm>
#include <set>
#include <stdexcept>

#include "robsel/errors.h"

namespace robsel {

GroundSet::GroundSet(int n, std::vector<std::string> labels)
    : n_(n), labels_(std::move(labels)) {
  if (n < 1) throw std::invalid_argument("ground set must contain at least one item");
  if (labels_.empty()) {
    labels_.reserve(n);
    for (int i = 1; i <= n; ++i) labels_.push_back("v" + std::to_string(i));
  }
  if (static_cast<int>(labels_.size()) != n) {
    throw std::invalid_argument("label count must equal ground set size");
  }
  if (std::set<std::string>(labels_.begin(), labels_.end()).size() != labels_.size()) {
    throw std::invalid_argument("item labels must be distinct");
  }
}

ObjectiveEnsemble::ObjectiveEnsemble(
    std::vector<std::shared_ptr<const SetFunction>> functions,
    std::vector<std::string> labels)
    : ground_(functions.empty() || !functions.front()
                  ? throw std::invalid_argument("ensemble needs m >= 1 functions")
                  : functions.front()->ground_size(),
              std::move(labels)),
      functions_(std::move(functions)),
      function_counts_(new std::atomic<int64_t>[functions_.size()]) {
  for (size_t i = 0; i < functions_.size(); ++i) {
    if (!functions_[i]) throw std::invalid_argument("null set function");
    if (functions_[i]->ground_size() != ground_.size()) {
      throw std::invalid_argument("all functions must share the same ground set");
    }
    function_counts_[i].store(0);
  }
}

bool ObjectiveEnsemble::stochastic() const {
  return std::any_of(functions_.begin(), functions_.end(),
                     [](const auto& f) { return f->stochastic(); });
}

void ObjectiveEnsemble::CheckSubset(const Subset& x) const {
  if (x.universe_size() != ground_.size()) {
    throw InvalidSubsetError("subset is not over the ensemble's ground set");
  }
}

double ObjectiveEnsemble::EvaluateWorstCase(const Subset& x) const {
  const std::vector<double> values = EvaluateAll(x);
  return *std::min_element(values.begin(), values.end());
}

std::vector<double> ObjectiveEnsemble::EvaluateAll(const Subset& x) const {
  CheckSubset(x);
  std::vector<double> values(functions_.size());
  for (size_t i = 0; i < functions_.size(); ++i) {
    values[i] = functions_[i]->Evaluate(x);
    function_counts_[i].fetch_add(1, std::memory_order_relaxed);
  }
  eval_count_.fetch_add(1, std::memory_order_relaxed);
  return values;
}

double ObjectiveEnsemble::EvaluateFunction(int i, const Subset& x) const {
  CheckSubset(x);
  if (i < 0 || i >= num_functions()) {
    throw std::out_of_range("function index out of range");
  }
  function_counts_[i].fetch_add(1, std::memory_order_relaxed);
  return functions_[i]->Evaluate(x);
}

std::vector<int64_t> ObjectiveEnsemble::per_function_counts() const {
  std::vector<int64_t> out(functions_.size());
  for (size_t i = 0; i < functions_.size(); ++i) out[i] = function_counts_[i].load();
  return out;
}

void ObjectiveEnsemble::ResetCounters() {
  eval_count_.store(0);
  for (size_t i = 0; i < functions_.size(); ++i) function_counts_[i].store(0);
}

double MarginalGain(const SetFunction& f, const Subset& x, int v) {
  if (v < 0 || v >= x.universe_size()) {
    throw InvalidSubsetError("item index out of range");
  }
  if (x.contains(v)) {
    throw std::invalid_argument("item " + std::to_string(v + 1) +
                                " is already in the subset");
  }
  return f.Evaluate(x.With(v)) - f.Evaluate(x);
}

}  // namespace robsel
