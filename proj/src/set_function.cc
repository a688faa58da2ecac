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

#include "robsel/set_function.h"

#include <cmath>
#include <stdexcept>

#include "robsel/errors.h"

namespace robsel {
namespace {

void CheckWeights(const std::vector<double>& weights) {
  if (weights.empty()) {
    throw std::invalid_argument("ground set must contain at least one item");
  }
  for (double w : weights) {
    if (!(w >= 0.0) || !std::isfinite(w)) {
      throw std::invalid_argument("item weights must be finite and >= 0");
    }
  }
}

void CheckSubset(const Subset& x, int n) {
  if (x.universe_size() != n) {
    throw InvalidSubsetError("subset over " + std::to_string(x.universe_size()) +
                             " items evaluated on a ground set of " +
                             std::to_string(n));
  }
}

double WeightSum(const std::vector<double>& weights, const Subset& x) {
  double total = 0.0;
  for (int item : x.items()) total += weights[item];
  return total;
}

}  // namespace

ModularFunction::ModularFunction(std::vector<double> weights)
    : weights_(std::move(weights)) {
  CheckWeights(weights_);
}

double ModularFunction::Evaluate(const Subset& x) const {
  CheckSubset(x, ground_size());
  return WeightSum(weights_, x);
}

CoverageFunction::CoverageFunction(std::vector<std::vector<int>> item_sets,
                                   int universe_size,
                                   std::vector<double> element_weights)
    : item_sets_(std::move(item_sets)),
      universe_size_(universe_size),
      element_weights_(std::move(element_weights)) {
  if (item_sets_.empty()) {
    throw std::invalid_argument("ground set must contain at least one item");
  }
  if (element_weights_.empty()) element_weights_.assign(universe_size_, 1.0);
  if (static_cast<int>(element_weights_.size()) != universe_size_) {
    throw std::invalid_argument("element weight count must match universe");
  }
  for (double w : element_weights_) {
    if (!(w >= 0.0)) throw std::invalid_argument("element weights must be >= 0");
  }
  for (const auto& set : item_sets_) {
    for (int e : set) {
      if (e < 0 || e >= universe_size_) {
        throw std::invalid_argument("coverage element out of range");
      }
    }
  }
}

double CoverageFunction::Evaluate(const Subset& x) const {
  CheckSubset(x, ground_size());
  std::vector<char> covered(universe_size_, 0);
  double total = 0.0;
  for (int item : x.items()) {
    for (int e : item_sets_[item]) {
      if (!covered[e]) {
        covered[e] = 1;
        total += element_weights_[e];
      }
    }
  }
  return total;
}

ConcaveOfModularFunction::ConcaveOfModularFunction(std::vector<double> weights,
                                                   ConcaveShape shape)
    : weights_(std::move(weights)), shape_(shape) {
  CheckWeights(weights_);
}

double ConcaveOfModularFunction::Evaluate(const Subset& x) const {
  CheckSubset(x, ground_size());
  const double s = WeightSum(weights_, x);
  switch (shape_) {
    case ConcaveShape::kSqrt:
      return std::sqrt(s);
    case ConcaveShape::kLog1p:
      return std::log1p(s);
  }
  return s;
}

std::string ConcaveOfModularFunction::name() const {
  return shape_ == ConcaveShape::kSqrt ? "sqrt-of-modular" : "log1p-of-modular";
}

PowerOfModularFunction::PowerOfModularFunction(std::vector<double> weights,
                                               double exponent)
    : weights_(std::move(weights)), exponent_(exponent) {
  CheckWeights(weights_);
  if (!(exponent > 0.0)) throw std::invalid_argument("exponent must be > 0");
}

double PowerOfModularFunction::Evaluate(const Subset& x) const {
  CheckSubset(x, ground_size());
  return std::pow(WeightSum(weights_, x), exponent_);
}

TableFunction::TableFunction(int n, std::vector<double> values)
    : n_(n), values_(std::move(values)) {
  if (n < 1 || n > 20) throw std::invalid_argument("table functions need 1 <= n <= 20");
  if (values_.size() != (size_t{1} << n)) {
    throw std::invalid_argument("table must hold 2^n values");
  }
}

double TableFunction::Evaluate(const Subset& x) const {
  CheckSubset(x, n_);
  size_t mask = 0;
  for (int item : x.items()) mask |= size_t{1} << item;
  return values_[mask];
}

CallableFunction::CallableFunction(int n, Fn fn, bool stochastic,
                                   std::string name)
    : n_(n), fn_(std::move(fn)), stochastic_(stochastic), name_(std::move(name)) {
  if (n < 1) throw std::invalid_argument("ground set must contain at least one item");
}

}  // namespace robsel
