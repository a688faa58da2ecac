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

#ifndef ROBSEL_SET_FUNCTION_H_
#define ROBSEL_SET_FUNCTION_H_

#include <functional>
#include <string>
#include <vector>

#include "robsel/subset.h"

namespace robsel {

// A normalized set function over the ground set {0, ..., n-1}.
//
// Implementations must be safe to call concurrently. Deterministic oracles
// are expected to be monotone with f(empty) = 0; stochastic oracles return
// noisy estimates whose reproducibility is governed by their seed policy.
class SetFunction {
 public:
  virtual ~SetFunction() = default;

  virtual int ground_size() const = 0;
  virtual double Evaluate(const Subset& x) const = 0;
  virtual bool stochastic() const { return false; }
  virtual std::string name() const = 0;
};

// f(X) = sum of non-negative item weights.
class ModularFunction : public SetFunction {
 public:
  explicit ModularFunction(std::vector<double> weights);

  int ground_size() const override { return static_cast<int>(weights_.size()); }
  double Evaluate(const Subset& x) const override;
  std::string name() const override { return "modular"; }

  const std::vector<double>& weights() const { return weights_; }

 private:
  std::vector<double> weights_;
};

// f(X) = total weight of universe elements covered by the items in X.
// Element weights default to 1, which keeps values integral.
class CoverageFunction : public SetFunction {
 public:
  CoverageFunction(std::vector<std::vector<int>> item_sets, int universe_size,
                   std::vector<double> element_weights = {});

  int ground_size() const override {
    return static_cast<int>(item_sets_.size());
  }
  double Evaluate(const Subset& x) const override;
  std::string name() const override { return "coverage"; }

 private:
  std::vector<std::vector<int>> item_sets_;
  int universe_size_;
  std::vector<double> element_weights_;
};

enum class ConcaveShape { kSqrt, kLog1p };

// f(X) = g(sum of weights) for a concave, increasing g with g(0) = 0.
class ConcaveOfModularFunction : public SetFunction {
 public:
  ConcaveOfModularFunction(std::vector<double> weights, ConcaveShape shape);

  int ground_size() const override { return static_cast<int>(weights_.size()); }
  double Evaluate(const Subset& x) const override;
  std::string name() const override;

 private:
  std::vector<double> weights_;
  ConcaveShape shape_;
};

// f(X) = (sum of weights)^exponent. Supermodular for exponent > 1, so it is
// the standard monotone non-submodular test family.
class PowerOfModularFunction : public SetFunction {
 public:
  PowerOfModularFunction(std::vector<double> weights, double exponent);

  int ground_size() const override { return static_cast<int>(weights_.size()); }
  double Evaluate(const Subset& x) const override;
  std::string name() const override { return "power-of-modular"; }

 private:
  std::vector<double> weights_;
  double exponent_;
};

// Explicit value table indexed by the subset's bit mask (n <= 20).
class TableFunction : public SetFunction {
 public:
  TableFunction(int n, std::vector<double> values);

  int ground_size() const override { return n_; }
  double Evaluate(const Subset& x) const override;
  std::string name() const override { return "table"; }

 private:
  int n_;
  std::vector<double> values_;
};

// Wraps an arbitrary callable. The caller vouches for thread safety.
class CallableFunction : public SetFunction {
 public:
  using Fn = std::function<double(const Subset&)>;

  CallableFunction(int n, Fn fn, bool stochastic = false,
                   std::string name = "callable");

  int ground_size() const override { return n_; }
  double Evaluate(const Subset& x) const override { return fn_(x); }
  bool stochastic() const override { return stochastic_; }
  std::string name() const override { return name_; }

 private:
  int n_;
  Fn fn_;
  bool stochastic_;
  std::string name_;
};

}  // namespace robsel

#endif  // ROBSEL_SET_FUNCTION_H_
