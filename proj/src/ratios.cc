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

#include "robsel/ratios.h"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <stdexcept>

#include "robsel/combinatorics.h"
#include "robsel/errors.h"

namespace robsel {
namespace {

std::vector<int> Iota(int n) {
  std::vector<int> out(n);
  for (int i = 0; i < n; ++i) out[i] = i;
  return out;
}

// min over nonempty S, |S| <= b, disjoint from `base`, for one fixed L.
// Returns +inf if every pair has a zero denominator.
double MinRatioForBase(const SetFunction& f, const Subset& base, int b) {
  const int n = f.ground_size();
  const double f_base = f.Evaluate(base);
  std::vector<int> outside;
  std::vector<double> gain(n, 0.0);
  for (int v = 0; v < n; ++v) {
    if (base.contains(v)) continue;
    outside.push_back(v);
    gain[v] = f.Evaluate(base.With(v)) - f_base;
  }
  double best = std::numeric_limits<double>::infinity();
  ForEachCombination(outside, 1, b, [&](const std::vector<int>& s) {
    double denom;
    if (s.size() == 1) {
      denom = gain[s[0]];
    } else {
      Subset joined = base;
      for (int v : s) joined.insert(v);
      denom = f.Evaluate(joined) - f_base;
    }
    if (denom <= 0.0) return true;
    double num = 0.0;
    for (int v : s) num += gain[v];
    best = std::min(best, num / denom);
    return true;
  });
  return best;
}

void CheckPairBudget(int64_t bases, int n, int b) {
  const int64_t per_base = BinomialRange(n, 1, b);
  if (bases > 0 && per_base > kMaxRatioPairs / bases) {
    throw SizeLimitError("submodularity-ratio enumeration exceeds " +
                         std::to_string(kMaxRatioPairs) + " pairs");
  }
}

double Bound(double beta, double gamma) { return 1.0 - std::exp(-beta * gamma); }

}  // namespace

double SubmodularityRatio(const SetFunction& f, const Subset& x, int b) {
  if (b < 1) throw std::invalid_argument("b must be >= 1");
  if (x.universe_size() != f.ground_size()) {
    throw InvalidSubsetError("subset is not over the function's ground set");
  }
  const std::vector<int> items = x.items();
  if (items.size() >= 62) throw SizeLimitError("X too large to enumerate");
  CheckPairBudget(int64_t{1} << items.size(), f.ground_size(), b);

  double best = std::numeric_limits<double>::infinity();
  ForEachCombination(items, 0, static_cast<int>(items.size()),
                     [&](const std::vector<int>& l) {
                       const Subset base = Subset::FromItems(f.ground_size(), l);
                       best = std::min(best, MinRatioForBase(f, base, b));
                       return true;
                     });
  return std::isinf(best) ? 1.0 : best;
}

double CorrelationRatio(const ObjectiveEnsemble& ensemble, const Subset& x) {
  const int n = ensemble.ground_size();
  const int m = ensemble.num_functions();
  if (x.universe_size() != n) {
    throw InvalidSubsetError("subset is not over the ensemble's ground set");
  }
  if (x.size() >= n) {
    throw std::invalid_argument("correlation ratio needs an item outside X");
  }
  std::vector<int> outside;
  for (int v = 0; v < n; ++v) {
    if (!x.contains(v)) outside.push_back(v);
  }
  // gains[c][i] = f_i(X + outside[c]) - f_i(X)
  std::vector<std::vector<double>> gains(outside.size(), std::vector<double>(m));
  for (int i = 0; i < m; ++i) {
    const SetFunction& f = ensemble.function(i);
    const double base = f.Evaluate(x);
    for (size_t c = 0; c < outside.size(); ++c) {
      gains[c][i] = f.Evaluate(x.With(outside[c])) - base;
    }
  }
  std::vector<double> best_gain(m, -std::numeric_limits<double>::infinity());
  for (size_t c = 0; c < outside.size(); ++c) {
    for (int i = 0; i < m; ++i) best_gain[i] = std::max(best_gain[i], gains[c][i]);
  }
  double beta = -std::numeric_limits<double>::infinity();
  for (size_t c = 0; c < outside.size(); ++c) {
    double worst = std::numeric_limits<double>::infinity();
    for (int i = 0; i < m; ++i) {
      const double term = best_gain[i] > 0.0 ? gains[c][i] / best_gain[i] : 1.0;
      worst = std::min(worst, term);
    }
    beta = std::max(beta, worst);
  }
  return beta;
}

namespace {

template <typename Evaluate>
OptimumResult Exhaustive(int n, int k, Evaluate&& evaluate) {
  if (k < 0 || k > n) {
    throw InvalidBudgetError("budget k=" + std::to_string(k) + " outside [0, n]");
  }
  if (BinomialRange(n, 0, k) > kMaxEnumeratedSubsets) {
    throw SizeLimitError("exhaustive search over more than " +
                         std::to_string(kMaxEnumeratedSubsets) + " subsets");
  }
  OptimumResult best{-std::numeric_limits<double>::infinity(), Subset(n)};
  ForEachCombination(Iota(n), 0, k, [&](const std::vector<int>& items) {
    Subset s = Subset::FromItems(n, items);
    const double value = evaluate(s);
    if (value > best.value ||
        (value == best.value && ItemOrderLess(s, best.witness))) {
      best.value = value;
      best.witness = std::move(s);
    }
    return true;
  });
  return best;
}

}  // namespace

OptimumResult ExhaustiveOptimum(const ObjectiveEnsemble& ensemble, int k) {
  return Exhaustive(ensemble.ground_size(), k, [&](const Subset& s) {
    double worst = std::numeric_limits<double>::infinity();
    for (int i = 0; i < ensemble.num_functions(); ++i) {
      worst = std::min(worst, ensemble.function(i).Evaluate(s));
    }
    return worst;
  });
}

OptimumResult ExhaustiveOptimum(const SetFunction& f, int k) {
  return Exhaustive(f.ground_size(), k,
                    [&](const Subset& s) { return f.Evaluate(s); });
}

std::string GuaranteeReport::ToKeyValue() const {
  auto fmt = [](double v) {
    char buf[64];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return std::string(buf);
  };
  std::string out;
  out += "opt=" + fmt(opt) + "\n";
  out += "opt_per_function=";
  for (size_t i = 0; i < opt_per_function.size(); ++i) {
    if (i) out += ',';
    out += fmt(opt_per_function[i]);
  }
  out += "\n";
  out += "beta=" + fmt(beta) + "\n";
  out += "gamma=" + fmt(gamma) + "\n";
  out += "beta_prime=" + fmt(beta_prime) + "\n";
  out += "gamma_prime=" + fmt(gamma_prime) + "\n";
  out += "ratio_bound=" + fmt(ratio_bound) + "\n";
  out += "ratio_bound_prime=" + fmt(ratio_bound_prime) + "\n";
  return out;
}

GuaranteeReport ComputeGuaranteeReport(const ObjectiveEnsemble& ensemble, int k,
                                       const RunTrace& greedy_trace) {
  const int n = ensemble.ground_size();
  const int m = ensemble.num_functions();
  if (k < 1 || k > n) throw InvalidBudgetError("budget k outside [1, n]");
  if (static_cast<int>(greedy_trace.steps.size()) < k - 1) {
    throw std::invalid_argument("greedy trace shorter than k-1 steps");
  }

  GuaranteeReport report;
  report.opt = ExhaustiveOptimum(ensemble, k).value;
  for (int i = 0; i < m; ++i) {
    report.opt_per_function.push_back(ExhaustiveOptimum(ensemble.function(i), k).value);
  }

  // Greedy prefixes X_0 = empty, X_1, ..., X_{k-1}.
  std::vector<Subset> prefixes{Subset(n)};
  for (int j = 0; j < k - 1; ++j) prefixes.push_back(greedy_trace.steps[j].subset);
  report.beta = std::numeric_limits<double>::infinity();
  for (const Subset& x : prefixes) {
    report.beta = std::min(report.beta, CorrelationRatio(ensemble, x));
  }
  report.gamma = std::numeric_limits<double>::infinity();
  for (int i = 0; i < m; ++i) {
    report.gamma = std::min(
        report.gamma, SubmodularityRatio(ensemble.function(i), prefixes.back(), k));
  }

  if (BinomialRange(n, 0, k - 1) > kMaxEnumeratedSubsets) {
    throw SizeLimitError("too many subsets for beta'");
  }
  report.beta_prime = std::numeric_limits<double>::infinity();
  ForEachCombination(Iota(n), 0, k - 1, [&](const std::vector<int>& items) {
    report.beta_prime = std::min(report.beta_prime,
                                 CorrelationRatio(ensemble, Subset::FromItems(n, items)));
    return true;
  });

  // gamma_{X,k} minimizes over every L inside X, and every L with
  // |L| <= k-1 sits inside some X with |X| = k-1, so gamma' is the minimum
  // over those L directly.
  const int64_t bases = BinomialRange(n, 0, k - 1);
  CheckPairBudget(bases * m, n, k);
  double gamma_prime = std::numeric_limits<double>::infinity();
  for (int i = 0; i < m; ++i) {
    const SetFunction& f = ensemble.function(i);
    ForEachCombination(Iota(n), 0, k - 1, [&](const std::vector<int>& items) {
      gamma_prime =
          std::min(gamma_prime, MinRatioForBase(f, Subset::FromItems(n, items), k));
      return true;
    });
  }
  report.gamma_prime = std::isinf(gamma_prime) ? 1.0 : gamma_prime;

  report.ratio_bound = Bound(report.beta, report.gamma);
  report.ratio_bound_prime = Bound(report.beta_prime, report.gamma_prime);
  return report;
}

}  // namespace robsel
