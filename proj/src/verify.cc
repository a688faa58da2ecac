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

#include "robsel/verify.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <limits>
#include <numbers>
#include <stdexcept>

#include "robsel/diffusion.h"
#include "robsel/eporss.h"
#include "robsel/greedy.h"
#include "robsel/ratios.h"
#include "robsel/spread_function.h"

namespace robsel {
namespace {

constexpr double kTol = 1e-9;

int UniformInt(Rng& rng, int lo, int hi) {
  return std::uniform_int_distribution<int>(lo, hi)(rng);
}

double UniformReal(Rng& rng, double lo, double hi) {
  return std::uniform_real_distribution<double>(lo, hi)(rng);
}

Subset RandomSubset(Rng& rng, int n, int size) {
  std::vector<int> items(n);
  for (int i = 0; i < n; ++i) items[i] = i;
  std::shuffle(items.begin(), items.end(), rng);
  items.resize(size);
  return Subset::FromItems(n, items);
}

std::vector<double> RandomWeights(Rng& rng, int n) {
  std::vector<double> w(n);
  for (double& x : w) x = UniformReal(rng, 0.0, 10.0);
  return w;
}

std::shared_ptr<const SetFunction> RandomFunction(Rng& rng, int n,
                                                  bool allow_non_submodular,
                                                  std::string& tag) {
  const int kind = UniformInt(rng, 0, allow_non_submodular ? 4 : 3);
  switch (kind) {
    case 0:
      tag = "modular";
      return std::make_shared<ModularFunction>(RandomWeights(rng, n));
    case 1: {
      tag = "coverage";
      const int universe = UniformInt(rng, n, 2 * n);
      std::vector<std::vector<int>> sets(n);
      for (auto& s : sets) {
        const int size = UniformInt(rng, 1, 3);
        for (int j = 0; j < size; ++j) s.push_back(UniformInt(rng, 0, universe - 1));
      }
      return std::make_shared<CoverageFunction>(std::move(sets), universe);
    }
    case 2:
      tag = "sqrt";
      return std::make_shared<ConcaveOfModularFunction>(RandomWeights(rng, n),
                                                        ConcaveShape::kSqrt);
    case 3:
      tag = "log1p";
      return std::make_shared<ConcaveOfModularFunction>(RandomWeights(rng, n),
                                                        ConcaveShape::kLog1p);
    default:
      tag = "square";
      return std::make_shared<PowerOfModularFunction>(RandomWeights(rng, n), 2.0);
  }
}

class Stopwatch {
 public:
  Stopwatch() : start_(std::chrono::steady_clock::now()) {}
  double seconds() const {
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - start_)
        .count();
  }

 private:
  std::chrono::steady_clock::time_point start_;
};

CheckResult Finish(std::string name, int64_t cases, int64_t violations,
                   std::string detail, const Stopwatch& watch,
                   int64_t allowed = 0) {
  CheckResult r;
  r.name = std::move(name);
  r.cases = cases;
  r.violations = violations;
  r.passed = violations <= allowed && cases > 0;
  r.detail = std::move(detail);
  r.seconds = watch.seconds();
  return r;
}

std::string Fmt(const char* format, double a) {
  char buf[128];
  std::snprintf(buf, sizeof(buf), format, a);
  return buf;
}

}  // namespace

RandomInstance MakeRandomInstance(Rng& rng, const InstanceShape& shape) {
  const int n = UniformInt(rng, shape.min_n, shape.max_n);
  const int m = UniformInt(rng, 1, shape.max_m);
  RandomInstance inst;
  inst.k = UniformInt(rng, 1, std::min(shape.max_k, n));
  std::vector<std::shared_ptr<const SetFunction>> fns;
  inst.description = "n=" + std::to_string(n) + " k=" + std::to_string(inst.k) +
                     " m=" + std::to_string(m) + " [";
  for (int i = 0; i < m; ++i) {
    std::string tag;
    fns.push_back(RandomFunction(rng, n, shape.allow_non_submodular, tag));
    inst.description += (i ? "," : "") + tag;
  }
  inst.description += "]";
  inst.ensemble = std::make_unique<ObjectiveEnsemble>(std::move(fns));
  return inst;
}

DirectedGraph MakeRandomGraph(Rng& rng, int n, int edges) {
  std::vector<Edge> all;
  for (int u = 0; u < n; ++u) {
    for (int v = 0; v < n; ++v) {
      if (u != v) all.push_back({u, v, 1.0});
    }
  }
  std::shuffle(all.begin(), all.end(), rng);
  all.resize(std::min<size_t>(all.size(), edges));
  return DirectedGraph(n, all);
}

CheckResult CheckGreedyGuarantee(int instances, uint64_t seed) {
  Stopwatch watch;
  Rng rng(seed);
  int64_t violations = 0;
  double worst_slack = std::numeric_limits<double>::infinity();
  for (int t = 0; t < instances; ++t) {
    RandomInstance inst = MakeRandomInstance(rng, {});
    const SelectionResult greedy = GreedySelect(*inst.ensemble, inst.k);
    const GuaranteeReport report =
        ComputeGuaranteeReport(*inst.ensemble, inst.k, greedy.trace);
    const double target = report.ratio_bound * report.opt;
    worst_slack = std::min(worst_slack, greedy.value - target);
    if (greedy.value < target - kTol || report.ratio_bound > 1.0) ++violations;
  }
  return Finish("greedy-approximation-bound", instances, violations,
                Fmt("min F - bound*OPT = %.6g", worst_slack), watch);
}

CheckResult CheckEporssGuarantee(int instances, int seeds, uint64_t seed) {
  Stopwatch watch;
  Rng rng(seed);
  int64_t violations = 0;
  int64_t seed_failures = 0;
  for (int t = 0; t < instances; ++t) {
    RandomInstance inst = MakeRandomInstance(rng, {});
    const int n = inst.ensemble->ground_size();
    const SelectionResult greedy = GreedySelect(*inst.ensemble, inst.k);
    const GuaranteeReport report =
        ComputeGuaranteeReport(*inst.ensemble, inst.k, greedy.trace);
    const double target = report.ratio_bound_prime * report.opt - kTol;
    EporssOptions options;
    options.iterations = 2 * DefaultIterations(n, inst.k);
    bool reached = false;
    for (int s = 0; s < seeds; ++s) {
      options.seed = DeriveSeed(seed, {static_cast<uint64_t>(t), static_cast<uint64_t>(s)});
      const EporssResult run = EporssRun(*inst.ensemble, inst.k, options);
      if (run.selection.value >= target && run.selection.subset.size() <= inst.k) {
        reached = true;
      } else {
        ++seed_failures;
      }
    }
    if (!reached) ++violations;
  }
  return Finish("eporss-approximation-bound", instances, violations,
                "failed seeds " + std::to_string(seed_failures) + "/" +
                    std::to_string(int64_t{instances} * seeds),
                watch);
}

CheckResult CheckEvaluationCounts(int max_n, uint64_t seed) {
  Stopwatch watch;
  Rng rng(seed);
  int64_t cases = 0;
  int64_t violations = 0;
  for (int n = 1; n <= max_n; ++n) {
    for (int k = 1; k <= n; ++k) {
      InstanceShape shape;
      shape.min_n = shape.max_n = n;
      RandomInstance inst = MakeRandomInstance(rng, shape);
      const ObjectiveEnsemble& ens = *inst.ensemble;
      // (n - k/2 + 1/2) k and (2n - k + 1) k evaluated in floating point,
      // independently of the integer helpers.
      const double greedy_expected = (n - k / 2.0 + 0.5) * k;
      const double modified_expected = (2.0 * n - k + 1.0) * k;

      inst.ensemble->ResetCounters();
      GreedySelect(ens, k);
      if (static_cast<double>(ens.eval_count()) != greedy_expected) ++violations;
      for (int64_t c : ens.per_function_counts()) {
        if (c != ens.eval_count()) ++violations;
      }

      inst.ensemble->ResetCounters();
      ModifiedGreedySelect(ens, k);
      if (static_cast<double>(ens.eval_count()) != modified_expected) ++violations;
      cases += 2;
    }
  }
  return Finish("evaluation-counts", cases, violations,
                "1<=k<=n<=" + std::to_string(max_n), watch);
}

CheckResult CheckSpreadLipschitz(int triples, int max_edges, uint64_t seed) {
  Stopwatch watch;
  Rng rng(seed);
  int64_t violations = 0;
  double max_ratio = 0.0;
  for (int t = 0; t < triples; ++t) {
    const int n = UniformInt(rng, 2, 7);
    const int edges = UniformInt(rng, 1, std::min(max_edges, n * (n - 1)));
    const DirectedGraph g = MakeRandomGraph(rng, n, edges);
    std::vector<double> a(g.num_edges()), b(g.num_edges());
    for (double& p : a) p = UniformReal(rng, 0.0, 1.0);
    for (double& p : b) p = UniformReal(rng, 0.0, 1.0);
    const ProbabilityVector ta(std::move(a)), tb(std::move(b));
    const Subset x = RandomSubset(rng, n, UniformInt(rng, 0, n));
    const double diff =
        std::abs(ExactSpreadLiveEdge(g, ta, x) - ExactSpreadLiveEdge(g, tb, x));
    const double bound = n * VectorDistance(ta, tb);
    if (bound > 0) max_ratio = std::max(max_ratio, diff / bound);
    if (diff > bound + kTol) ++violations;
  }
  return Finish("spread-lipschitz", triples, violations,
                Fmt("max |diff|/(n delta) = %.4f", max_ratio), watch);
}

CheckResult CheckBetaLowerBound(int instances, uint64_t seed) {
  Stopwatch watch;
  Rng rng(seed);
  int64_t checked = 0;
  int64_t violations = 0;
  double min_margin = std::numeric_limits<double>::infinity();
  for (int t = 0; t < instances; ++t) {
    const int n = UniformInt(rng, 4, 7);
    const int edges = UniformInt(rng, n, std::min(12, n * (n - 1)));
    auto graph = std::make_shared<const DirectedGraph>(MakeRandomGraph(rng, n, edges));
    std::vector<double> base(graph->num_edges());
    for (double& p : base) p = UniformReal(rng, 0.05, 0.6);
    double mass = 0.0;
    for (double p : base) mass += p;
    const ProbabilityVector theta(std::move(base));
    // Pairwise distance is at most 2 eta sum(theta); this keeps it strictly
    // under 1/(4en).
    const double limit = 1.0 / (4.0 * std::numbers::e * n);
    const double eta = 0.9 * limit / (2.0 * mass);
    const int m = UniformInt(rng, 2, 3);
    const std::vector<ProbabilityVector> thetas =
        PerturbProbabilities(theta, 1.0 - eta, 1.0 + eta, m, rng);
    const double delta_max = MaxPairwiseDistance(thetas);
    if (!(delta_max < limit)) {
      ++violations;
      continue;
    }
    std::vector<std::shared_ptr<const SetFunction>> fns;
    for (const auto& th : thetas) {
      fns.push_back(std::make_shared<ExactSpreadFunction>(graph, th));
    }
    ObjectiveEnsemble ensemble(std::move(fns));
    const int k = std::min(3, n - 1);
    const SelectionResult greedy = GreedySelect(ensemble, k);
    const double bound = BetaLowerBound(n, delta_max);
    std::vector<Subset> prefixes{Subset(n)};
    for (int j = 0; j < k - 1; ++j) prefixes.push_back(greedy.trace.steps[j].subset);
    for (const Subset& x : prefixes) {
      bool operative = true;
      for (int i = 0; i < m; ++i) {
        if (!(ensemble.function(i).Evaluate(x) < (1.0 - 1.0 / std::numbers::e) * n)) {
          operative = false;
        }
      }
      if (!operative) continue;
      ++checked;
      const double beta = CorrelationRatio(ensemble, x);
      min_margin = std::min(min_margin, beta - bound);
      if (beta < bound - kTol) ++violations;
    }
  }
  return Finish("correlation-ratio-lower-bound", checked, violations,
                Fmt("min beta - bound = %.4g", min_margin), watch);
}

CheckResult CheckOneStepGains(int pairs, uint64_t seed) {
  Stopwatch watch;
  Rng rng(seed);
  int64_t violations = 0;
  for (int t = 0; t < pairs; ++t) {
    RandomInstance inst = MakeRandomInstance(rng, {});
    const ObjectiveEnsemble& ens = *inst.ensemble;
    const int n = ens.ground_size();
    const int m = ens.num_functions();
    const int k = inst.k;
    const Subset x = RandomSubset(rng, n, UniformInt(rng, 0, n - 1));
    const double opt = ExhaustiveOptimum(ens, k).value;

    double gamma_min = std::numeric_limits<double>::infinity();
    std::vector<double> fx(m);
    for (int i = 0; i < m; ++i) {
      const SetFunction& f = ens.function(i);
      const double gamma = SubmodularityRatio(f, x, k);
      gamma_min = std::min(gamma_min, gamma);
      fx[i] = f.Evaluate(x);
      const double opt_i = ExhaustiveOptimum(f, k).value;
      double best_gain = -std::numeric_limits<double>::infinity();
      for (int v = 0; v < n; ++v) {
        if (!x.contains(v)) best_gain = std::max(best_gain, MarginalGain(f, x, v));
      }
      if (best_gain < gamma / k * (opt_i - fx[i]) - kTol) ++violations;
    }
    const double fx_min = *std::min_element(fx.begin(), fx.end());
    const double beta = CorrelationRatio(ens, x);
    double best_f_gain = -std::numeric_limits<double>::infinity();
    for (int v = 0; v < n; ++v) {
      if (x.contains(v)) continue;
      double worst = std::numeric_limits<double>::infinity();
      for (int i = 0; i < m; ++i) {
        worst = std::min(worst, ens.function(i).Evaluate(x.With(v)));
      }
      best_f_gain = std::max(best_f_gain, worst - fx_min);
    }
    if (best_f_gain < beta * gamma_min / k * (opt - fx_min) - kTol) ++violations;
  }
  return Finish("one-step-gains", pairs, violations, "", watch);
}

CheckResult CheckSubmodularityDetection(int triples, uint64_t seed) {
  Stopwatch watch;
  Rng rng(seed);
  int64_t violations = 0;
  for (int t = 0; t < triples; ++t) {
    const int n = UniformInt(rng, 3, 8);
    const int universe = UniformInt(rng, n, 2 * n);
    std::vector<std::vector<int>> sets(n);
    for (auto& s : sets) {
      const int size = UniformInt(rng, 1, 4);
      for (int j = 0; j < size; ++j) s.push_back(UniformInt(rng, 0, universe - 1));
    }
    const CoverageFunction f(std::move(sets), universe);
    const Subset x = RandomSubset(rng, n, UniformInt(rng, 0, n - 1));
    const int b = UniformInt(rng, 1, 3);
    if (SubmodularityRatio(f, x, b) != 1.0) ++violations;
  }
  // f({v1}) = f({v2}) = 0, f({v1, v2}) = 1.
  const TableFunction witness(2, {0.0, 0.0, 0.0, 1.0});
  const bool witness_ok = SubmodularityRatio(witness, Subset(2), 2) < 1.0;
  const PowerOfModularFunction square({1.0, 2.0, 3.0}, 2.0);
  const bool square_ok = SubmodularityRatio(square, Subset(3), 2) < 1.0;
  if (!witness_ok) ++violations;
  if (!square_ok) ++violations;
  return Finish("submodularity-detection", triples + 2, violations,
                "coverage gamma==1, supermodular witnesses gamma<1", watch);
}

CheckResult CheckMonteCarloCalibration(int cases, int replicates,
                                       int allowed_failures, uint64_t seed) {
  Stopwatch watch;
  Rng rng(seed);
  int64_t failures = 0;
  double worst_z = 0.0;
  for (int t = 0; t < cases; ++t) {
    const int n = UniformInt(rng, 3, 8);
    const int edges = UniformInt(rng, 1, std::min(12, n * (n - 1)));
    const DirectedGraph g = MakeRandomGraph(rng, n, edges);
    std::vector<double> probs(g.num_edges());
    for (double& p : probs) p = UniformReal(rng, 0.0, 1.0);
    const ProbabilityVector theta(std::move(probs));
    const Subset x = RandomSubset(rng, n, UniformInt(rng, 1, 2));
    const double exact = ExactSpreadLiveEdge(g, theta, x);
    const Simulator sim = [&](const Subset& s, Rng& r) {
      return SimulateIC(g, theta, s, r);
    };
    const SpreadEstimate est =
        EstimateSpreadWithError(sim, x, replicates, DeriveSeed(seed, {uint64_t(t)}));
    const double se = est.sample_stddev / std::sqrt(static_cast<double>(replicates));
    const double err = std::abs(est.mean - exact);
    if (se > 0) worst_z = std::max(worst_z, err / se);
    // Floating slack covers the zero-variance case.
    if (err > 4.0 * se + kTol) ++failures;
  }
  return Finish("monte-carlo-calibration", cases, failures,
                "allowed " + std::to_string(allowed_failures) +
                    Fmt(", max |z| = %.3f", worst_z),
                watch, allowed_failures);
}

CheckResult CheckPopulationInvariants(int64_t total_iterations, uint64_t seed) {
  Stopwatch watch;
  Rng rng(seed);
  int64_t violations = 0;
  int64_t runs = 0;
  std::string first_failure;
  auto fail = [&](const std::string& why) {
    ++violations;
    if (first_failure.empty()) first_failure = why;
  };

  // The g1 penalty must start exactly at size 2k.
  for (int k = 1; k <= 4; ++k) {
    if (InfeasibleSizeThreshold(k) != 2 * k) fail("threshold is not 2k");
    const int n = 2 * k + 1;
    ObjectiveEnsemble ens({std::make_shared<ModularFunction>(std::vector<double>(n, 1.0))});
    for (int size = 0; size <= n; ++size) {
      const auto [g1, g2] = BiObjective(RandomSubset(rng, n, size), k, ens);
      const bool penalized = g1 == kNegInfinity;
      if (penalized != (size >= 2 * k) || g2 != -size) {
        fail("bi-objective wrong at k=" + std::to_string(k) +
             " size=" + std::to_string(size));
      }
    }
  }

  int64_t done = 0;
  while (done < total_iterations) {
    InstanceShape shape;
    shape.min_n = 4;
    shape.max_n = 14;
    shape.max_k = 4;
    shape.allow_non_submodular = true;
    RandomInstance inst = MakeRandomInstance(rng, shape);
    EporssOptions options;
    options.iterations = std::min<int64_t>(total_iterations - done,
                                           UniformInt(rng, 200, 5000));
    options.trace_samples = static_cast<int>(options.iterations);
    options.check_invariants = true;
    options.seed = DeriveSeed(seed, {static_cast<uint64_t>(runs)});
    ++runs;
    done += options.iterations;
    try {
      const EporssResult run = EporssRun(*inst.ensemble, inst.k, options);
      if (run.max_population > 2 * inst.k) fail("archive exceeded 2k");
      const auto& steps = run.selection.trace.steps;
      for (size_t i = 1; i < steps.size(); ++i) {
        if (steps[i].value < steps[i - 1].value) {
          fail("best feasible F decreased in run " + std::to_string(runs));
          break;
        }
      }
    } catch (const std::logic_error& e) {
      fail(e.what());
    }
  }
  return Finish("eporss-population-invariants", done, violations,
                std::to_string(runs) + " runs" +
                    (first_failure.empty() ? "" : "; first: " + first_failure),
                watch);
}

VerifyTier ParseVerifyTier(const std::string& text) {
  if (text == "tiny") return VerifyTier::kTiny;
  if (text == "small") return VerifyTier::kSmall;
  throw std::invalid_argument("unknown verify tier '" + text + "'");
}

std::string FormatCheck(const CheckResult& r) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.2fs", r.seconds);
  return std::string(r.passed ? "[PASS] " : "[FAIL] ") + r.name +
         ": cases=" + std::to_string(r.cases) +
         " violations=" + std::to_string(r.violations) +
         (r.detail.empty() ? "" : " (" + r.detail + ")") + " " + buf;
}

std::vector<CheckResult> RunVerification(VerifyTier tier, uint64_t seed,
                                         std::ostream* log) {
  const bool small = tier == VerifyTier::kSmall;
  std::vector<CheckResult> results;
  auto record = [&](CheckResult r) {
    if (log) *log << FormatCheck(r) << std::endl;
    results.push_back(std::move(r));
  };
  // Both guarantee checks draw the same instance pool.
  const uint64_t pool_seed = DeriveSeed(seed, {1});
  record(CheckGreedyGuarantee(small ? 100 : 30, pool_seed));
  record(CheckEporssGuarantee(small ? 100 : 30, 10, pool_seed));
  record(CheckEvaluationCounts(small ? 12 : 8, DeriveSeed(seed, {3})));
  record(CheckSpreadLipschitz(small ? 200 : 60, 12, DeriveSeed(seed, {4})));
  record(CheckBetaLowerBound(small ? 20 : 6, DeriveSeed(seed, {5})));
  record(CheckOneStepGains(small ? 100 : 30, DeriveSeed(seed, {6})));
  record(CheckSubmodularityDetection(50, DeriveSeed(seed, {7})));
  record(CheckMonteCarloCalibration(small ? 50 : 20, small ? 10000 : 2000, 1,
                                    DeriveSeed(seed, {8})));
  record(CheckPopulationInvariants(small ? 1'000'000 : 100'000, DeriveSeed(seed, {9})));
  return results;
}

}  // namespace robsel
