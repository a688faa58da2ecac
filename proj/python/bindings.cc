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

#include <pybind11/functional.h>
#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include <memory>
#include <optional>
#include <string>
#include <vector>

#include "robsel/config.h"
#include "robsel/eporss.h"
#include "robsel/experiment.h"
#include "robsel/greedy.h"
#include "robsel/objective.h"
#include "robsel/ratios.h"
#include "robsel/saturate.h"
#include "robsel/set_function.h"
#include "robsel/verify.h"

namespace py = pybind11;

namespace robsel {
namespace {

Subset ToSubset(int n, const std::vector<int>& items) {
  for (int v : items) {
    if (v < 0 || v >= n) throw py::index_error("item out of range");
  }
  return Subset::FromItems(n, std::span<const int>(items));
}

py::dict SelectionToDict(const SelectionResult& result, int64_t evaluations) {
  py::dict d;
  d["items"] = result.subset.items();
  d["value"] = result.value;
  d["evaluations"] = evaluations;
  py::list steps;
  for (const TraceStep& s : result.trace.steps) {
    steps.append(py::make_tuple(s.iteration, s.item, s.value, s.evaluations));
  }
  d["trace"] = steps;
  return d;
}

py::dict CheckToDict(const CheckResult& c) {
  py::dict d;
  d["name"] = c.name;
  d["passed"] = c.passed;
  d["cases"] = c.cases;
  d["violations"] = c.violations;
  d["detail"] = c.detail;
  d["seconds"] = c.seconds;
  return d;
}

std::shared_ptr<SetFunction> MakeCallable(int n, py::function fn, bool stochastic,
                                          std::string name) {
  auto holder = std::make_shared<py::function>(std::move(fn));
  CallableFunction::Fn wrapped = [holder](const Subset& x) {
    py::gil_scoped_acquire gil;
    return (*holder)(x.items()).cast<double>();
  };
  // py::function must be released with the GIL held.
  auto deleter = [](CallableFunction* f) {
    py::gil_scoped_acquire gil;
    delete f;
  };
  return std::shared_ptr<SetFunction>(
      new CallableFunction(n, std::move(wrapped), stochastic, std::move(name)),
      deleter);
}

ExperimentCommand ParseCommand(const std::string& text) {
  if (text == "run") return ExperimentCommand::kRun;
  if (text == "sweep") return ExperimentCommand::kSweep;
  if (text == "trace") return ExperimentCommand::kTrace;
  throw py::value_error("command must be run, sweep or trace");
}

py::dict OutputToDict(const ExperimentOutput& out) {
  py::dict d;
  py::list records;
  for (const RunRecord& r : out.records) {
    py::dict row;
    row["algorithm"] = r.algorithm;
    row["k"] = r.k;
    row["m"] = r.m;
    row["repetition"] = r.repetition;
    row["seed"] = r.seed;
    row["F"] = r.value;
    row["evaluations"] = r.evaluations;
    row["subset"] = r.subset;
    records.append(row);
  }
  py::list summary;
  for (const SummaryRow& s : out.summary) {
    py::dict row;
    row["algorithm"] = s.algorithm;
    row["k"] = s.k;
    row["m"] = s.m;
    row["runs"] = s.runs;
    row["F_mean"] = s.value_mean;
    row["F_std"] = s.value_std;
    row["evaluations_mean"] = s.evaluations_mean;
    summary.append(row);
  }
  py::list trace;
  for (const TraceRow& t : out.trace) {
    trace.append(py::make_tuple(t.series, t.iteration, t.iteration_kn, t.value));
  }
  d["records"] = records;
  d["summary"] = summary;
  d["trace"] = trace;
  d["metadata_json"] = out.metadata_json;
  d["errors"] = out.errors;
  return d;
}

}  // namespace
}  // namespace robsel

PYBIND11_MODULE(_robsel, m) {
  using namespace robsel;
  m.attr("__version__") = ROBSEL_VERSION;

  py::class_<SetFunction, std::shared_ptr<SetFunction>>(m, "SetFunction")
      .def_property_readonly("ground_size", &SetFunction::ground_size)
      .def_property_readonly("name", &SetFunction::name)
      .def_property_readonly("stochastic", &SetFunction::stochastic)
      .def("__call__", [](const SetFunction& f, const std::vector<int>& items) {
        return f.Evaluate(ToSubset(f.ground_size(), items));
      });

  m.def("modular", [](std::vector<double> w) -> std::shared_ptr<SetFunction> {
    return std::make_shared<ModularFunction>(std::move(w));
  }, py::arg("weights"));
  m.def("coverage",
        [](std::vector<std::vector<int>> sets, int universe,
           std::vector<double> weights) -> std::shared_ptr<SetFunction> {
          return std::make_shared<CoverageFunction>(std::move(sets), universe,
                                                    std::move(weights));
        },
        py::arg("item_sets"), py::arg("universe_size"),
        py::arg("element_weights") = std::vector<double>{});
  m.def("concave_of_modular",
        [](std::vector<double> w, const std::string& shape) -> std::shared_ptr<SetFunction> {
          ConcaveShape s;
          if (shape == "sqrt") {
            s = ConcaveShape::kSqrt;
          } else if (shape == "log1p") {
            s = ConcaveShape::kLog1p;
          } else {
            throw py::value_error("shape must be sqrt or log1p");
          }
          return std::make_shared<ConcaveOfModularFunction>(std::move(w), s);
        },
        py::arg("weights"), py::arg("shape") = "sqrt");
  m.def("power_of_modular",
        [](std::vector<double> w, double e) -> std::shared_ptr<SetFunction> {
          return std::make_shared<PowerOfModularFunction>(std::move(w), e);
        },
        py::arg("weights"), py::arg("exponent"));
  m.def("table", [](int n, std::vector<double> v) -> std::shared_ptr<SetFunction> {
    return std::make_shared<TableFunction>(n, std::move(v));
  }, py::arg("n"), py::arg("values"));
  m.def("callable", &MakeCallable, py::arg("n"), py::arg("fn"),
        py::arg("stochastic") = false, py::arg("name") = "callable");

  py::class_<ObjectiveEnsemble>(m, "Ensemble")
      .def(py::init([](const std::vector<std::shared_ptr<SetFunction>>& fs,
                       std::vector<std::string> labels) {
             std::vector<std::shared_ptr<const SetFunction>> cfs(fs.begin(), fs.end());
             return std::make_unique<ObjectiveEnsemble>(std::move(cfs), std::move(labels));
           }),
           py::arg("functions"), py::arg("labels") = std::vector<std::string>{})
      .def_property_readonly("ground_size", &ObjectiveEnsemble::ground_size)
      .def_property_readonly("num_functions", &ObjectiveEnsemble::num_functions)
      .def_property_readonly("eval_count", &ObjectiveEnsemble::eval_count)
      .def("reset_counters", &ObjectiveEnsemble::ResetCounters)
      .def("evaluate", [](const ObjectiveEnsemble& e, const std::vector<int>& items) {
        return e.EvaluateWorstCase(ToSubset(e.ground_size(), items));
      })
      .def("evaluate_all", [](const ObjectiveEnsemble& e, const std::vector<int>& items) {
        return e.EvaluateAll(ToSubset(e.ground_size(), items));
      });

  m.def("greedy", [](ObjectiveEnsemble& e, int k) {
    SelectionResult r;
    {
      py::gil_scoped_release release;
      e.ResetCounters();
      r = GreedySelect(e, k);
    }
    return SelectionToDict(r, e.eval_count());
  }, py::arg("ensemble"), py::arg("k"));

  m.def("modified_greedy", [](ObjectiveEnsemble& e, int k, bool cache) {
    SelectionResult r;
    {
      py::gil_scoped_release release;
      e.ResetCounters();
      r = ModifiedGreedySelect(e, k, {.cache_best_gains = cache});
    }
    return SelectionToDict(r, e.eval_count());
  }, py::arg("ensemble"), py::arg("k"), py::arg("cache_best_gains") = false);

  m.def("saturate", [](ObjectiveEnsemble& e, int k, double alpha, double epsilon,
                       int max_rounds) {
    SaturateConfig config;
    config.alpha = alpha;
    config.epsilon = epsilon;
    config.max_rounds = max_rounds;
    SaturateResult r;
    {
      py::gil_scoped_release release;
      e.ResetCounters();
      r = SaturateSelect(e, k, config);
    }
    py::dict d = SelectionToDict(r.selection, e.eval_count());
    d["found_feasible"] = r.found_feasible;
    d["rounds"] = r.rounds;
    d["c_max"] = r.c_max;
    return d;
  }, py::arg("ensemble"), py::arg("k"), py::arg("alpha") = 1.0,
     py::arg("epsilon") = 1e-3, py::arg("max_rounds") = 60);

  m.def("eporss", [](ObjectiveEnsemble& e, int k, int64_t iterations, uint64_t seed,
                     int trace_samples) {
    EporssOptions options;
    options.iterations = iterations;
    options.seed = seed;
    options.trace_samples = trace_samples;
    EporssResult r;
    {
      py::gil_scoped_release release;
      e.ResetCounters();
      r = EporssRun(e, k, options);
    }
    py::dict d = SelectionToDict(r.selection, e.eval_count());
    d["iterations"] = r.iterations;
    d["max_population"] = r.max_population;
    return d;
  }, py::arg("ensemble"), py::arg("k"), py::arg("iterations") = -1,
     py::arg("seed") = 0, py::arg("trace_samples") = 200);

  m.def("greedy_evaluation_count", &GreedyEvaluationCount, py::arg("n"), py::arg("k"));
  m.def("modified_greedy_evaluation_count", &ModifiedGreedyEvaluationCount,
        py::arg("n"), py::arg("k"));
  m.def("default_iterations", &DefaultIterations, py::arg("n"), py::arg("k"));

  m.def("submodularity_ratio",
        [](const SetFunction& f, const std::vector<int>& items, int b) {
          const Subset x = ToSubset(f.ground_size(), items);
          py::gil_scoped_release release;
          return SubmodularityRatio(f, x, b);
        },
        py::arg("f"), py::arg("items"), py::arg("b"));
  m.def("correlation_ratio",
        [](const ObjectiveEnsemble& e, const std::vector<int>& items) {
          const Subset x = ToSubset(e.ground_size(), items);
          py::gil_scoped_release release;
          return CorrelationRatio(e, x);
        },
        py::arg("ensemble"), py::arg("items"));
  m.def("exhaustive_optimum", [](const ObjectiveEnsemble& e, int k) {
    OptimumResult r;
    {
      py::gil_scoped_release release;
      r = ExhaustiveOptimum(e, k);
    }
    return py::make_tuple(r.value, r.witness.items());
  }, py::arg("ensemble"), py::arg("k"));

  m.def("run_experiment",
        [](const std::string& config_path, const std::string& command,
           std::optional<uint64_t> seed, std::optional<std::string> out_dir) {
          ExperimentConfig config = LoadConfigFile(config_path);
          if (seed) config.seed = *seed;
          ExperimentOutput output;
          {
            py::gil_scoped_release release;
            output = RunExperiment(config, ParseCommand(command));
            if (out_dir) WriteOutputs(output, *out_dir);
          }
          return OutputToDict(output);
        },
        py::arg("config"), py::arg("command") = "run", py::arg("seed") = py::none(),
        py::arg("out") = py::none());

  m.def("verify", [](const std::string& tier, uint64_t seed) {
    std::vector<CheckResult> checks;
    {
      py::gil_scoped_release release;
      checks = RunVerification(ParseVerifyTier(tier), seed, nullptr);
    }
    py::list out;
    for (const CheckResult& c : checks) out.append(CheckToDict(c));
    return out;
  }, py::arg("tier") = "tiny", py::arg("seed") = 0);
}
