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

#include "robsel/experiment.h"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <map>
#include <optional>
#include <stdexcept>

#include "json.hpp"
#include "robsel/eporss.h"
#include "robsel/errors.h"
#include "robsel/greedy.h"
#include "robsel/parallel.h"
#include "robsel/rng.h"
#include "robsel/saturate.h"
#include "robsel/spread_function.h"

namespace robsel {
namespace {

// Stream tags for DeriveSeed.
constexpr uint64_t kPerturbStream = 1;
constexpr uint64_t kOracleStream = 2;
constexpr uint64_t kEporssStream = 3;

std::string Num(double v) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.17g", v);
  return buf;
}

std::vector<std::string> Split(const std::string& text, char sep) {
  std::vector<std::string> out;
  size_t start = 0;
  while (true) {
    const size_t pos = text.find(sep, start);
    out.push_back(text.substr(start, pos - start));
    if (pos == std::string::npos) break;
    start = pos + 1;
  }
  return out;
}

double ToDouble(const std::string& text, const std::string& spec) {
  try {
    size_t used = 0;
    const double v = std::stod(text, &used);
    if (used == text.size()) return v;
  } catch (const std::exception&) {
  }
  throw ConfigError("bad number '" + text + "' in function '" + spec + "'");
}

// Aligns snapshot graphs on the union of their node labels, keeping the
// `limit` labels with the largest summed degree (ties to first appearance).
std::vector<std::shared_ptr<const DirectedGraph>> AlignSnapshots(
    const std::vector<DirectedGraph>& snapshots, int limit,
    std::vector<std::string>& labels) {
  std::map<std::string, int> index;
  std::vector<std::string> all;
  std::vector<int64_t> degree;
  for (const DirectedGraph& g : snapshots) {
    for (int u = 0; u < g.num_nodes(); ++u) {
      auto [it, fresh] = index.emplace(g.labels()[u], static_cast<int>(all.size()));
      if (fresh) {
        all.push_back(g.labels()[u]);
        degree.push_back(0);
      }
      degree[it->second] += g.in_degree(u) + g.out_degree(u);
    }
  }
  std::vector<int> order(all.size());
  for (size_t i = 0; i < order.size(); ++i) order[i] = static_cast<int>(i);
  std::stable_sort(order.begin(), order.end(),
                   [&](int a, int b) { return degree[a] > degree[b]; });
  order.resize(std::min<size_t>(order.size(), limit));
  std::sort(order.begin(), order.end());

  std::map<std::string, int> kept;
  labels.clear();
  for (int old : order) {
    kept.emplace(all[old], static_cast<int>(labels.size()));
    labels.push_back(all[old]);
  }
  std::vector<std::shared_ptr<const DirectedGraph>> out;
  for (const DirectedGraph& g : snapshots) {
    std::vector<Edge> edges;
    for (const Edge& e : g.edges()) {
      const auto s = kept.find(g.labels()[e.source]);
      const auto t = kept.find(g.labels()[e.target]);
      if (s != kept.end() && t != kept.end()) {
        edges.push_back({s->second, t->second, e.weight});
      }
    }
    out.push_back(std::make_shared<const DirectedGraph>(
        static_cast<int>(labels.size()), edges, labels));
  }
  return out;
}

std::string CommandName(ExperimentCommand c) {
  switch (c) {
    case ExperimentCommand::kRun:
      return "run";
    case ExperimentCommand::kSweep:
      return "sweep";
    case ExperimentCommand::kTrace:
      return "trace";
  }
  return "unknown";
}

struct Job {
  int k;
  int m;
  std::string algorithm;
  int repetition;
  uint64_t seed;         // reported in results.csv
  uint64_t oracle_seed;  // shared by every algorithm at this repetition
};

struct JobOutput {
  std::optional<RunRecord> record;
  std::vector<TraceStep> steps;
  int64_t iterations = 0;
  std::string error;
};

}  // namespace

std::shared_ptr<const SetFunction> ParseSyntheticFunction(const std::string& spec) {
  const size_t colon = spec.find(':');
  if (colon == std::string::npos) {
    throw ConfigError("function '" + spec + "' needs the form kind:values");
  }
  const std::string kind = spec.substr(0, colon);
  const std::vector<std::string> parts = Split(spec.substr(colon + 1), ',');
  if (kind == "coverage") {
    std::vector<std::vector<int>> sets;
    int universe = 0;
    for (const std::string& part : parts) {
      std::vector<int> elems;
      for (const std::string& e : Split(part, '+')) {
        if (e.empty()) continue;
        const double v = ToDouble(e, spec);
        if (v < 0 || v != std::floor(v)) {
          throw ConfigError("coverage element '" + e + "' is not a non-negative integer");
        }
        elems.push_back(static_cast<int>(v));
        universe = std::max(universe, elems.back() + 1);
      }
      sets.push_back(std::move(elems));
    }
    return std::make_shared<CoverageFunction>(std::move(sets), universe);
  }
  std::vector<double> weights;
  for (const std::string& p : parts) weights.push_back(ToDouble(p, spec));
  try {
    if (kind == "modular") return std::make_shared<ModularFunction>(weights);
    if (kind == "sqrt") {
      return std::make_shared<ConcaveOfModularFunction>(weights, ConcaveShape::kSqrt);
    }
    if (kind == "log1p") {
      return std::make_shared<ConcaveOfModularFunction>(weights, ConcaveShape::kLog1p);
    }
  } catch (const std::invalid_argument& e) {
    throw ConfigError("function '" + spec + "': " + e.what());
  }
  throw ConfigError("unknown function kind '" + kind + "'");
}

Workload Workload::Prepare(const ExperimentConfig& config) {
  Workload w;
  w.mode_ = config.mode;
  w.r_ = config.r;
  w.policy_ = config.seed_policy;
  w.general_ic_ = config.general_ic;
  switch (config.mode) {
    case ExperimentMode::kPerturbIc: {
      DirectedGraph g = LoadEdgeListFile(config.graph_paths.at(0), &w.warnings_);
      if (g.num_nodes() > config.node_limit) g = TopActiveSubgraph(g, config.node_limit);
      auto graph = std::make_shared<const DirectedGraph>(std::move(g));
      Rng rng(DeriveSeed(config.seed, {kPerturbStream}));
      w.thetas_ = PerturbProbabilities(WeightedCascadeProbabilities(*graph),
                                       config.perturb_lo, config.perturb_hi,
                                       config.m.hi, rng);
      w.labels_ = graph->labels();
      w.graphs_.push_back(std::move(graph));
      w.noisy_ = true;
      break;
    }
    case ExperimentMode::kMultiGraphGeneralIc: {
      std::vector<DirectedGraph> snapshots;
      for (int i = 0; i < config.m.hi; ++i) {
        snapshots.push_back(LoadEdgeListFile(config.graph_paths.at(i), &w.warnings_));
      }
      w.graphs_ = AlignSnapshots(snapshots, config.node_limit, w.labels_);
      w.noisy_ = true;
      break;
    }
    case ExperimentMode::kSynthetic: {
      for (const std::string& spec : config.synthetic_functions) {
        w.functions_.push_back(ParseSyntheticFunction(spec));
      }
      const int n = w.functions_.front()->ground_size();
      for (const auto& f : w.functions_) {
        if (f->ground_size() != n) {
          throw ConfigError("synthetic functions disagree on the number of items");
        }
      }
      w.labels_ = GroundSet(n).labels();
      break;
    }
  }
  return w;
}

int Workload::max_objectives() const {
  switch (mode_) {
    case ExperimentMode::kPerturbIc:
      return static_cast<int>(thetas_.size());
    case ExperimentMode::kMultiGraphGeneralIc:
      return static_cast<int>(graphs_.size());
    case ExperimentMode::kSynthetic:
      return static_cast<int>(functions_.size());
  }
  return 0;
}

int Workload::num_edges() const {
  int edges = 0;
  for (const auto& g : graphs_) edges += g->num_edges();
  return edges;
}

std::unique_ptr<ObjectiveEnsemble> Workload::BuildEnsemble(int m,
                                                           uint64_t oracle_seed) const {
  if (m < 1 || m > max_objectives()) {
    throw ConfigError("m=" + std::to_string(m) + " exceeds the " +
                      std::to_string(max_objectives()) + " prepared objectives");
  }
  std::vector<std::shared_ptr<const SetFunction>> fns;
  for (int i = 0; i < m; ++i) {
    switch (mode_) {
      case ExperimentMode::kPerturbIc:
        fns.push_back(MakeICSpreadFunction(graphs_[0], thetas_[i], r_, policy_,
                                           oracle_seed, i));
        break;
      case ExperimentMode::kMultiGraphGeneralIc:
        fns.push_back(MakeGeneralICSpreadFunction(graphs_[i], general_ic_, r_, policy_,
                                                  oracle_seed, i));
        break;
      case ExperimentMode::kSynthetic:
        fns.push_back(functions_[i]);
        break;
    }
  }
  return std::make_unique<ObjectiveEnsemble>(std::move(fns), labels_);
}

void ValidateFor(const ExperimentConfig& config, ExperimentCommand command) {
  config.Validate();
  const bool ranged = config.k.is_range() || config.m.is_range();
  if (command != ExperimentCommand::kSweep && ranged) {
    throw ConfigError(CommandName(command) + " needs scalar k and m; use sweep");
  }
  if (command == ExperimentCommand::kTrace && !config.HasAlgorithm("eporss")) {
    throw ConfigError("trace needs eporss among the algorithms");
  }
}

std::vector<SummaryRow> Summarize(const std::vector<RunRecord>& records) {
  std::vector<SummaryRow> rows;
  std::vector<std::vector<const RunRecord*>> groups;
  for (const RunRecord& r : records) {
    auto it = std::find_if(rows.begin(), rows.end(), [&](const SummaryRow& s) {
      return s.algorithm == r.algorithm && s.k == r.k && s.m == r.m;
    });
    if (it == rows.end()) {
      rows.push_back({r.algorithm, r.k, r.m});
      groups.emplace_back();
      it = rows.end() - 1;
    }
    groups[it - rows.begin()].push_back(&r);
  }
  for (size_t g = 0; g < rows.size(); ++g) {
    SummaryRow& row = rows[g];
    const auto& members = groups[g];
    row.runs = static_cast<int>(members.size());
    double sum = 0, evals = 0, wall = 0;
    for (const RunRecord* r : members) {
      sum += r->value;
      evals += static_cast<double>(r->evaluations);
      wall += r->wall_ms;
    }
    row.value_mean = sum / row.runs;
    row.evaluations_mean = evals / row.runs;
    row.wall_ms_mean = wall / row.runs;
    if (row.runs > 1) {
      double ss = 0;
      for (const RunRecord* r : members) ss += (r->value - row.value_mean) * (r->value - row.value_mean);
      row.value_std = std::sqrt(ss / (row.runs - 1));
    }
  }
  return rows;
}

ExperimentOutput RunExperiment(const ExperimentConfig& config,
                               ExperimentCommand command) {
  ValidateFor(config, command);
  const Workload workload = Workload::Prepare(config);
  const int n = workload.num_items();
  if (config.k.hi > n) {
    throw ConfigError("k=" + std::to_string(config.k.hi) + " exceeds the " +
                      std::to_string(n) + " available items");
  }
  if (config.m.hi > workload.max_objectives()) {
    throw ConfigError("m exceeds the available objectives");
  }

  ExperimentOutput out;
  out.command = command;
  if (command == ExperimentCommand::kSweep) {
    out.sweep_param = config.m.is_range() ? "m" : "k";
  }

  std::vector<std::pair<int, int>> points;
  for (int k = config.k.lo; k <= config.k.hi; ++k) {
    for (int m = config.m.lo; m <= config.m.hi; ++m) points.emplace_back(k, m);
  }
  const int deterministic_reps = workload.noisy() ? config.repetitions : 1;
  auto oracle_seed = [&](int rep) {
    return DeriveSeed(config.seed, {kOracleStream, static_cast<uint64_t>(rep)});
  };
  std::vector<Job> jobs;
  for (const auto& [k, m] : points) {
    for (const std::string& alg : config.algorithms) {
      if (alg == "eporss") {
        for (int s = 0; s < config.eporss_seeds; ++s) {
          jobs.push_back({k, m, alg, s,
                          DeriveSeed(config.seed, {kEporssStream, static_cast<uint64_t>(s)}),
                          oracle_seed(s)});
        }
      } else {
        for (int rep = 0; rep < deterministic_reps; ++rep) {
          jobs.push_back({k, m, alg, rep, oracle_seed(rep), oracle_seed(rep)});
        }
      }
    }
  }

  std::vector<JobOutput> slots(jobs.size());
  ParallelFor(jobs.size(), [&](size_t j) {
    const Job& job = jobs[j];
    JobOutput& slot = slots[j];
    try {
      const auto ensemble = workload.BuildEnsemble(job.m, job.oracle_seed);
      const auto start = std::chrono::steady_clock::now();
      SelectionResult result;
      if (job.algorithm == "greedy") {
        result = GreedySelect(*ensemble, job.k);
      } else if (job.algorithm == "modified-greedy") {
        result = ModifiedGreedySelect(*ensemble, job.k);
      } else if (job.algorithm == "saturate") {
        result = SaturateSelect(*ensemble, job.k, config.saturate).selection;
      } else {
        EporssOptions options;
        options.iterations = config.eporss_iterations;
        options.seed = job.seed;
        const EporssResult run = EporssRun(*ensemble, job.k, options);
        slot.iterations = run.iterations;
        result = run.selection;
        slot.steps = result.trace.steps;
      }
      const double ms =
          std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - start)
              .count();
      slot.record = RunRecord{job.algorithm,
                              job.k,
                              job.m,
                              job.repetition,
                              job.seed,
                              result.value,
                              ensemble->eval_count(),
                              config.record_timing ? ms : 0.0,
                              result.subset.Join(workload.labels(), ';')};
    } catch (const std::exception& e) {
      slot.error = job.algorithm + " k=" + std::to_string(job.k) +
                   " m=" + std::to_string(job.m) +
                   " repetition=" + std::to_string(job.repetition) + ": " + e.what();
    }
  });

  for (const JobOutput& slot : slots) {
    if (slot.record) out.records.push_back(*slot.record);
    if (!slot.error.empty()) out.errors.push_back(slot.error);
  }
  out.summary = Summarize(out.records);

  if (command == ExperimentCommand::kTrace) {
    const double kn = static_cast<double>(config.k.lo) * n;
    // EPORSS samples share iteration indices across seeds; average them.
    std::vector<int64_t> iterations;
    std::vector<double> sums;
    int runs = 0;
    int64_t horizon = 0;
    for (size_t j = 0; j < jobs.size(); ++j) {
      if (jobs[j].algorithm != "eporss" || !slots[j].record) continue;
      const auto& steps = slots[j].steps;
      if (runs == 0) {
        for (const TraceStep& s : steps) iterations.push_back(s.iteration);
        sums.assign(steps.size(), 0.0);
      }
      for (size_t i = 0; i < steps.size() && i < sums.size(); ++i) sums[i] += steps[i].value;
      horizon = slots[j].iterations;
      ++runs;
    }
    for (size_t i = 0; i < sums.size(); ++i) {
      out.trace.push_back({"eporss", iterations[i], iterations[i] / kn, sums[i] / runs});
    }
    for (const SummaryRow& row : out.summary) {
      if (row.algorithm == "eporss") continue;
      out.trace.push_back({row.algorithm, 0, 0.0, row.value_mean});
      if (horizon > 0) {
        out.trace.push_back({row.algorithm, horizon, horizon / kn, row.value_mean});
      }
    }
  }

  nlohmann::ordered_json meta;
  meta["command"] = CommandName(command);
  meta["library"] = "robsel";
  meta["version"] = ROBSEL_VERSION;
  meta["seed"] = config.seed;
  meta["mode"] = ToString(config.mode);
  meta["oracle_mode"] = workload.noisy() ? ToString(config.seed_policy) : "deterministic";
  if (workload.noisy() && config.HasAlgorithm("eporss")) {
    meta["eporss_oracle_note"] =
        config.seed_policy == SeedPolicy::kMemoizedPerSubset
            ? "archived g1 values are memoized per subset within a run"
            : "archived g1 values are single noisy draws";
  }
  nlohmann::ordered_json echo = nlohmann::ordered_json::object();
  for (const auto& [key, value] : config.entries) echo[key] = value;
  meta["config"] = echo;
  nlohmann::ordered_json resolved;
  resolved["items"] = n;
  resolved["edges"] = workload.num_edges();
  resolved["k"] = {config.k.lo, config.k.hi};
  resolved["m"] = {config.m.lo, config.m.hi};
  resolved["r"] = config.r;
  resolved["algorithms"] = config.algorithms;
  resolved["repetitions"] = deterministic_reps;
  resolved["eporss_seeds"] = config.eporss_seeds;
  nlohmann::ordered_json budgets = nlohmann::ordered_json::array();
  for (int k = config.k.lo; k <= config.k.hi; ++k) {
    budgets.push_back({{"k", k},
                       {"T", config.eporss_iterations < 0 ? DefaultIterations(n, k)
                                                          : config.eporss_iterations}});
  }
  resolved["eporss_T"] = budgets;
  resolved["record_timing"] = config.record_timing;
  meta["resolved"] = resolved;
  meta["warnings"] = workload.warnings();
  meta["errors"] = out.errors;
  out.metadata_json = meta.dump(2) + "\n";
  return out;
}

void WriteResultsCsv(std::ostream& out, const std::vector<RunRecord>& records) {
  out << "algorithm,k,m,repetition,seed,F,evaluations,wall_ms,subset\n";
  for (const RunRecord& r : records) {
    out << r.algorithm << ',' << r.k << ',' << r.m << ',' << r.repetition << ','
        << r.seed << ',' << Num(r.value) << ',' << r.evaluations << ','
        << Num(r.wall_ms) << ',' << r.subset << '\n';
  }
}

namespace {

void WriteSummaryFields(std::ostream& out, const SummaryRow& s) {
  out << s.algorithm << ',' << s.k << ',' << s.m << ',' << s.runs << ','
      << Num(s.value_mean) << ',' << Num(s.value_std) << ','
      << Num(s.evaluations_mean) << ',' << Num(s.wall_ms_mean) << '\n';
}

constexpr char kSummaryHeader[] =
    "algorithm,k,m,runs,F_mean,F_std,evaluations_mean,wall_ms_mean\n";

}  // namespace

void WriteSummaryCsv(std::ostream& out, const std::vector<SummaryRow>& rows) {
  out << kSummaryHeader;
  for (const SummaryRow& s : rows) WriteSummaryFields(out, s);
}

void WriteSweepCsv(std::ostream& out, const std::string& param,
                   const std::vector<SummaryRow>& rows) {
  out << "param,value," << kSummaryHeader;
  for (const SummaryRow& s : rows) {
    out << param << ',' << (param == "m" ? s.m : s.k) << ',';
    WriteSummaryFields(out, s);
  }
}

void WriteTraceCsv(std::ostream& out, const std::vector<TraceRow>& rows) {
  out << "series,iteration,iteration_kn,F\n";
  for (const TraceRow& t : rows) {
    out << t.series << ',' << t.iteration << ',' << Num(t.iteration_kn) << ','
        << Num(t.value) << '\n';
  }
}

void WriteOutputs(const ExperimentOutput& output, const std::string& dir) {
  std::filesystem::create_directories(dir);
  auto open = [&](const std::string& name) {
    std::ofstream f(std::filesystem::path(dir) / name, std::ios::binary);
    if (!f) throw std::runtime_error("cannot write " + name + " in " + dir);
    return f;
  };
  {
    auto f = open("results.csv");
    WriteResultsCsv(f, output.records);
  }
  {
    auto f = open("summary.csv");
    WriteSummaryCsv(f, output.summary);
  }
  if (output.command == ExperimentCommand::kSweep) {
    auto f = open("sweep.csv");
    WriteSweepCsv(f, output.sweep_param, output.summary);
  }
  if (output.command == ExperimentCommand::kTrace) {
    auto f = open("trace.csv");
    WriteTraceCsv(f, output.trace);
  }
  auto f = open("metadata.json");
  f << output.metadata_json;
}

}  // namespace robsel
