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

#include <cmath>
#include <filesystem>
#include <fstream>
#include <map>
#include <sstream>

#include "gtest/gtest.h"
#include "robsel/errors.h"
#include "robsel/rng.h"

namespace robsel {
namespace {

namespace fs = std::filesystem;

std::string TempPath(const std::string& name) {
  const fs::path dir = fs::path(::testing::TempDir()) / "robsel_experiment_test";
  fs::create_directories(dir);
  return (dir / name).string();
}

// Random directed graph written as an edge list with sparse, shuffled ids.
std::string WriteRandomGraph(const std::string& name, int nodes, int edges, uint64_t seed) {
  const std::string path = TempPath(name);
  std::ofstream out(path);
  out << "# random test graph\n";
  Rng rng(seed);
  for (int e = 0; e < edges; ++e) {
    const int u = static_cast<int>(rng() % nodes);
    const int v = static_cast<int>(rng() % nodes);
    out << 3 * u + 1 << ' ' << 3 * v + 1 << '\n';
  }
  return path;
}

ExperimentConfig Parse(const std::string& text) {
  std::istringstream in(text);
  return ParseConfig(in, ".");
}

std::string ToCsv(const std::vector<RunRecord>& records) {
  std::ostringstream out;
  WriteResultsCsv(out, records);
  return out.str();
}

std::string ToCsv(const std::vector<SummaryRow>& rows) {
  std::ostringstream out;
  WriteSummaryCsv(out, rows);
  return out.str();
}

const char kModularPair[] =
    "mode = synthetic\nf1 = modular:3,2,1\nf2 = modular:1,2,3\nalgorithms = all\n";

TEST(SyntheticFunctionTest, Parses) {
  EXPECT_EQ(ParseSyntheticFunction("modular:3,2,1")->Evaluate(Subset::FromItems(3, {0, 2})),
            4.0);
  EXPECT_EQ(ParseSyntheticFunction("coverage:0+1,1,2+3")->Evaluate(Subset::FromItems(3, {0, 2})),
            4.0);
  EXPECT_EQ(ParseSyntheticFunction("sqrt:4,9")->Evaluate(Subset::FromItems(2, {1})), 3.0);
  EXPECT_THROW(ParseSyntheticFunction("modular"), ConfigError);
  EXPECT_THROW(ParseSyntheticFunction("cubic:1,2"), ConfigError);
  EXPECT_THROW(ParseSyntheticFunction("modular:1,x"), ConfigError);
}

TEST(ExperimentTest, SyntheticModularPairAllAlgorithmsFindTwo) {
  const ExperimentOutput out =
      RunExperiment(Parse(std::string(kModularPair) + "k = 1\n"), ExperimentCommand::kRun);
  ASSERT_TRUE(out.errors.empty());
  std::map<std::string, double> best;
  for (const RunRecord& r : out.records) best[r.algorithm] = std::max(best[r.algorithm], r.value);
  ASSERT_EQ(best.size(), 4u);
  for (const auto& [alg, value] : best) EXPECT_EQ(value, 2.0) << alg;
  // Deterministic oracles run once; EPORSS runs once per seed.
  EXPECT_EQ(out.records.size(), 3u + 10u);
  EXPECT_EQ(out.records[0].subset, "v2");
  EXPECT_EQ(out.records[0].evaluations, 3);
}

TEST(ExperimentTest, SweepOverKGivesOneSummaryRowPerPointAndAlgorithm) {
  const ExperimentOutput out = RunExperiment(
      Parse(std::string(kModularPair) + "k = 1..3\neporss-seeds = 2\n"), ExperimentCommand::kSweep);
  EXPECT_EQ(out.summary.size(), 3u * 4u);
  EXPECT_EQ(out.sweep_param, "k");
  std::ostringstream sweep;
  WriteSweepCsv(sweep, out.sweep_param, out.summary);
  const std::string text = sweep.str();
  EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 1 + 12);
  EXPECT_EQ(text.rfind("param,value,algorithm,k,m,runs,F_mean", 0), 0u);
}

TEST(ExperimentTest, SweepOverMOnPerturbedGraph) {
  const std::string graph = WriteRandomGraph("m_sweep.txt", 15, 40, 1);
  const ExperimentOutput out = RunExperiment(
      Parse("graph = " + graph + "\nm = 2..4\nk = 2\nr = 5\nalgorithms = greedy, saturate\n"
            "repetitions = 2\n"),
      ExperimentCommand::kSweep);
  ASSERT_TRUE(out.errors.empty());
  EXPECT_EQ(out.sweep_param, "m");
  EXPECT_EQ(out.summary.size(), 3u * 2u);
  for (const SummaryRow& row : out.summary) EXPECT_EQ(row.runs, 2);
}

TEST(ExperimentTest, DegenerateSweepMatchesRun) {
  const std::string graph = WriteRandomGraph("degenerate.txt", 12, 30, 2);
  const ExperimentConfig config =
      Parse("graph = " + graph + "\nm = 2\nk = 3..3\nr = 5\nalgorithms = greedy, eporss\n"
            "eporss-T = 100\neporss-seeds = 2\nrepetitions = 2\n");
  const ExperimentOutput run = RunExperiment(config, ExperimentCommand::kRun);
  const ExperimentOutput sweep = RunExperiment(config, ExperimentCommand::kSweep);
  EXPECT_EQ(ToCsv(run.records), ToCsv(sweep.records));
  EXPECT_EQ(ToCsv(run.summary), ToCsv(sweep.summary));
}

TEST(ExperimentTest, OutputsAreByteIdenticalAcrossRuns) {
  const std::string graph = WriteRandomGraph("repeat.txt", 20, 60, 3);
  const ExperimentConfig config =
      Parse("graph = " + graph + "\nm = 3\nk = 3\nr = 10\nalgorithms = all\n"
            "eporss-T = 300\neporss-seeds = 3\nrepetitions = 3\nseed = 9\n");
  const std::string a_dir = TempPath("repeat_a");
  const std::string b_dir = TempPath("repeat_b");
  WriteOutputs(RunExperiment(config, ExperimentCommand::kTrace), a_dir);
  WriteOutputs(RunExperiment(config, ExperimentCommand::kTrace), b_dir);
  for (const char* name : {"results.csv", "summary.csv", "trace.csv", "metadata.json"}) {
    std::ifstream a(fs::path(a_dir) / name), b(fs::path(b_dir) / name);
    std::stringstream sa, sb;
    sa << a.rdbuf();
    sb << b.rdbuf();
    EXPECT_FALSE(sa.str().empty()) << name;
    EXPECT_EQ(sa.str(), sb.str()) << name;
  }
}

TEST(ExperimentTest, SummaryMeansMatchResultRows) {
  const std::string graph = WriteRandomGraph("means.txt", 20, 60, 4);
  const ExperimentOutput out = RunExperiment(
      Parse("graph = " + graph + "\nm = 2\nk = 2\nr = 8\nalgorithms = all\n"
            "eporss-T = 200\neporss-seeds = 4\nrepetitions = 5\n"),
      ExperimentCommand::kRun);
  // Re-read the CSV text so the check covers the printed digits.
  std::istringstream csv(ToCsv(out.records));
  std::string line;
  std::getline(csv, line);
  std::map<std::string, std::pair<double, int>> sums;
  while (std::getline(csv, line)) {
    std::vector<std::string> fields;
    std::stringstream ls(line);
    for (std::string f; std::getline(ls, f, ',');) fields.push_back(f);
    auto& [sum, count] = sums[fields[0]];
    sum += std::stod(fields[5]);
    ++count;
  }
  ASSERT_EQ(out.summary.size(), 4u);
  for (const SummaryRow& row : out.summary) {
    const auto& [sum, count] = sums[row.algorithm];
    EXPECT_EQ(row.runs, count);
    EXPECT_NEAR(row.value_mean, sum / count, 1e-12);
  }
}

TEST(ExperimentTest, TraceWithZeroIterations) {
  const ExperimentOutput out = RunExperiment(
      Parse(std::string(kModularPair) + "k = 1\neporss-T = 0\neporss-seeds = 3\n"),
      ExperimentCommand::kTrace);
  std::vector<TraceRow> eporss;
  std::map<std::string, int> baselines;
  for (const TraceRow& row : out.trace) {
    if (row.series == "eporss") {
      eporss.push_back(row);
    } else {
      ++baselines[row.series];
    }
  }
  ASSERT_EQ(eporss.size(), 1u);
  EXPECT_EQ(eporss[0].iteration, 0);
  EXPECT_EQ(eporss[0].value, 0.0);
  EXPECT_EQ(baselines.size(), 3u);
  EXPECT_TRUE(baselines.count("greedy") && baselines.count("modified-greedy") &&
              baselines.count("saturate"));
}

TEST(ExperimentTest, TwoHundredNodeDefaults) {
  const std::string graph = WriteRandomGraph("big.txt", 400, 1500, 5);
  const ExperimentConfig config =
      Parse("graph = " + graph + "\nm = 3\nk = 5\nr = 1\nalgorithms = greedy, eporss\n"
            "repetitions = 1\neporss-seeds = 1\n");
  const ExperimentOutput out = RunExperiment(config, ExperimentCommand::kTrace);
  ASSERT_TRUE(out.errors.empty());
  EXPECT_EQ(out.records[0].algorithm, "greedy");
  EXPECT_EQ(out.records[0].evaluations, 990);
  EXPECT_NE(out.metadata_json.find("\"T\": 27182"), std::string::npos);
  EXPECT_NE(out.metadata_json.find("\"items\": 200"), std::string::npos);
  const TraceRow* last = nullptr;
  for (const TraceRow& row : out.trace) {
    if (row.series == "eporss") last = &row;
  }
  ASSERT_NE(last, nullptr);
  EXPECT_EQ(last->iteration, 27182);
  EXPECT_DOUBLE_EQ(last->iteration_kn, 27.182);
}

TEST(ExperimentTest, MultiGraphSnapshotsAlignOnLabels) {
  const std::string a = TempPath("snap_a.txt");
  const std::string b = TempPath("snap_b.txt");
  std::ofstream(a) << "1 2\n2 3\n3 1\n";
  std::ofstream(b) << "3 4\n4 1\n";
  const ExperimentConfig config =
      Parse("mode = multi-graph-general-ic\ngraphs = " + a + "," + b +
            "\nm = 2\nk = 2\nr = 20\nalgorithms = greedy\nrepetitions = 2\n");
  const Workload w = Workload::Prepare(config);
  EXPECT_EQ(w.labels(), (std::vector<std::string>{"1", "2", "3", "4"}));
  EXPECT_EQ(w.num_edges(), 5);
  const ExperimentOutput out = RunExperiment(config, ExperimentCommand::kRun);
  ASSERT_EQ(out.records.size(), 2u);
  EXPECT_NE(out.metadata_json.find("\"oracle_mode\": \"memoized\""), std::string::npos);
}

TEST(ExperimentTest, RejectsInvalidRequests) {
  EXPECT_THROW(RunExperiment(Parse(std::string(kModularPair) + "k = 4\n"), ExperimentCommand::kRun),
               ConfigError);
  EXPECT_THROW(
      RunExperiment(Parse(std::string(kModularPair) + "k = 1..2\n"), ExperimentCommand::kRun),
      ConfigError);
  EXPECT_THROW(RunExperiment(Parse(std::string(kModularPair) + "k = 1\nalgorithms = greedy\n"),
                             ExperimentCommand::kTrace),
               ConfigError);
  EXPECT_THROW(RunExperiment(Parse("graph = /nonexistent/graph.txt\nm = 2\nk = 1\n"),
                             ExperimentCommand::kRun),
               std::runtime_error);
}

TEST(SummarizeTest, SampleStandardDeviation) {
  std::vector<RunRecord> records;
  for (double v : {1.0, 2.0, 3.0, 4.0}) {
    RunRecord r;
    r.algorithm = "greedy";
    r.value = v;
    r.evaluations = 10;
    records.push_back(r);
  }
  const auto rows = Summarize(records);
  ASSERT_EQ(rows.size(), 1u);
  EXPECT_EQ(rows[0].value_mean, 2.5);
  EXPECT_DOUBLE_EQ(rows[0].value_std, std::sqrt(5.0 / 3.0));
  EXPECT_EQ(rows[0].evaluations_mean, 10.0);
}

}  // namespace
}  // namespace robsel
